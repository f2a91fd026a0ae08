#include <gtest/gtest.h>

#include "support.hpp"

using namespace testsupport;

namespace {

MPoly P(const std::string& s, const Ring& r) { return qt::parse_poly(s, r); }

std::vector<MPoly> Ps(std::initializer_list<const char*> xs, const Ring& r) {
  std::vector<MPoly> out;
  for (auto x : xs) out.push_back(P(x, r));
  return out;
}

std::vector<std::string> printed(const qt::GroebnerBasis<Rat>& gb) {
  std::vector<std::string> s;
  for (const auto& g : gb.gens) s.push_back(qt::print_poly(g));
  return s;
}

QPoly lam(std::vector<int> c) {
  std::vector<Rat> v;
  for (int x : c) v.push_back(Rat(x));
  return QPoly(std::move(v));
}

/// Ideal <prod (x - a_i)^mu_i, prod (y - b_j)^nu_j> of a weighted grid.
std::vector<MPoly> grid_ideal(const Ring& r, const std::vector<std::pair<Rat, int>>& xs,
                              const std::vector<std::pair<Rat, int>>& ys) {
  auto one = MPoly::constant(r, Rat(1));
  MPoly f = one, g = one;
  for (auto& [a, m] : xs)
    for (int k = 0; k < m; ++k) f = f * (MPoly::variable(r, 0) - MPoly::constant(r, a));
  for (auto& [b, m] : ys)
    for (int k = 0; k < m; ++k) g = g * (MPoly::variable(r, 1) - MPoly::constant(r, b));
  return {f, g};
}

}  // namespace

TEST(Buchberger, Examples) {
  Ring r({"x", "y"});
  EXPECT_EQ(printed(qt::buchberger(Ps({"x^2-2", "y^2-3"}, r))), (std::vector<std::string>{"y^2 - 3", "x^2 - 2"}));
  EXPECT_EQ(printed(qt::buchberger(Ps({"x-y", "x+y"}, r))), (std::vector<std::string>{"y", "x"}));
  Ring rx({"x"});
  EXPECT_EQ(printed(qt::buchberger(Ps({"x^2-1", "x-1"}, rx))), (std::vector<std::string>{"x - 1"}));
  EXPECT_TRUE(qt::buchberger(Ps({"x", "x+1"}, rx)).is_unit());
}

TEST(Buchberger, PairLimit) {
  Ring r({"x", "y"});
  try {
    qt::buchberger(Ps({"x^2-y", "x*y-1"}, r), 0);
    ADD_FAILURE();
  } catch (const qt::Error& e) {
    EXPECT_EQ(e.kind(), qt::ErrorKind::ResourceLimit);
  }
  EXPECT_NO_THROW(qt::buchberger(Ps({"x^2-y", "x*y-1"}, r), 100));
}

TEST(QuotientBasis, Examples) {
  Ring r({"x", "y"});
  auto qb = qt::quotient_basis(qt::buchberger(Ps({"x^2-2", "y^2-3"}, r)));
  ASSERT_EQ(qb.dim(), 4u);
  EXPECT_EQ(qb.monomials[0], (qt::Monomial{0, 0}));
  EXPECT_EQ(qb.monomials[1], (qt::Monomial{0, 1}));
  EXPECT_EQ(qb.monomials[2], (qt::Monomial{1, 0}));
  EXPECT_EQ(qb.monomials[3], (qt::Monomial{1, 1}));
  Ring rx({"x"});
  EXPECT_EQ(qt::quotient_basis(qt::buchberger(Ps({"x-1"}, rx))).dim(), 1u);
  try {
    qt::quotient_basis(qt::buchberger(Ps({"x*y-1"}, r)));
    ADD_FAILURE();
  } catch (const qt::Error& e) {
    EXPECT_EQ(e.kind(), qt::ErrorKind::NotZeroDimensional);
  }
  EXPECT_EQ(qt::quotient_basis(qt::buchberger(Ps({"x", "x-1"}, r))).dim(), 0u);
}

TEST(MultMatrix, Examples) {
  Ring rx({"x"});
  auto gb = qt::buchberger(Ps({"x^2-2"}, rx));
  auto qb = qt::quotient_basis(gb);
  auto m = qt::mult_matrix(P("x", rx), gb, qb);
  EXPECT_EQ(m(0, 0), Rat(0));
  EXPECT_EQ(m(0, 1), Rat(2));
  EXPECT_EQ(m(1, 0), Rat(1));
  EXPECT_EQ(m(1, 1), Rat(0));
  EXPECT_EQ(qt::mult_matrix(P("1", rx), gb, qb), qt::Matrix<Rat>::identity(2, Rat(0)));
  EXPECT_EQ(qt::char_poly(m), lam({-2, 0, 1}));
  Ring r({"x", "y"});
  auto gb2 = qt::buchberger(Ps({"x^2-2", "y^2-3"}, r));
  auto qb2 = qt::quotient_basis(gb2);
  auto m2 = qt::mult_matrix(P("x+y", r), gb2, qb2);
  EXPECT_EQ(m2.trace(), Rat(0));
  EXPECT_EQ(qt::char_poly(m2), lam({1, 0, -10, 0, 1}));
  EXPECT_EQ(qt::char_poly(qt::Matrix<Rat>::identity(3, Rat(0))), lam({-1, 3, -3, 1}));
}

TEST(TraceDet, Examples) {
  Ring rx({"x"});
  auto gb = qt::buchberger(Ps({"(x-1)*(x-2)*(x-3)"}, rx));
  auto qb = qt::quotient_basis(gb);
  EXPECT_EQ(qt::trace_det(P("x", rx), gb, qb), std::make_pair(Rat(6), Rat(6)));
  EXPECT_EQ(qt::trace_det(P("1", rx), gb, qb), std::make_pair(Rat(3), Rat(1)));
  Ring r({"x", "y"});
  auto gb2 = qt::buchberger(Ps({"x^2-2", "y^2-3"}, r));
  EXPECT_EQ(qt::trace_det(P("x+y", r), gb2, qt::quotient_basis(gb2)), std::make_pair(Rat(0), Rat(1)));
}

TEST(FiberSummary, Examples) {
  Ring rx({"x"});
  auto fat = qt::fiber_summary(qt::buchberger(Ps({"x^2"}, rx)), P("x", rx));
  EXPECT_EQ(fat.charpoly, lam({0, 0, 1}));
  EXPECT_EQ(fat.sqfree, lam({0, 1}));
  EXPECT_EQ(fat.geo_count, 1);
  ASSERT_TRUE(fat.multiplicities.has_value());
  EXPECT_EQ(fat.multiplicities->at(0), std::make_pair(Rat(0), 2));
  Ring r({"x", "y"});
  auto gb = qt::buchberger(Ps({"x^2-2", "y^2-3"}, r));
  EXPECT_EQ(qt::fiber_summary(gb, P("x+y", r)).geo_count, 4);
  auto fx = qt::fiber_summary(gb, P("x", r));
  EXPECT_EQ(fx.geo_count, 2);
  EXPECT_EQ(fx.charpoly, lam({-2, 0, 1}) * lam({-2, 0, 1}));
  EXPECT_FALSE(fx.multiplicities.has_value());
}

// Property suites.

TEST(ZerodimProperties, GeneratorsReduceToZeroAndNormalFormIsLinear) {
  std::mt19937_64 rng(41);
  Ring r({"x", "y", "z"});
  for (int k = 0; k < 30; ++k) {
    std::vector<MPoly> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_mpoly(rng, r, 3, 2, 4));
    auto gb = qt::buchberger(gens);
    for (const auto& g : gens) EXPECT_TRUE(qt::normal_form(g, gb).is_zero());
    for (std::size_t i = 0; i < gb.gens.size(); ++i) {
      EXPECT_TRUE(gb.gens[i].lc().is_one());
      for (std::size_t j = 0; j < gb.gens.size(); ++j)
        if (i != j) {
          EXPECT_FALSE(qt::divides(gb.gens[j].lm(), gb.gens[i].lm()));
        }
    }
    auto a = random_mpoly(rng, r, 5, 4), b = random_mpoly(rng, r, 5, 4);
    auto na = qt::normal_form(a, gb);
    EXPECT_EQ(qt::normal_form(na, gb), na);
    EXPECT_EQ(qt::normal_form(a + b.scale(Rat(3)), gb), na + qt::normal_form(b, gb).scale(Rat(3)));
  }
}

TEST(ZerodimProperties, DimensionIndependentOfOrder) {
  std::mt19937_64 rng(42);
  Ring gr({"x", "y"});
  Ring lx({"x", "y"}, qt::MonomialOrder::lex());
  for (int k = 0; k < 50; ++k) {
    auto fx = random_mpoly(rng, Ring({"x"}), 3, 3, 5);
    MPoly f = qt::embed(fx, gr) + qt::parse_poly("x^4", gr);
    MPoly g = qt::parse_poly("y^2", gr) + random_mpoly(rng, gr, 3, 2, 5);
    MPoly h = random_mpoly(rng, gr, 3, 3, 5);
    std::vector<MPoly> a{f, g, h}, b{qt::embed(f, lx), qt::embed(g, lx), qt::embed(h, lx)};
    EXPECT_EQ(qt::quotient_basis(qt::buchberger(a)).dim(), qt::quotient_basis(qt::buchberger(b)).dim()) << k;
  }
}

TEST(ZerodimProperties, CayleyHamilton) {
  std::mt19937_64 rng(43);
  Ring r({"x", "y"});
  int checked = 0;
  for (int k = 0; k < 60 && checked < 25; ++k) {
    std::vector<std::pair<Rat, int>> xs, ys;
    int nx = 1 + static_cast<int>(rng() % 3), ny = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < nx; ++i) xs.push_back({Rat(static_cast<long>(i) - 1), 1 + static_cast<int>(rng() % 2)});
    for (int i = 0; i < ny; ++i) ys.push_back({Rat(2 * static_cast<long>(i) + 1), 1 + static_cast<int>(rng() % 2)});
    auto gb = qt::buchberger(grid_ideal(r, xs, ys));
    auto qb = qt::quotient_basis(gb);
    if (qb.dim() > 8) continue;
    auto m = qt::mult_matrix(random_mpoly(rng, r, 3, 2, 3), gb, qb);
    EXPECT_TRUE(qt::eval_at_matrix(qt::char_poly(m), m).is_zero());
    ++checked;
  }
  EXPECT_GE(checked, 20);
}

TEST(ZerodimProperties, StickelbergerOnSplitIdeals) {
  std::mt19937_64 rng(44);
  Ring r({"x", "y"});
  for (int k = 0; k < 25; ++k) {
    std::vector<std::pair<Rat, int>> xs, ys;
    std::set<Rat> usedx, usedy;
    int nx = 1 + static_cast<int>(rng() % 3), ny = 1 + static_cast<int>(rng() % 2);
    while (static_cast<int>(xs.size()) < nx) {
      Rat a = random_rat(rng, 5);
      if (usedx.insert(a).second) xs.push_back({a, 1 + static_cast<int>(rng() % 2)});
    }
    while (static_cast<int>(ys.size()) < ny) {
      Rat b = random_rat(rng, 5);
      if (usedy.insert(b).second) ys.push_back({b, 1 + static_cast<int>(rng() % 2)});
    }
    auto gb = qt::buchberger(grid_ideal(r, xs, ys));
    auto qb = qt::quotient_basis(gb);
    Rat tr(0), det(1);
    for (auto& [a, m] : xs)
      for (auto& [b, n] : ys) {
        Rat s = a + Rat(2) * b;
        tr += Rat(m * n) * s;
        det *= s.pow(static_cast<unsigned>(m * n));
      }
    EXPECT_EQ(qt::trace_det(qt::parse_poly("x + 2*y", r), gb, qb), std::make_pair(tr, det));
    // geometric count: the argmax over the candidate family recovers the
    // number of distinct grid points
    int best = 0;
    for (const auto& s : qt::candidate_family(r, qb.dim()))
      best = std::max(best, qt::fiber_summary(gb, s).geo_count);
    EXPECT_EQ(best, nx * ny);
  }
}
