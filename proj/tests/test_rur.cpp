#include <gtest/gtest.h>

#include "support.hpp"

using namespace testsupport;

namespace {

MPoly P(const std::string& s, const Ring& r) { return qt::parse_poly(s, r); }

QPoly lam(std::vector<int> c) {
  std::vector<Rat> v;
  for (int x : c) v.push_back(Rat(x));
  return QPoly(std::move(v));
}

/// sum_a w_a prod_{b != a} (t - r_b)
QPoly lagrange_sum(const std::vector<Rat>& roots, const std::vector<Rat>& weights) {
  QPoly acc;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    QPoly term = QPoly::constant(weights[a]);
    for (std::size_t b = 0; b < roots.size(); ++b)
      if (b != a) term = term * QPoly(std::vector<Rat>{-roots[b], Rat(1)});
    acc = acc + term;
  }
  return acc;
}

/// Interpolating polynomial through (xs[i], ys[i]) in the variable x of r.
MPoly lagrange_interp(const Ring& r, const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  MPoly acc(r);
  auto x = MPoly::variable(r, "x");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    MPoly t = MPoly::constant(r, ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) t = t * (x - MPoly::constant(r, xs[j])).scale((xs[i] - xs[j]).inverse());
    acc += t;
  }
  return acc;
}

}  // namespace

TEST(CandidateFamily, Examples) {
  EXPECT_EQ(qt::candidate_family(Ring({"x"}), 5).size(), 1u);
  Ring r2({"x", "y"});
  auto f2 = qt::candidate_family(r2, 4);
  ASSERT_EQ(f2.size(), 7u);
  EXPECT_EQ(qt::print_poly(f2[6]), "x + 6*y");
  Ring r3({"x", "y", "z"});
  auto f3 = qt::candidate_family(r3, 2);
  ASSERT_EQ(f3.size(), 3u);
  EXPECT_EQ(qt::print_poly(f3[0]), "x");
  EXPECT_EQ(qt::print_poly(f3[1]), "x + y + z");
  EXPECT_EQ(qt::print_poly(f3[2]), "x + 2*y + 4*z");
}

TEST(SelectSeparating, Examples) {
  Ring r({"x", "y"});
  auto s = qt::select_separating(qt::buchberger({P("x^2-2", r), P("y^2-3", r)}));
  EXPECT_EQ(qt::print_poly(s.sigma), "x + y");
  EXPECT_EQ(s.summary.geo_count, 4);
  auto s1 = qt::select_separating(qt::buchberger({P("x-1", r), P("y-2", r)}));
  EXPECT_EQ(qt::print_poly(s1.sigma), "x");
  Ring rx({"x"});
  auto s2 = qt::select_separating(qt::buchberger({P("x^2-2", rx)}));
  EXPECT_EQ(s2.summary.geo_count, 2);
}

TEST(SquarefreePart, Examples) {
  EXPECT_EQ(qt::squarefree_part(lam({0, 0, 1})), lam({0, 1}));
  auto sq = lam({-1, 0, 1});
  EXPECT_EQ(qt::squarefree_part(sq * sq), sq);
  EXPECT_EQ(euclid_gcd(sq * sq, (sq * sq).derivative()), sq);
  EXPECT_EQ(qt::squarefree_part(lam({1, 0, -10, 0, 1})), lam({1, 0, -10, 0, 1}));
}

TEST(RurNumerator, Examples) {
  Ring rx({"x"});
  auto gb = qt::buchberger({P("x^2-2", rx)});
  auto qb = qt::quotient_basis(gb);
  auto u = lam({-2, 0, 1});
  EXPECT_EQ(qt::rur_numerator(P("1", rx), P("x", rx), u, gb, qb), lam({0, 2}));
  EXPECT_EQ(qt::rur_numerator(P("x", rx), P("x", rx), u, gb, qb), lam({4}));
  auto gb1 = qt::buchberger({P("x-7", rx)});
  EXPECT_EQ(qt::rur_numerator(P("1", rx), P("x", rx), lam({-7, 1}), gb1, qt::quotient_basis(gb1)), lam({1}));
}

TEST(RurBuild, Examples) {
  Ring rx({"x"});
  auto r = qt::rur_build(qt::buchberger({P("x^2-2", rx)}));
  EXPECT_EQ(r.u, lam({-2, 0, 1}));
  EXPECT_EQ(r.g, lam({0, 2}));
  EXPECT_EQ(r.numerators[0], lam({4}));
  // x = 4 / (2t); (4)^2 - 2 (2t)^2 = 16 - 8 t^2 vanishes mod t^2 - 2
  EXPECT_TRUE(qt::rem(lam({16, 0, -8}), r.u).is_zero());
  auto r5 = qt::rur_build(qt::buchberger({P("x-5", rx)}));
  EXPECT_EQ(r5.u, lam({-5, 1}));
  EXPECT_EQ(r5.g, lam({1}));
  EXPECT_EQ(r5.numerators[0], lam({5}));
  Ring r2({"x", "y"});
  auto gens = std::vector<MPoly>{P("x^2-2", r2), P("y^2-3", r2)};
  auto rr = qt::rur_build(qt::buchberger(gens), gens);
  EXPECT_EQ(qt::print_poly(rr.sigma), "x + y");
  EXPECT_EQ(rr.u, lam({1, 0, -10, 0, 1}));
  // (g_x/g)^2 - 2 and (g_y/g)^2 - 3 vanish modulo u, checked by hand here
  auto gx = rr.numerators[0], gy = rr.numerators[1], g = rr.g;
  EXPECT_TRUE(qt::rem(gx * gx - g * g * lam({2}), rr.u).is_zero());
  EXPECT_TRUE(qt::rem(gy * gy - g * g * lam({3}), rr.u).is_zero());
}

TEST(RurBuild, NotZeroDimensional) {
  Ring r({"x", "y"});
  try {
    qt::rur_build(qt::buchberger({P("x*y-1", r)}));
    ADD_FAILURE();
  } catch (const qt::Error& e) {
    EXPECT_EQ(e.kind(), qt::ErrorKind::NotZeroDimensional);
  }
}

// Property suites.

TEST(RurProperties, UnivariateSplitIdealsMatchLagrange) {
  std::mt19937_64 rng(51);
  Ring rx({"x"});
  for (int k = 0; k < 20; ++k) {
    std::set<Rat> seen;
    std::vector<Rat> roots;
    std::vector<Rat> mult;
    int n = 1 + static_cast<int>(rng() % 4);
    while (static_cast<int>(roots.size()) < n) {
      Rat a = random_rat(rng, 6);
      if (seen.insert(a).second) {
        roots.push_back(a);
        mult.push_back(Rat(1 + static_cast<long>(rng() % 2)));
      }
    }
    MPoly f = MPoly::constant(rx, Rat(1));
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (int m = 0; m < mult[i].num().get_si(); ++m) f = f * (P("x", rx) - MPoly::constant(rx, roots[i]));
    auto r = qt::rur_build(qt::buchberger({f}), {f});
    EXPECT_EQ(r.u, from_roots(roots));
    EXPECT_EQ(r.g, qt::rem(lagrange_sum(roots, mult), r.u));
    std::vector<Rat> wx;
    for (std::size_t i = 0; i < roots.size(); ++i) wx.push_back(mult[i] * roots[i]);
    EXPECT_EQ(r.numerators[0], qt::rem(lagrange_sum(roots, wx), r.u));
    if (std::all_of(mult.begin(), mult.end(), [](const Rat& m) { return m.is_one(); })) {
      EXPECT_EQ(r.g, r.u.derivative());
    }
  }
}

TEST(RurProperties, PointSetsInThePlane) {
  std::mt19937_64 rng(52);
  Ring r({"x", "y"});
  for (int k = 0; k < 20; ++k) {
    std::set<Rat> seen;
    std::vector<Rat> xs, ys;
    int n = 1 + static_cast<int>(rng() % 5);
    while (static_cast<int>(xs.size()) < n) {
      Rat a = random_rat(rng, 6, false);
      if (seen.insert(a).second) {
        xs.push_back(a);
        ys.push_back(random_rat(rng, 6));
      }
    }
    MPoly fx = MPoly::constant(r, Rat(1));
    for (const auto& a : xs) fx = fx * (P("x", r) - MPoly::constant(r, a));
    std::vector<MPoly> gens{fx, P("y", r) - lagrange_interp(r, xs, ys)};
    auto gb = qt::buchberger(gens);
    auto rr = qt::rur_build(gb, gens);
    EXPECT_EQ(static_cast<int>(rr.u.degree()), n);
    // sigma = x + i y; recover the point coordinates through the roots of u
    std::vector<Rat> sig;
    for (int i = 0; i < n; ++i) {
      Rat c = rr.sigma.coeff({0, 1});
      sig.push_back(xs[static_cast<std::size_t>(i)] + c * ys[static_cast<std::size_t>(i)]);
    }
    EXPECT_EQ(rr.u, from_roots(sig));
    EXPECT_EQ(rr.g, qt::rem(lagrange_sum(sig, std::vector<Rat>(sig.size(), Rat(1))), rr.u));
    EXPECT_EQ(rr.numerators[0], qt::rem(lagrange_sum(sig, xs), rr.u));
    EXPECT_EQ(rr.numerators[1], qt::rem(lagrange_sum(sig, ys), rr.u));
    EXPECT_EQ(qt::field_gcd(rr.u, rr.u.derivative()).degree(), 0);
    EXPECT_EQ(qt::field_gcd(rr.g, rr.u).degree(), 0);
  }
}

TEST(RurProperties, SelectionIgnoresGeneratorOrder) {
  Ring r({"x", "y"});
  std::vector<MPoly> a{P("x^2-2", r), P("y^2-3", r), P("x*y^2-3*x", r)};
  std::vector<MPoly> b{a[2], a[1], a[0]};
  auto sa = qt::select_separating(qt::buchberger(a));
  auto sb = qt::select_separating(qt::buchberger(b));
  EXPECT_EQ(sa.sigma, sb.sigma);
  EXPECT_EQ(sa.summary.geo_count, sb.summary.geo_count);
}
