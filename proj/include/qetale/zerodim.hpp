#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "qetale/matrix.hpp"
#include "qetale/polynomial.hpp"
#include "qetale/realroots.hpp"
#include "qetale/upoly.hpp"

namespace qetale {

inline constexpr std::size_t kDefaultPairLimit = 100000;

/// Reduced Groebner basis: monic generators sorted by increasing leading
/// monomial. The unit ideal is represented by {1}.
template <class C>
struct GroebnerBasis {
  Ring ring;
  std::vector<Polynomial<C>> gens;

  bool is_unit() const { return gens.size() == 1 && gens[0].is_constant(); }
};

/// Fully reduced remainder of f modulo the polynomials in G.
template <class C>
Polynomial<C> normal_form(Polynomial<C> f, const std::vector<Polynomial<C>>& G) {
  Polynomial<C> out(f.ring(), f.context());
  std::vector<typename Polynomial<C>::Term> done;
  while (!f.is_zero()) {
    const auto& t = f.lt();
    const Polynomial<C>* red = nullptr;
    for (const auto& g : G)
      if (!g.is_zero() && divides(g.lm(), t.mono)) {
        red = &g;
        break;
      }
    if (red) {
      Monomial m = mono_div(t.mono, red->lm());
      C c = t.coeff / red->lc();
      f -= red->mul_term(m, c);
    } else {
      done.push_back(t);
      f -= Polynomial<C>::monomial(f.ring(), t.mono, t.coeff, f.context());
    }
  }
  return Polynomial<C>::from_terms(out.ring(), std::move(done), out.context());
}

template <class C>
Polynomial<C> normal_form(const Polynomial<C>& f, const GroebnerBasis<C>& gb) {
  return normal_form(f, gb.gens);
}

template <class C>
Polynomial<C> make_monic(const Polynomial<C>& p) {
  if (p.is_zero()) return p;
  return p.scale(coeff_traits<C>::one(p.context()) / p.lc());
}

namespace detail {

template <class C>
Polynomial<C> spoly(const Polynomial<C>& f, const Polynomial<C>& g) {
  Monomial l = mono_lcm(f.lm(), g.lm());
  auto one = coeff_traits<C>::one(f.context());
  return f.mul_term(mono_div(l, f.lm()), one / f.lc()) - g.mul_term(mono_div(l, g.lm()), one / g.lc());
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace detail

/// Buchberger's algorithm with the Gebauer-Moeller criteria. Pairs are taken
/// in the normal strategy (smallest lcm by total degree, then by the
/// monomial order, then by generator index), so the result is deterministic.
template <class C>
GroebnerBasis<C> buchberger(const std::vector<Polynomial<C>>& input, const Ring& ring,
                            std::size_t pair_limit = kDefaultPairLimit) {
  using P = Polynomial<C>;
  for (const auto& f : input)
    if (!(f.ring() == ring)) fail(ErrorKind::Domain, "generator ring differs from the Groebner ring");
  const auto& ord = ring.order();
  std::vector<P> polys;
  std::vector<bool> active;
  std::vector<detail::Pair> pairs;

  auto insert = [&](P h) {
    h = make_monic(h);
    const std::size_t k = polys.size();
    const Monomial hl = h.lm();
    polys.push_back(std::move(h));
    active.push_back(true);
    // Gebauer-Moeller update.
    std::vector<detail::Pair> cand;
    for (std::size_t i = 0; i < k; ++i)
      if (active[i]) cand.push_back({i, k, mono_lcm(polys[i].lm(), hl)});
    std::vector<detail::Pair> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      const auto& p = cand[a];
      if (detail::coprime(polys[p.i].lm(), hl)) {
        kept.push_back(p);
        continue;
      }
      bool redundant = false;
      for (std::size_t b = 0; b < cand.size() && !redundant; ++b) {
        if (b == a) continue;
        const auto& q = cand[b];
        if (!divides(q.lcm, p.lcm)) continue;
        if (q.lcm == p.lcm) redundant = b < a || detail::coprime(polys[q.i].lm(), hl);
        else redundant = true;
      }
      if (!redundant) kept.push_back(p);
    }
    std::vector<detail::Pair> next;
    for (auto& p : pairs) {
      if (divides(hl, p.lcm) && mono_lcm(polys[p.i].lm(), hl) != p.lcm && mono_lcm(polys[p.j].lm(), hl) != p.lcm)
        continue;
      next.push_back(std::move(p));
    }
    for (auto& p : kept)
      if (!detail::coprime(polys[p.i].lm(), hl)) next.push_back(std::move(p));
    pairs = std::move(next);
    for (std::size_t i = 0; i < k; ++i)
      if (active[i] && divides(hl, polys[i].lm())) active[i] = false;
  };

  auto reducers = [&]() {
    std::vector<P> r;
    for (std::size_t i = 0; i < polys.size(); ++i)
      if (active[i]) r.push_back(polys[i]);
    return r;
  };

  for (const auto& f : input) {
    P h = normal_form(f, reducers());
    if (h.is_zero()) continue;
    if (h.is_constant()) return {ring, {make_monic(h)}};
    insert(std::move(h));
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const detail::Pair& a, const detail::Pair& b) {
      auto da = total_degree(a.lcm), db = total_degree(b.lcm);
      if (da != db) return da < db;
      int c = ord.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    detail::Pair pr = *best;
    pairs.erase(best);
    if (++processed > pair_limit) fail(ErrorKind::ResourceLimit, "S-pair limit exceeded in Groebner basis computation");
    P h = normal_form(detail::spoly(polys[pr.i], polys[pr.j]), reducers());
    if (h.is_zero()) continue;
    if (h.is_constant()) return {ring, {make_monic(h)}};
    insert(std::move(h));
  }

  // Inter-reduce the minimal basis.
  std::vector<P> minimal = reducers();
  std::vector<P> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<P> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.push_back(make_monic(normal_form(minimal[i], others)));
  }
  std::sort(out.begin(), out.end(), [&](const P& a, const P& b) { return ord.compare(a.lm(), b.lm()) < 0; });
  return {ring, std::move(out)};
}

inline GroebnerBasis<Rat> buchberger(const std::vector<MPoly>& input, std::size_t pair_limit = kDefaultPairLimit) {
  if (input.empty()) fail(ErrorKind::Domain, "Groebner basis of an empty generator list needs a ring");
  return buchberger<Rat>(input, input.front().ring(), pair_limit);
}

/// Standard monomials of a zero-dimensional ideal.
struct QuotientBasis {
  std::vector<Monomial> monomials;
  std::size_t dim() const { return monomials.size(); }
  std::optional<std::size_t> index_of(const Monomial& m) const {
    auto it = std::find(monomials.begin(), monomials.end(), m);
    if (it == monomials.end()) return std::nullopt;
    return static_cast<std::size_t>(it - monomials.begin());
  }
};

inline bool is_pure_power(const Monomial& m, std::size_t var) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if ((i == var) != (m[i] > 0)) return false;
  return true;
}

template <class C>
QuotientBasis quotient_basis(const GroebnerBasis<C>& gb) {
  const std::size_t n = gb.ring.size();
  if (gb.is_unit()) return {};
  std::vector<Monomial> lms;
  for (const auto& g : gb.gens) lms.push_back(g.lm());
  for (std::size_t v = 0; v < n; ++v) {
    bool ok = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) { return is_pure_power(m, v); });
    if (!ok) fail(ErrorKind::NotZeroDimensional, "variable " + gb.ring.name(v) + " has no pure power among leading monomials");
  }
  auto standard = [&](const Monomial& m) {
    return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return divides(l, m); });
  };
  std::vector<Monomial> out;
  std::vector<Monomial> frontier{Monomial(n, 0)};
  std::set<Monomial> seen{frontier[0]};
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      if (!standard(m)) continue;
      out.push_back(m);
      for (std::size_t v = 0; v < n; ++v) {
        Monomial e = m;
        ++e[v];
        if (seen.insert(e).second) next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }
  const auto& ord = gb.ring.order();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) < 0; });
  return {std::move(out)};
}

/// Coordinates of a reduced polynomial in the monomial basis.
template <class C>
std::vector<C> coordinates(const Polynomial<C>& nf, const QuotientBasis& qb, const C& zero) {
  std::vector<C> v(qb.dim(), zero);
  for (const auto& t : nf.terms()) {
    auto i = qb.index_of(t.mono);
    if (!i) fail(ErrorKind::InvariantViolation, "normal form has a non-standard monomial");
    v[*i] = t.coeff;
  }
  return v;
}

/// Matrix of multiplication by sigma; column j holds the coordinates of
/// NF(sigma * m_j).
template <class C>
Matrix<C> mult_matrix(const Polynomial<C>& sigma, const GroebnerBasis<C>& gb, const QuotientBasis& qb) {
  const std::size_t d = qb.dim();
  if (d == 0) fail(ErrorKind::Domain, "multiplication matrix on the zero algebra");
  C zero = coeff_traits<C>::zero(sigma.context());
  Matrix<C> m(d, d, zero);
  for (std::size_t j = 0; j < d; ++j) {
    auto one = coeff_traits<C>::one(sigma.context());
    auto col = coordinates(normal_form(sigma.mul_term(qb.monomials[j], one), gb), qb, zero);
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
  }
  return m;
}

inline std::pair<Rat, Rat> trace_det(const MPoly& sigma, const GroebnerBasis<Rat>& gb, const QuotientBasis& qb) {
  auto m = mult_matrix(sigma, gb, qb);
  return {m.trace(), determinant(m)};
}

struct FiberSummary {
  QPoly charpoly;
  QPoly sqfree;
  int geo_count = 0;
  /// (root, multiplicity) when the characteristic polynomial splits over Q.
  std::optional<std::vector<std::pair<Rat, int>>> multiplicities;
};

inline FiberSummary fiber_summary(const GroebnerBasis<Rat>& gb, const MPoly& sigma) {
  auto qb = quotient_basis(gb);
  FiberSummary fs;
  if (qb.dim() == 0) {
    fs.charpoly = QPoly::constant(Rat(1));
    fs.sqfree = fs.charpoly;
    fs.multiplicities = std::vector<std::pair<Rat, int>>{};
    return fs;
  }
  fs.charpoly = char_poly(mult_matrix(sigma, gb, qb));
  fs.sqfree = squarefree_part(fs.charpoly);
  fs.geo_count = fs.sqfree.degree();
  std::vector<std::pair<Rat, int>> mult;
  int total = 0;
  for (const Rat& a : rational_roots(fs.sqfree)) {
    QPoly lin(std::vector<Rat>{-a, Rat(1)});
    QPoly c = fs.charpoly;
    int mu = 0;
    for (;;) {
      auto [q, r] = divmod(c, lin);
      if (!r.is_zero()) break;
      c = q;
      ++mu;
    }
    mult.emplace_back(a, mu);
    total += mu;
  }
  if (total == fs.charpoly.degree()) fs.multiplicities = std::move(mult);
  return fs;
}

}  // namespace qetale
