#pragma once

#include <string>
#include <vector>

#include "qetale/zerodim.hpp"

namespace qetale {

/// Solutions of a zero-dimensional ideal as x_i = g_i(t) / g(t) over the
/// roots of the monic square-free u(t).
struct RUR {
  Ring ring;
  MPoly sigma;
  QPoly u;
  QPoly g;
  std::vector<QPoly> numerators;
  std::vector<Rat> u_coeffs;
};

/// sigma_i = x_1 + i x_2 + ... + i^(n-1) x_n for 0 <= i <= (n-1) * C(d, 2).
inline std::vector<MPoly> candidate_family(const Ring& ring, std::size_t d) {
  const std::size_t n = ring.size();
  if (n == 0 || d == 0) fail(ErrorKind::Precondition, "candidate family needs n >= 1 and d >= 1");
  const std::size_t bound = (n - 1) * (d * (d - 1) / 2);
  std::vector<MPoly> out;
  for (std::size_t i = 0; i <= bound; ++i) {
    MPoly s(ring);
    Rat w(1);
    for (std::size_t k = 0; k < n; ++k) {
      s += MPoly::variable(ring, k).scale(w);
      w = w * Rat(static_cast<long>(i));
    }
    out.push_back(std::move(s));
  }
  return out;
}

struct Separating {
  MPoly sigma;
  FiberSummary summary;
  std::size_t index = 0;
};

/// The candidate with the largest square-free degree; smallest index on ties.
inline Separating select_separating(const GroebnerBasis<Rat>& gb) {
  auto qb = quotient_basis(gb);
  if (qb.dim() == 0) fail(ErrorKind::Precondition, "separating element of the empty variety");
  auto family = candidate_family(gb.ring, qb.dim());
  std::optional<Separating> best;
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto fs = fiber_summary(gb, family[i]);
    if (!best || fs.geo_count > best->summary.geo_count) best = Separating{family[i], std::move(fs), i};
    if (best->summary.geo_count == static_cast<int>(qb.dim())) break;
  }
  return *best;
}

/// sum_{l<d} sum_{i<d-l} tr(L_{f sigma^i}) u_{l+i+1} t^l with u_j = 0 for
/// j > deg u.
template <class D>
UPoly<D> rur_sum(const Matrix<D>& lf, const Matrix<D>& ls, const UPoly<D>& u, const D& zero) {
  const std::size_t d = ls.rows();
  std::vector<D> traces;
  Matrix<D> acc = lf;
  for (std::size_t i = 0; i < d; ++i) {
    traces.push_back(acc.trace());
    if (i + 1 < d) acc = acc * ls;
  }
  std::vector<D> out(d, zero);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t i = 0; i + l < d; ++i) {
      std::size_t k = l + i + 1;
      if (k >= u.coeffs().size()) continue;
      out[l] = out[l] + traces[i] * u.coeffs()[k];
    }
  return UPoly<D>(std::move(out));
}

inline QPoly rur_numerator(const MPoly& f, const MPoly& sigma, const QPoly& u, const GroebnerBasis<Rat>& gb,
                           const QuotientBasis& qb) {
  auto lf = mult_matrix(f, gb, qb);
  auto ls = mult_matrix(sigma, gb, qb);
  return rur_sum(lf, ls, u, Rat(0));
}

/// g^e F(g_1/g, ..., g_n/g) reduced modulo u, for F of total degree e.
inline QPoly rur_substitute(const MPoly& F, const QPoly& g, const std::vector<QPoly>& gi, const QPoly& u) {
  const auto e = F.total_degree();
  std::vector<QPoly> gpow{QPoly::constant(Rat(1))};
  for (std::uint64_t k = 1; k <= e; ++k) gpow.push_back(rem(gpow.back() * g, u));
  QPoly acc;
  for (const auto& t : F.terms()) {
    QPoly term = QPoly::constant(t.coeff);
    for (std::size_t i = 0; i < gi.size(); ++i)
      for (std::uint32_t k = 0; k < t.mono[i]; ++k) term = rem(term * gi[i], u);
    term = rem(term * gpow[e - total_degree(t.mono)], u);
    acc = acc + term;
  }
  return rem(acc, u);
}

/// Checks the defining identities of a RUR against the given generators.
inline void verify_rur(const RUR& r, const std::vector<MPoly>& generators) {
  if (field_gcd(r.u, r.u.derivative()).degree() != 0) fail(ErrorKind::InvariantViolation, "u is not square-free");
  if (field_gcd(r.g, r.u).degree() != 0) fail(ErrorKind::InvariantViolation, "g is not invertible modulo u");
  for (const auto& F : generators)
    if (!rur_substitute(F, r.g, r.numerators, r.u).is_zero())
      fail(ErrorKind::InvariantViolation, "back-substitution identity fails");
}

inline RUR rur_build(const GroebnerBasis<Rat>& gb, const std::vector<MPoly>& generators) {
  auto qb = quotient_basis(gb);
  if (qb.dim() == 0) fail(ErrorKind::Precondition, "RUR of the empty variety");
  auto sep = select_separating(gb);
  RUR r{gb.ring, sep.sigma, sep.summary.sqfree, {}, {}, sep.summary.sqfree.coeffs()};
  r.g = rem(rur_numerator(MPoly::constant(gb.ring, Rat(1)), sep.sigma, r.u, gb, qb), r.u);
  for (std::size_t i = 0; i < gb.ring.size(); ++i)
    r.numerators.push_back(rem(rur_numerator(MPoly::variable(gb.ring, i), sep.sigma, r.u, gb, qb), r.u));
  verify_rur(r, generators);
  return r;
}

inline RUR rur_build(const GroebnerBasis<Rat>& gb) { return rur_build(gb, gb.gens); }

}  // namespace qetale
