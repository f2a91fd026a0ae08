#pragma once

#include "qetale/polynomial.hpp"
#include "qetale/upoly.hpp"

namespace qetale {

/// Views `p` as a univariate polynomial in `var` with coefficients in the
/// same ring (coefficients do not involve `var`).
inline UPoly<MPoly> to_upoly(const MPoly& p, std::size_t var) {
  std::vector<std::vector<MPoly::Term>> buckets(p.degree(var) + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    auto k = m[var];
    m[var] = 0;
    buckets[k].push_back({std::move(m), t.coeff});
  }
  std::vector<MPoly> cs;
  cs.reserve(buckets.size());
  for (auto& b : buckets) cs.push_back(MPoly::from_terms(p.ring(), std::move(b)));
  if (p.is_zero()) return {};
  return UPoly<MPoly>(std::move(cs));
}

inline MPoly from_upoly(const UPoly<MPoly>& u, std::size_t var, const Ring& ring) {
  MPoly acc(ring);
  Monomial m(ring.size(), 0);
  for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
    m[var] = static_cast<std::uint32_t>(k);
    acc += u.coeffs()[k].mul_term(m, Rat(1));
  }
  return acc;
}

/// Scales p by a rational so it has coprime integer coefficients and a
/// positive leading coefficient. Zero stays zero.
inline MPoly integer_primitive(const MPoly& p) {
  if (p.is_zero()) return p;
  BigInt l = 1, g = 0;
  for (const auto& t : p.terms()) l = lcm(l, t.coeff.den());
  for (const auto& t : p.terms()) g = gcd(g, BigInt(t.coeff.num() * (l / t.coeff.den())));
  Rat s(l, g);
  if (p.lc().sign() < 0) s = -s;
  return p.scale(s);
}

inline MPoly mv_gcd(const MPoly& a, const MPoly& b);

/// gcd of the coefficients of p viewed in `var`.
inline MPoly content_in(const MPoly& p, std::size_t var) {
  MPoly c(p.ring());
  const auto u = to_upoly(p, var);
  for (const auto& x : u.coeffs()) {
    c = mv_gcd(c, x);
    if (c.is_constant() && !c.is_zero()) break;
  }
  return c;
}

inline UPoly<MPoly> primitive_part(const UPoly<MPoly>& u) {
  if (u.is_zero()) return u;
  MPoly c(u.lc().ring());
  for (const auto& x : u.coeffs()) c = mv_gcd(c, x);
  return exact_div_scalar(u, c);
}

/// Greatest common divisor, normalised to positive leading coefficient and
/// integer content 1. Recursive primitive PRS on the highest variable.
inline MPoly mv_gcd(const MPoly& a, const MPoly& b) {
  a.check_compatible(b);
  if (a.is_zero()) return integer_primitive(b);
  if (b.is_zero()) return integer_primitive(a);
  if (a.is_constant() || b.is_constant()) return MPoly::constant(a.ring(), Rat(1));
  std::size_t n = a.ring().size();
  std::size_t var = n;
  for (std::size_t i = n; i-- > 0;)
    if (a.involves(i) || b.involves(i)) {
      var = i;
      break;
    }
  if (!a.involves(var)) return mv_gcd(a, content_in(b, var));
  if (!b.involves(var)) return mv_gcd(content_in(a, var), b);

  MPoly ca = content_in(a, var), cb = content_in(b, var);
  MPoly c = mv_gcd(ca, cb);
  UPoly<MPoly> pa = exact_div_scalar(to_upoly(a, var), ca);
  UPoly<MPoly> pb = exact_div_scalar(to_upoly(b, var), cb);
  if (pa.degree() < pb.degree()) std::swap(pa, pb);
  while (!pb.is_zero() && pb.degree() > 0) {
    auto r = prem(pa, pb);
    pa = std::move(pb);
    pb = primitive_part(r);
  }
  MPoly g = pb.is_zero() ? from_upoly(primitive_part(pa), var, a.ring()) : MPoly::constant(a.ring(), Rat(1));
  return integer_primitive(c * g);
}

}  // namespace qetale
