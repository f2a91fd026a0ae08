#pragma once

#include <string>
#include <vector>

#include "qetale/mvgcd.hpp"
#include "qetale/zerodim.hpp"

namespace qetale {

namespace detail {

inline std::string fresh_name(const Ring& r, const std::string& base) {
  std::string n = base;
  while (r.index_of(n)) n += "_";
  return n;
}

/// Ring with one fresh variable in front of the variables of r, ordered by
/// the elimination order (fresh) >> (rest).
inline Ring with_fresh_front(const Ring& r, const std::string& base) {
  std::vector<std::string> names{fresh_name(r, base)};
  for (const auto& n : r.names()) names.push_back(n);
  return Ring(names, MonomialOrder::block({1, r.size()}));
}

}  // namespace detail

/// True iff f vanishes on the variety of `ideal` (Rabinowitsch: 1 lies in
/// ideal + <1 - t f>). All polynomials live in `ring`.
inline bool radical_member(const MPoly& f, const std::vector<MPoly>& ideal, const Ring& ring) {
  if (f.is_zero()) return true;
  if (ideal.empty()) return false;
  Ring ext = detail::with_fresh_front(ring, "rabinowitsch_t");
  std::vector<MPoly> gens;
  for (const auto& g : ideal) gens.push_back(embed(g, ext));
  MPoly t = MPoly::variable(ext, 0);
  gens.push_back(MPoly::constant(ext, Rat(1)) - t * embed(f, ext));
  return buchberger<Rat>(gens, ext).is_unit();
}

inline bool radical_member(const MPoly& f, const std::vector<MPoly>& ideal) {
  return radical_member(f, ideal, f.ring());
}

/// Generators of the saturation ideal : c^infinity.
inline std::vector<MPoly> saturation(const std::vector<MPoly>& ideal, const MPoly& c) {
  const Ring& ring = c.ring();
  Ring ext = detail::with_fresh_front(ring, "saturation_t");
  std::vector<MPoly> gens;
  for (const auto& g : ideal) gens.push_back(embed(g, ext));
  gens.push_back(MPoly::constant(ext, Rat(1)) - MPoly::variable(ext, 0) * embed(c, ext));
  auto gb = buchberger<Rat>(gens, ext);
  std::vector<MPoly> out;
  for (const auto& g : gb.gens)
    if (!g.involves(0)) out.push_back(embed(g, ring));
  return out;
}

/// Square-free part of a multivariate polynomial (characteristic 0).
inline MPoly mv_squarefree_part(const MPoly& f) {
  if (f.is_constant()) return f.is_zero() ? f : MPoly::constant(f.ring(), Rat(1));
  MPoly g = f;
  for (std::size_t i = 0; i < f.ring().size(); ++i)
    if (f.involves(i)) g = mv_gcd(g, derivative(f, i));
  return integer_primitive(exact_divide(f, g));
}

/// Whether A[x]/(I + E) is a finitely generated A/E-module: under the block
/// order (vars) >> (params) every variable needs a Groebner element whose
/// leading monomial is a pure power of it.
inline bool is_finite_over_base(const std::vector<MPoly>& system, const std::vector<MPoly>& base,
                                const std::vector<std::string>& params, const std::vector<std::string>& vars) {
  std::vector<std::string> names = vars;
  names.insert(names.end(), params.begin(), params.end());
  Ring ring(names, MonomialOrder::block({vars.size(), params.size()}));
  std::vector<MPoly> gens;
  for (const auto& f : system) gens.push_back(embed(f, ring));
  for (const auto& e : base) gens.push_back(embed(e, ring));
  if (gens.empty()) return vars.empty();
  auto gb = buchberger<Rat>(gens, ring);
  if (gb.is_unit()) return true;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    bool ok = false;
    for (const auto& g : gb.gens)
      if (is_pure_power(g.lm(), v)) ok = true;
    if (!ok) return false;
  }
  return true;
}

}  // namespace qetale
