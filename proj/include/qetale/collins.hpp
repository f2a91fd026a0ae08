#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qetale/expr_io.hpp"
#include "qetale/radical.hpp"
#include "qetale/realroots.hpp"
#include "qetale/subresultant.hpp"

namespace qetale {

/// Collins projection data of one polynomial A with respect to a main variable.
struct ProjectionSet {
  std::string main_var;
  Ring base;                            // ring of A without the main variable
  std::vector<MPoly> coefficients;      // c_0 .. c_n, zeros kept
  std::vector<UPoly<MPoly>> truncations;
  std::vector<MPoly> subdiscs;

  /// Coefficients and sub-discriminants without zeros and duplicates.
  std::vector<MPoly> polys() const {
    std::vector<MPoly> out;
    auto add = [&](const MPoly& p) {
      if (p.is_zero()) return;
      for (const auto& q : out)
        if (q == p) return;
      out.push_back(p);
    };
    for (const auto& c : coefficients) add(c);
    for (const auto& s : subdiscs) add(s);
    return out;
  }
};

namespace detail {

inline Ring drop_var(const Ring& r, std::size_t v) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (i != v) names.push_back(r.name(i));
  return Ring(names, r.order());
}

inline void push_unique(std::vector<MPoly>& v, const MPoly& p) {
  for (const auto& q : v)
    if (q == p) return;
  v.push_back(p);
}

}  // namespace detail

inline ProjectionSet projection_set(const MPoly& A, const std::string& main_var) {
  const Ring& r = A.ring();
  const std::size_t v = r.require_index(main_var);
  ProjectionSet ps;
  ps.main_var = main_var;
  ps.base = detail::drop_var(r, v);
  if (!A.involves(v)) {
    MPoly a = embed(A, ps.base);
    ps.coefficients = {a};
    ps.truncations = {UPoly<MPoly>::constant(a)};
    return ps;
  }
  auto u = to_upoly(A, v);
  for (const auto& c : u.coeffs()) ps.coefficients.push_back(embed(c, ps.base));
  const MPoly zero(ps.base);
  for (std::size_t j = 0; j < ps.coefficients.size(); ++j) {
    std::vector<MPoly> cs(ps.coefficients.begin(), ps.coefficients.begin() + static_cast<std::ptrdiff_t>(j + 1));
    UPoly<MPoly> b(std::move(cs));
    if (b.is_zero()) continue;
    bool dup = false;
    for (const auto& t : ps.truncations)
      if (t == b) dup = true;
    if (!dup) ps.truncations.push_back(std::move(b));
  }
  for (const auto& b : ps.truncations) {
    if (b.degree() < 1) continue;
    auto ch = sres_chain(b, b.derivative());
    for (const auto& s : ch.coeffs) detail::push_unique(ps.subdiscs, s);
  }
  return ps;
}

/// Locus Y_k: V(equations) \ V(nonvanish).
struct CoefficientLocus {
  std::vector<MPoly> equations;
  MPoly nonvanish;
  bool cylinder = false;
  bool empty = false;

  bool contains(const std::map<std::string, Rat>& y) const {
    for (const auto& e : equations)
      if (!evaluate(e, y).is_zero()) return false;
    return !evaluate(nonvanish, y).is_zero();
  }
};

/// Y_0 .. Y_{n+1}: Y_k has c_n = ... = c_{n-k+1} = 0 and c_{n-k} != 0;
/// Y_{n+1} is the cylinder where A vanishes identically.
inline std::vector<CoefficientLocus> single_poly_strata(const MPoly& A, const std::string& main_var) {
  auto ps = projection_set(A, main_var);
  const auto& c = ps.coefficients;
  const int n = static_cast<int>(c.size()) - 1;
  const MPoly one = MPoly::constant(ps.base, Rat(1));
  std::vector<CoefficientLocus> out;
  std::vector<MPoly> eqs;
  for (int k = 0; k <= n + 1; ++k) {
    CoefficientLocus L;
    L.equations = eqs;
    L.nonvanish = k <= n ? c[static_cast<std::size_t>(n - k)] : one;
    L.cylinder = k == n + 1;
    std::vector<MPoly> nz;
    for (const auto& e : eqs)
      if (!e.is_zero()) nz.push_back(e);
    L.equations = nz;
    if (L.nonvanish.is_zero()) {
      L.empty = true;
    } else if (!nz.empty()) {
      L.empty = buchberger<Rat>(nz, ps.base).is_unit() || radical_member(L.nonvanish, nz, ps.base);
    }
    out.push_back(std::move(L));
    if (k <= n) eqs.push_back(c[static_cast<std::size_t>(n - k)]);
  }
  return out;
}

/// A sign condition sign(p) = sign, sign in {-1, 0, 1}.
struct SignCondition {
  MPoly poly;
  int sign = 0;
};

struct Region {
  std::vector<MPoly> equations;
  std::vector<SignCondition> signs;
};

struct DelineabilityReport {
  bool one_cell = true;              // all samples share the sign vector on P
  bool constant_count = true;        // and the real-root count of A agrees
  std::optional<int> common_count;   // when both hold
  std::vector<std::vector<int>> sign_vectors;
  std::vector<int> counts;           // -1 marks A vanishing identically
  std::string message;
};

inline DelineabilityReport delineability_probe(const MPoly& A, const std::string& main_var, const Region& region,
                                               const std::vector<std::map<std::string, Rat>>& samples) {
  auto ps = projection_set(A, main_var);
  auto P = ps.polys();
  DelineabilityReport rep;
  Ring main({main_var});
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& y = samples[i];
    for (const auto& e : region.equations)
      if (!evaluate(e, y).is_zero())
        fail(ErrorKind::PointNotInStratum, "sample " + std::to_string(i + 1) + " violates " + print_poly(e) + " = 0");
    for (const auto& sc : region.signs)
      if (evaluate(sc.poly, y).sign() != sc.sign)
        fail(ErrorKind::PointNotInStratum, "sample " + std::to_string(i + 1) + " violates the sign condition on " +
                                               print_poly(sc.poly));
    std::vector<int> sv;
    for (const auto& p : P) sv.push_back(evaluate(p, y).sign());
    rep.sign_vectors.push_back(std::move(sv));
    auto a = to_qpoly(to_upoly(specialize(A, y, main), 0));
    rep.counts.push_back(a.is_zero() ? -1 : sturm_count(a));
  }
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (rep.sign_vectors[i] != rep.sign_vectors[0]) rep.one_cell = false;
    if (rep.counts[i] != rep.counts[0]) rep.constant_count = false;
  }
  if (!rep.one_cell) {
    rep.message = "samples not in one sign cell";
  } else if (!rep.constant_count) {
    rep.message = "real root count differs inside one sign cell";
  } else if (!samples.empty()) {
    rep.common_count = rep.counts[0];
    rep.message = "constant real root count " + std::to_string(rep.counts[0]) + " (sampling evidence)";
  }
  return rep;
}

}  // namespace qetale
