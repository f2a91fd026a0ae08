#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qetale/matrix.hpp"
#include "qetale/polynomial.hpp"
#include "qetale/upoly.hpp"

namespace qetale {

/// Subresultant chain of (f, g) with deg f = p > q = deg g.
/// polys[j] = sResP_j for 0 <= j <= q, coeffs[j] = sRes_j (the coefficient
/// of t^j in polys[j]) for 0 <= j <= q; coeffs[0] is the resultant.
template <class D>
struct SresChain {
  UPoly<D> f, g;
  std::vector<UPoly<D>> polys;
  std::vector<D> coeffs;
};

namespace detail {

template <class D>
void check_oriented(const UPoly<D>& f, const UPoly<D>& g) {
  if (f.is_zero() || g.is_zero()) fail(ErrorKind::Precondition, "subresultants of a zero polynomial");
  if (f.degree() <= g.degree())
    fail(ErrorKind::Precondition, "subresultants need deg f > deg g (orient the pair first)");
}

template <class D>
D power(const D& x, int e) {
  D r = domain_traits<D>::one_like(x);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

}  // namespace detail

/// The j-th Sylvester matrix: q-j shifted copies of f, then p-j shifted
/// copies of g, as columns; row r holds the coefficient of t^(p+q-j-1-r).
template <class D>
Matrix<D> sylvester_matrix(const UPoly<D>& f, const UPoly<D>& g, int j) {
  detail::check_oriented(f, g);
  const int p = f.degree(), q = g.degree();
  if (j < 0 || j > q) fail(ErrorKind::Precondition, "Sylvester index out of range");
  const std::size_t rows = static_cast<std::size_t>(p + q - j), cols = static_cast<std::size_t>(p + q - 2 * j);
  const D zero = domain_traits<D>::zero_like(f.lc());
  Matrix<D> m(rows, cols, zero);
  for (int c = 0; c < q - j; ++c) {
    int shift = q - j - 1 - c;
    for (int i = 0; i <= p; ++i) m(rows - 1 - static_cast<std::size_t>(i + shift), c) = f[i];
  }
  for (int c = 0; c < p - j; ++c) {
    int shift = p - j - 1 - c;
    for (int i = 0; i <= q; ++i)
      m(rows - 1 - static_cast<std::size_t>(i + shift), static_cast<std::size_t>(q - j + c)) = g[i];
  }
  return m;
}

/// Chain computed straight from the determinantal definition: d_{j,i} is
/// the minor on rows 1..p+q-2j-1 and row p+q-j-i (1-based).
template <class D>
SresChain<D> sres_chain_determinantal(const UPoly<D>& f, const UPoly<D>& g) {
  detail::check_oriented(f, g);
  const int p = f.degree(), q = g.degree();
  SresChain<D> ch{f, g, {}, {}};
  for (int j = 0; j <= q; ++j) {
    Matrix<D> syl = sylvester_matrix(f, g, j);
    const int n = p + q - 2 * j;
    std::vector<std::size_t> rows;
    for (int r = 0; r < n - 1; ++r) rows.push_back(static_cast<std::size_t>(r));
    std::vector<D> cs;
    for (int i = 0; i <= j; ++i) {
      auto sel = rows;
      sel.push_back(static_cast<std::size_t>(p + q - j - i - 1));
      cs.push_back(determinant(syl.select_rows(sel)));
    }
    ch.coeffs.push_back(cs.back());
    ch.polys.emplace_back(std::move(cs));
  }
  return ch;
}

/// Chain by the subresultant PRS (Lazard's block formula and Ducos'
/// recurrence); agrees with the determinantal definition including signs.
template <class D>
SresChain<D> sres_chain(const UPoly<D>& f, const UPoly<D>& g) {
  using T = domain_traits<D>;
  detail::check_oriented(f, g);
  const int p = f.degree(), q = g.degree();
  const D zero = T::zero_like(f.lc());
  SresChain<D> ch{f, g, std::vector<UPoly<D>>(static_cast<std::size_t>(q + 1)), std::vector<D>(static_cast<std::size_t>(q + 1), zero)};
  auto put = [&](int j, UPoly<D> s) {
    if (j < 0 || j > q) return;
    ch.coeffs[static_cast<std::size_t>(j)] = s.coeff(static_cast<std::size_t>(j), zero);
    ch.polys[static_cast<std::size_t>(j)] = std::move(s);
  };

  put(q, g.scale(detail::power(g.lc(), p - q - 1)));
  D s = detail::power(g.lc(), p - q);
  UPoly<D> a = g;
  UPoly<D> b = prem(f, -g);
  while (!b.is_zero()) {
    const int da = a.degree(), db = b.degree();
    put(da - 1, b);
    const int delta = da - db;
    UPoly<D> c = b;
    if (delta > 1) {
      D num = detail::power(b.lc(), delta - 1);
      D den = detail::power(s, delta - 1);
      c = exact_div_scalar(b.scale(num), den);
    }
    put(db, c);
    if (db == 0) break;
    D divisor = detail::power(s, delta) * a.lc();
    b = exact_div_scalar(prem(a, -b), divisor);
    a = std::move(c);
    s = a.lc();
  }
  return ch;
}

/// Degree of gcd(f, g) over a field and the subresultant that realises it.
template <class D>
struct GcdDegree {
  int degree;
  UPoly<D> witness;
};

template <class D>
GcdDegree<D> gcd_degree(UPoly<D> f, UPoly<D> g) {
  static_assert(domain_traits<D>::is_field, "gcd_degree needs field coefficients");
  if (f.is_zero() || g.is_zero()) fail(ErrorKind::Precondition, "gcd_degree of a zero polynomial");
  if (f.degree() < g.degree()) std::swap(f, g);
  if (f.degree() == g.degree()) {
    g = g - f.scale(g.lc() / f.lc());
    if (g.is_zero()) return {f.degree(), f};
  }
  if (g.degree() == 0) return {0, g};
  auto ch = sres_chain(f, g);
  for (std::size_t j = 0; j < ch.coeffs.size(); ++j)
    if (!domain_traits<D>::is_zero(ch.coeffs[j])) return {static_cast<int>(j), ch.polys[j]};
  fail(ErrorKind::InvariantViolation, "no nonvanishing principal subresultant");
}

struct SpecializationReport {
  bool ok = true;
  std::string first_discrepancy;
};

inline UPoly<MPoly> specialize_upoly(const UPoly<MPoly>& u, const std::map<std::string, Rat>& at, const Ring& target) {
  return u.map([&](const MPoly& c) { return specialize(c, at, target); });
}

struct UPolySpecialization {
  UPoly<MPoly> poly;
  bool degree_dropped = false;
};

inline UPolySpecialization specialize_checked(const UPoly<MPoly>& u, const std::map<std::string, Rat>& at,
                                              const Ring& target) {
  UPolySpecialization r{specialize_upoly(u, at, target), false};
  r.degree_dropped = r.poly.degree() < u.degree();
  return r;
}

/// Converts a univariate polynomial with constant coefficients to QPoly.
inline QPoly to_qpoly(const UPoly<MPoly>& u) {
  std::vector<Rat> c;
  for (const auto& x : u.coeffs()) {
    if (!x.is_constant()) fail(ErrorKind::Domain, "coefficient is not constant");
    c.push_back(x.constant_term());
  }
  return QPoly(std::move(c));
}

/// Checks phi(sRes_j(f,g)) = sRes_j(phi f, phi g) and the same for sResP_j
/// for every j, where phi evaluates the assigned variables.
inline SpecializationReport check_specialization(const UPoly<MPoly>& f, const UPoly<MPoly>& g,
                                                 const std::map<std::string, Rat>& assignment) {
  detail::check_oriented(f, g);
  const Ring& src = f.lc().ring();
  std::vector<std::string> rest;
  for (const auto& n : src.names())
    if (!assignment.count(n)) rest.push_back(n);
  Ring target(rest, src.order());
  auto sf = specialize_upoly(f, assignment, target);
  auto sg = specialize_upoly(g, assignment, target);
  if (sf.degree() != f.degree() || sg.degree() != g.degree())
    fail(ErrorKind::Precondition, "assignment kills a leading coefficient");
  auto generic = sres_chain(f, g);
  auto special = sres_chain(sf, sg);
  SpecializationReport rep;
  for (std::size_t j = 0; j < generic.polys.size(); ++j) {
    if (!(specialize(generic.coeffs[j], assignment, target) == special.coeffs[j])) {
      rep.ok = false;
      rep.first_discrepancy = "sRes_" + std::to_string(j);
      return rep;
    }
    if (!(specialize_upoly(generic.polys[j], assignment, target) == special.polys[j])) {
      rep.ok = false;
      rep.first_discrepancy = "sResP_" + std::to_string(j);
      return rep;
    }
  }
  return rep;
}

}  // namespace qetale
