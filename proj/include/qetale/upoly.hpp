#pragma once

#include <utility>
#include <vector>

#include "qetale/polynomial.hpp"

namespace qetale {

/// Domain hooks for UPoly<D>. Elements are assumed to carry whatever
/// context they need, so constants are made "like" an existing element.
template <class D>
struct domain_traits;

template <>
struct domain_traits<Rat> {
  static Rat zero_like(const Rat&) { return Rat(0); }
  static Rat one_like(const Rat&) { return Rat(1); }
  static Rat from_rat_like(const Rat&, const Rat& r) { return r; }
  static bool is_zero(const Rat& r) { return r.is_zero(); }
  static Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
  static constexpr bool is_field = true;
};

template <>
struct domain_traits<MPoly> {
  static MPoly zero_like(const MPoly& x) { return MPoly(x.ring()); }
  static MPoly one_like(const MPoly& x) { return MPoly::constant(x.ring(), Rat(1)); }
  static MPoly from_rat_like(const MPoly& x, const Rat& r) { return MPoly::constant(x.ring(), r); }
  static bool is_zero(const MPoly& x) { return x.is_zero(); }
  static MPoly exact_div(const MPoly& a, const MPoly& b) { return exact_divide(a, b); }
  static constexpr bool is_field = false;
};

/// Dense univariate polynomial c_0 + c_1 t + ... + c_p t^p over D.
template <class D>
class UPoly {
 public:
  using traits = domain_traits<D>;

  UPoly() = default;
  explicit UPoly(std::vector<D> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// c * t^k.
  static UPoly monomial(const D& c, std::size_t k) {
    std::vector<D> v(k + 1, traits::zero_like(c));
    v[k] = c;
    return UPoly(std::move(v));
  }
  static UPoly constant(const D& c) { return UPoly(std::vector<D>{c}); }

  const std::vector<D>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const D& lc() const {
    if (c_.empty()) fail(ErrorKind::Domain, "leading coefficient of zero polynomial");
    return c_.back();
  }
  /// Coefficient of t^i; requires a sample element when out of range.
  D coeff(std::size_t i, const D& like) const {
    return i < c_.size() ? c_[i] : traits::zero_like(like);
  }
  const D& operator[](std::size_t i) const { return c_.at(i); }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator+(const UPoly& a, const UPoly& b) { return add(a, b, false); }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return add(a, b, true); }
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<D> r(a.c_.size() + b.c_.size() - 1, traits::zero_like(a.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  UPoly scale(const D& s) const {
    UPoly r = *this;
    for (auto& x : r.c_) x = x * s;
    r.trim();
    return r;
  }
  UPoly shift(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<D> v(k, traits::zero_like(c_[0]));
    v.insert(v.end(), c_.begin(), c_.end());
    return UPoly(std::move(v));
  }

  UPoly derivative() const {
    std::vector<D> v;
    for (std::size_t i = 1; i < c_.size(); ++i)
      v.push_back(c_[i] * traits::from_rat_like(c_[i], Rat(static_cast<long>(i))));
    return UPoly(std::move(v));
  }

  D eval(const D& x) const {
    D acc = traits::zero_like(x);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  template <class F>
  auto map(F&& f) const {
    using E = std::decay_t<decltype(f(std::declval<const D&>()))>;
    std::vector<E> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(f(x));
    return UPoly<E>(std::move(v));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
  }
  static UPoly add(const UPoly& a, const UPoly& b, bool sub) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return sub ? -b : b;
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    std::vector<D> r;
    r.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i >= b.c_.size()) r.push_back(a.c_[i]);
      else if (i >= a.c_.size()) r.push_back(sub ? -b.c_[i] : b.c_[i]);
      else r.push_back(sub ? a.c_[i] - b.c_[i] : a.c_[i] + b.c_[i]);
    }
    return UPoly(std::move(r));
  }

  std::vector<D> c_;
};

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over any domain.
template <class D>
UPoly<D> prem(const UPoly<D>& a, const UPoly<D>& b) {
  if (b.is_zero()) fail(ErrorKind::Domain, "pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  int delta = a.degree() - b.degree() + 1;
  const D& l = b.lc();
  UPoly<D> r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    UPoly<D> t = UPoly<D>::monomial(r.lc(), static_cast<std::size_t>(k));
    r = r.scale(l) - (b * t);
    --delta;
  }
  D f = domain_traits<D>::one_like(l);
  for (int i = 0; i < delta; ++i) f = f * l;
  return r.scale(f);
}

/// Divides every coefficient exactly by s.
template <class D>
UPoly<D> exact_div_scalar(const UPoly<D>& a, const D& s) {
  return a.map([&](const D& x) { return domain_traits<D>::exact_div(x, s); });
}

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class D>
std::pair<UPoly<D>, UPoly<D>> divmod(const UPoly<D>& a, const UPoly<D>& b) {
  static_assert(domain_traits<D>::is_field, "divmod requires a field");
  if (b.is_zero()) fail(ErrorKind::Domain, "division by zero polynomial");
  UPoly<D> q, r = a;
  const D& l = b.lc();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    auto t = UPoly<D>::monomial(r.lc() / l, static_cast<std::size_t>(r.degree() - b.degree()));
    q += t;
    r -= b * t;
  }
  return {q, r};
}

template <class D>
UPoly<D> rem(const UPoly<D>& a, const UPoly<D>& b) {
  return divmod(a, b).second;
}

template <class D>
UPoly<D> make_monic(const UPoly<D>& a) {
  if (a.is_zero()) return a;
  D inv = domain_traits<D>::one_like(a.lc()) / a.lc();
  return a.scale(inv);
}

/// Monic gcd over a field by the Euclidean algorithm.
template <class D>
UPoly<D> field_gcd(UPoly<D> a, UPoly<D> b) {
  while (!b.is_zero()) {
    auto r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

using QPoly = UPoly<Rat>;

/// Monic square-free part chi / gcd(chi, chi').
inline QPoly squarefree_part(const QPoly& chi) {
  if (chi.is_zero()) fail(ErrorKind::Domain, "square-free part of zero");
  if (chi.degree() == 0) return QPoly::constant(Rat(1));
  QPoly g = field_gcd(chi, chi.derivative());
  return make_monic(divmod(chi, g).first);
}

}  // namespace qetale
