#pragma once

#include "qetale/mvgcd.hpp"

namespace qetale {

/// Quotient num/den of polynomials over Q. The denominator is kept with
/// integer content 1 and positive leading coefficient; common factors are
/// cancelled lazily once the representation gets large. Equality is decided
/// by cross-multiplication.
class RatFun {
 public:
  static constexpr std::size_t kReduceThreshold = 64;

  RatFun() = default;
  explicit RatFun(const Ring& ring) : num_(ring), den_(MPoly::constant(ring, Rat(1))) {}
  explicit RatFun(MPoly num) : num_(std::move(num)), den_(MPoly::constant(num_.ring(), Rat(1))) {}
  RatFun(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    num_.check_compatible(den_);
    if (den_.is_zero()) fail(ErrorKind::Domain, "rational function with zero denominator");
    normalize();
  }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  const Ring& ring() const { return num_.ring(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// Fully cancels gcd(num, den).
  RatFun reduced() const {
    RatFun r = *this;
    r.cancel();
    return r;
  }

  RatFun operator-() const { return RatFun(-num_, den_, Raw{}); }
  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) fail(ErrorKind::Domain, "division by zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  /// Value at a rational point; the denominator must not vanish there.
  Rat evaluate(const std::map<std::string, Rat>& at) const {
    Rat d = qetale::evaluate(den_, at);
    if (d.is_zero()) fail(ErrorKind::Domain, "denominator vanishes at evaluation point");
    return qetale::evaluate(num_, at) / d;
  }

 private:
  struct Raw {};
  RatFun(MPoly n, MPoly d, Raw) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (num_.is_zero()) {
      den_ = MPoly::constant(num_.ring(), Rat(1));
      return;
    }
    if (den_.is_constant()) {
      num_ = num_.scale(den_.lc().inverse());
      den_ = MPoly::constant(num_.ring(), Rat(1));
      return;
    }
    if (num_.size() + den_.size() > kReduceThreshold) {
      cancel();
      return;
    }
    MPoly p = integer_primitive(den_);
    Rat s = p.lc() / den_.lc();
    num_ = num_.scale(s);
    den_ = std::move(p);
  }

  void cancel() {
    if (num_.is_zero()) return;
    MPoly g = mv_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
    MPoly p = integer_primitive(den_);
    Rat s = p.lc() / den_.lc();
    num_ = num_.scale(s);
    den_ = std::move(p);
  }

  MPoly num_;
  MPoly den_;
};

template <>
struct domain_traits<RatFun> {
  static RatFun zero_like(const RatFun& x) { return RatFun(x.ring()); }
  static RatFun one_like(const RatFun& x) { return RatFun(MPoly::constant(x.ring(), Rat(1))); }
  static RatFun from_rat_like(const RatFun& x, const Rat& r) { return RatFun(MPoly::constant(x.ring(), r)); }
  static bool is_zero(const RatFun& x) { return x.is_zero(); }
  static RatFun exact_div(const RatFun& a, const RatFun& b) { return a / b; }
  static constexpr bool is_field = true;
};

template <>
struct coeff_traits<RatFun> {
  using context = Ring;
  static RatFun zero(const context& r) { return RatFun(r); }
  static RatFun one(const context& r) { return RatFun(MPoly::constant(r, Rat(1))); }
  static RatFun from_rat(const context& r, const Rat& q) { return RatFun(MPoly::constant(r, q)); }
  static bool is_zero(const RatFun& x) { return x.is_zero(); }
};

inline RatFun lift(const MPoly& p) { return RatFun(p); }

}  // namespace qetale
