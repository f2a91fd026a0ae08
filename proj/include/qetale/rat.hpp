#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "qetale/errors.hpp"

namespace qetale {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long long v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const BigInt& n) : v_(n) {}
  Rat(const BigInt& n, const BigInt& d) {
    if (d == 0) fail(ErrorKind::Domain, "rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Accepts "n" or "n/d" with optional leading sign.
  static Rat parse(std::string_view s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string_view::npos) return Rat(BigInt(std::string(s), 10));
      return Rat(BigInt(std::string(s.substr(0, slash)), 10), BigInt(std::string(s.substr(slash + 1)), 10));
    } catch (const std::invalid_argument&) {
      fail(ErrorKind::Domain, "malformed rational '" + std::string(s) + "'");
    }
  }

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) fail(ErrorKind::Domain, "division by zero rational");
    v_ /= o.v_;
    return *this;
  }
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  Rat inverse() const { return Rat(1) / *this; }
  Rat pow(unsigned e) const {
    Rat r(1), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      b *= b;
      e >>= 1u;
    }
    return r;
  }

  /// Floor as a big integer.
  BigInt floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }
  BigInt ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }

  /// Multiply by 2^k (k may be negative).
  Rat mul_2exp(long k) const {
    mpq_class r;
    if (k >= 0)
      mpq_mul_2exp(r.get_mpq_t(), v_.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
    else
      mpq_div_2exp(r.get_mpq_t(), v_.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
    return Rat(r);
  }

  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }
  std::size_t hash() const { return std::hash<std::string>{}(str()); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

}  // namespace qetale
