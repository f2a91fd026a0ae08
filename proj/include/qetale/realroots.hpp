#pragma once

#include <optional>
#include <vector>

#include "qetale/upoly.hpp"

namespace qetale {

/// Interval [lo, hi] holding exactly one real root of `poly`; lo == hi marks
/// an exact rational root. Non-degenerate endpoints are dyadic.
struct IsolatingInterval {
  Rat lo, hi;
  QPoly poly;
  bool exact() const { return lo == hi; }
  Rat width() const { return hi - lo; }
};

namespace detail {

inline int sign_at(const QPoly& p, const std::optional<Rat>& x, bool plus_inf) {
  if (p.is_zero()) return 0;
  if (x) return p.eval(*x).sign();
  int s = p.lc().sign();
  if (!plus_inf && p.degree() % 2 == 1) s = -s;
  return s;
}

inline int variations(const std::vector<QPoly>& seq, const std::optional<Rat>& x, bool plus_inf) {
  int v = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, x, plus_inf);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace detail

inline std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    QPoly r = rem(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

/// Number of distinct real roots in (a, b]; nullopt stands for -inf (a) or
/// +inf (b).
inline int sturm_count(const QPoly& p, const std::optional<Rat>& a, const std::optional<Rat>& b) {
  if (p.is_zero()) fail(ErrorKind::Precondition, "Sturm count of the zero polynomial");
  if (p.degree() == 0) return 0;
  if (a && b && !(*a < *b)) return 0;
  auto seq = sturm_sequence(squarefree_part(p));
  return detail::variations(seq, a, false) - detail::variations(seq, b, true);
}

inline int sturm_count(const QPoly& p) { return sturm_count(p, std::nullopt, std::nullopt); }

/// Coefficients scaled to coprime integers with positive leading coefficient.
inline QPoly integer_primitive(const QPoly& p) {
  if (p.is_zero()) return p;
  BigInt l = 1, g = 0;
  for (const auto& c : p.coeffs()) l = lcm(l, c.den());
  for (const auto& c : p.coeffs()) g = gcd(g, (c * Rat(l)).num());
  Rat s(l, g);
  if (p.lc().sign() < 0) s = -s;
  return p.scale(s);
}

/// Power of two no smaller than the Cauchy bound 1 + max|c_i / c_d|.
inline Rat cauchy_bound(const QPoly& p) {
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rat r = (p[static_cast<std::size_t>(i)] / p.lc()).abs();
    if (r > m) m = r;
  }
  Rat b = m + Rat(1), pw(1);
  while (pw < b) pw = pw * Rat(2);
  return pw;
}

namespace detail {

/// If the root isolated in (lo, hi] is rational, return it.
inline std::optional<Rat> rational_root_in(const QPoly& sq, const std::vector<QPoly>& seq, Rat lo, Rat hi) {
  QPoly ip = integer_primitive(sq);
  Rat lc = ip.lc();
  while ((hi - lo) * lc >= Rat(1)) {
    Rat mid = (lo + hi) * Rat(1, 2);
    if (ip.eval(mid).is_zero()) return mid;
    if (variations(seq, lo, false) - variations(seq, mid, true) == 1) hi = mid;
    else lo = mid;
  }
  Rat k(lc * hi);
  Rat cand = Rat(k.floor()) / lc;
  if (cand > lo && ip.eval(cand).is_zero()) return cand;
  return std::nullopt;
}

}  // namespace detail

/// Shrinks a non-degenerate interval by bisection until its width is below
/// `width`; endpoints stay off every root of the polynomial.
inline IsolatingInterval refine(IsolatingInterval iv, const Rat& width) {
  if (iv.exact()) return iv;
  QPoly sq = squarefree_part(iv.poly);
  auto seq = sturm_sequence(sq);
  auto count = [&](const Rat& a, const Rat& b) { return detail::variations(seq, a, false) - detail::variations(seq, b, true); };
  auto bisect = [&]() {
    Rat mid = (iv.lo + iv.hi) * Rat(1, 2);
    if (count(iv.lo, mid) == 1) iv.hi = mid;
    else iv.lo = mid;
  };
  while (iv.width() >= width) bisect();
  while (sq.eval(iv.lo).is_zero() || sq.eval(iv.hi).is_zero()) bisect();
  return iv;
}

/// Isolating intervals for the distinct real roots, largest root first.
inline std::vector<IsolatingInterval> isolate(const QPoly& p) {
  if (p.is_zero()) fail(ErrorKind::Precondition, "isolation of the zero polynomial");
  std::vector<IsolatingInterval> out;
  if (p.degree() <= 0) return out;
  QPoly sq = squarefree_part(p);
  auto seq = sturm_sequence(sq);
  Rat b = cauchy_bound(sq);
  auto count = [&](const Rat& lo, const Rat& hi) {
    return detail::variations(seq, lo, false) - detail::variations(seq, hi, true);
  };
  // Depth-first from the right so roots come out in descending order.
  std::vector<std::pair<Rat, Rat>> stack{{-b, b}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int c = count(lo, hi);
    if (c == 0) continue;
    if (c == 1) {
      if (auto r = detail::rational_root_in(sq, seq, lo, hi)) {
        out.push_back({*r, *r, p});
      } else {
        out.push_back(refine({lo, hi, p}, hi - lo + Rat(1)));
      }
      continue;
    }
    Rat mid = (lo + hi) * Rat(1, 2);
    stack.push_back({lo, mid});
    stack.push_back({mid, hi});
  }
  // Neighbours from one bisection may share an endpoint (never a root).
  for (std::size_t i = 1; i < out.size(); ++i)
    while (!out[i].exact() && !(out[i].hi < out[i - 1].lo)) out[i] = refine(out[i], out[i].width());
  return out;
}

/// Distinct rational roots, descending.
inline std::vector<Rat> rational_roots(const QPoly& p) {
  std::vector<Rat> out;
  for (const auto& iv : isolate(p))
    if (iv.exact()) out.push_back(iv.lo);
  return out;
}

}  // namespace qetale
