#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qetale/parametric.hpp"
#include "qetale/realroots.hpp"

namespace qetale {

/// Closed interval [lo, hi] with rational endpoints.
struct Interval {
  Rat lo, hi;

  static Interval point(const Rat& v) { return {v, v}; }
  Rat width() const { return hi - lo; }
  bool contains(const Rat& v) const { return !(v < lo) && !(hi < v); }
  bool contains_zero() const { return contains(Rat(0)); }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Rat lo = p[0], hi = p[0];
    for (const auto& x : p) {
      if (x < lo) lo = x;
      if (hi < x) hi = x;
    }
    return {lo, hi};
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) fail(ErrorKind::Domain, "interval division by an interval containing 0");
    return a * Interval{b.hi.inverse(), b.lo.inverse()};
  }
};

inline Interval horner(const QPoly& p, const Interval& x) {
  Interval acc = Interval::point(Rat(0));
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + Interval::point(p.coeffs()[i]);
  return acc;
}

/// Smallest dyadic interval of grid 2^-k containing iv.
inline Interval round_out(const Interval& iv, long k) {
  Rat s = Rat(1).mul_2exp(k);
  return {Rat(BigInt((iv.lo * s).floor())) / s, Rat(BigInt((iv.hi * s).ceil())) / s};
}

/// One real point of the fibre: lambda is a root of u(y; .), coords enclose
/// x_j = g_j(lambda) / g(lambda). Index 1 is the largest root.
struct FiberSection {
  int index = 0;
  IsolatingInterval lambda;
  std::vector<Interval> coords;
};

struct SpecializedChart {
  const Chart* chart = nullptr;
  QPoly u, g;
  std::vector<QPoly> numerators;
};

namespace detail {

inline QPoly specialize_ratfun_poly(const UPoly<RatFun>& p, const std::map<std::string, Rat>& y) {
  std::vector<Rat> cs;
  for (const auto& c : p.coeffs()) {
    try {
      cs.push_back(c.evaluate(y));
    } catch (const Error&) {
      fail(ErrorKind::InvariantViolation, "a denominator vanishes at a point of the stratum");
    }
  }
  return QPoly(std::move(cs));
}

}  // namespace detail

/// Checks membership and specializes the chart data at y.
inline SpecializedChart specialize_at(const Stratum& st, const std::map<std::string, Rat>& y) {
  for (std::size_t k = 0; k < st.equations.size(); ++k)
    if (!evaluate(st.equations[k], y).is_zero())
      fail(ErrorKind::PointNotInStratum, "equation " + std::to_string(k + 1) + " (" + print_poly(st.equations[k]) +
                                             ") does not vanish at the point");
  const Chart* c = st.chart_at(y);
  if (!c) fail(ErrorKind::PointNotInStratum, "nonvanish condition " + print_poly(st.nonvanish) + " fails at the point");
  SpecializedChart sc{c, detail::specialize_ratfun_poly(c->u, y), detail::specialize_ratfun_poly(c->rur.g, y), {}};
  for (const auto& n : c->rur.numerators) sc.numerators.push_back(detail::specialize_ratfun_poly(n, y));
  return sc;
}

/// Real fibre over y, sections in descending order of lambda, coordinate
/// enclosures of width below `width` with dyadic endpoints.
inline std::vector<FiberSection> fiber_at(const Stratum& st, const std::map<std::string, Rat>& y,
                                          const Rat& width = Rat(1, 1024)) {
  if (!(Rat(0) < width)) fail(ErrorKind::Precondition, "width must be positive");
  auto sc = specialize_at(st, y);
  std::vector<FiberSection> out;
  if (sc.u.degree() <= 0) return out;
  const Rat floor_width = Rat(1).mul_2exp(-64);
  long k = 0;
  while (Rat(1).mul_2exp(-k) > width / Rat(4)) ++k;
  int idx = 0;
  for (auto iv : isolate(sc.u)) {
    FiberSection fs;
    fs.index = ++idx;
    if (iv.exact()) {
      Rat G = sc.g.eval(iv.lo);
      if (G.is_zero()) fail(ErrorKind::InvariantViolation, "g vanishes at a root of u");
      for (const auto& n : sc.numerators) fs.coords.push_back(Interval::point(n.eval(iv.lo) / G));
      fs.lambda = iv;
      out.push_back(std::move(fs));
      continue;
    }
    iv = refine(iv, width);
    for (;;) {
      Interval lam{iv.lo, iv.hi};
      Interval G = horner(sc.g, lam);
      bool ok = !G.contains_zero();
      std::vector<Interval> cs;
      if (ok)
        for (const auto& n : sc.numerators) {
          cs.push_back(horner(n, lam) / G);
          if (!(cs.back().width() < width / Rat(2))) ok = false;
        }
      if (ok) {
        for (auto& c : cs) c = round_out(c, k);
        fs.coords = std::move(cs);
        break;
      }
      if (iv.width() < floor_width) {
        if (G.contains_zero()) fail(ErrorKind::InvariantViolation, "g straddles 0 at a root of u below width 2^-64");
        if (iv.width() < floor_width * floor_width) fail(ErrorKind::InvariantViolation, "coordinate enclosure does not shrink");
      }
      iv = refine(iv, iv.width() / Rat(2));
    }
    fs.lambda = iv;
    out.push_back(std::move(fs));
  }
  return out;
}

/// Interval value of a system generator at the parameter point y and the
/// coordinate enclosures of a section.
inline Interval residual(const MPoly& F, const ParamSystem& ps, const std::map<std::string, Rat>& y,
                         const FiberSection& fs) {
  const Ring& r = F.ring();
  std::vector<Interval> val(r.size(), Interval::point(Rat(0)));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (auto v = ps.fiber_ring.index_of(r.name(i))) {
      val[i] = fs.coords.at(*v);
    } else {
      auto it = y.find(r.name(i));
      if (it == y.end()) {
        if (F.involves(i)) fail(ErrorKind::Domain, "parameter '" + r.name(i) + "' has no value");
      } else {
        val[i] = Interval::point(it->second);
      }
    }
  }
  Interval acc = Interval::point(Rat(0));
  for (const auto& t : F.terms()) {
    Interval term = Interval::point(t.coeff);
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::uint32_t e = 0; e < t.mono[i]; ++e) term = term * val[i];
    acc = acc + term;
  }
  return acc;
}

/// Real-root counts of u(y; .) at sample points. Evidence only.
struct RealCountProbe {
  std::vector<int> counts;
  bool constant = true;
  std::optional<int> common;
};

inline RealCountProbe real_count_probe(const Stratum& st, const std::vector<std::map<std::string, Rat>>& samples) {
  RealCountProbe p;
  for (const auto& y : samples) {
    auto sc = specialize_at(st, y);
    int n = sc.u.degree() <= 0 ? 0 : sturm_count(sc.u);
    p.counts.push_back(n);
  }
  for (int c : p.counts)
    if (c != p.counts.front()) p.constant = false;
  if (p.constant && !p.counts.empty()) p.common = p.counts.front();
  return p;
}

struct LiftedSample {
  std::size_t stratum = 0;
  std::map<std::string, Rat> point;
  std::vector<FiberSection> sections;
};

/// Full real fibre over each base sample, tagged by stratum index.
inline std::vector<LiftedSample> lift_samples(const StratificationReport& rep,
                                              const std::map<std::size_t, std::vector<std::map<std::string, Rat>>>& samples,
                                              const Rat& width = Rat(1, 1024)) {
  std::vector<LiftedSample> out;
  for (const auto& [i, pts] : samples) {
    if (i >= rep.strata.size()) fail(ErrorKind::Domain, "stratum index out of range");
    for (const auto& y : pts) out.push_back({i, y, fiber_at(rep.strata[i], y, width)});
  }
  return out;
}

}  // namespace qetale
