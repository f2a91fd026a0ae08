#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qetale/expr_io.hpp"
#include "qetale/funfield.hpp"
#include "qetale/rur.hpp"
#include "qetale/subresultant.hpp"

namespace qetale {

inline constexpr int kDefaultMaxDepth = 8;

struct ParamSystem {
  std::vector<std::string> params, vars;
  Ring param_ring, fiber_ring, full_ring;
  std::vector<MPoly> base;    // in param_ring
  std::vector<MPoly> system;  // in full_ring
};

inline ParamSystem make_param_system(const SystemFile& sf) {
  return {sf.params, sf.vars, sf.param_ring, Ring(sf.vars), sf.full_ring, sf.base, sf.system};
}

/// F viewed as a polynomial in the fibre variables: fibre monomial -> coefficient in the parameters.
inline std::map<Monomial, MPoly> fiber_coefficients(const MPoly& F, const ParamSystem& ps) {
  const Ring& src = F.ring();
  std::vector<std::optional<std::size_t>> as_var(src.size()), as_param(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    as_var[i] = ps.fiber_ring.index_of(src.name(i));
    as_param[i] = ps.param_ring.index_of(src.name(i));
    if (!as_var[i] && !as_param[i] && F.involves(i))
      fail(ErrorKind::Domain, "variable '" + src.name(i) + "' is neither a parameter nor a fibre variable");
  }
  std::map<Monomial, std::vector<MPoly::Term>> buckets;
  for (const auto& t : F.terms()) {
    Monomial mv(ps.fiber_ring.size(), 0), mp(ps.param_ring.size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (!t.mono[i]) continue;
      if (as_var[i]) mv[*as_var[i]] = t.mono[i];
      else mp[*as_param[i]] = t.mono[i];
    }
    buckets[mv].push_back({mp, t.coeff});
  }
  std::map<Monomial, MPoly> out;
  for (auto& [m, ts] : buckets) out.emplace(m, MPoly::from_terms(ps.param_ring, std::move(ts)));
  return out;
}

inline FPoly to_fpoly(const MPoly& F, const ParamSystem& ps, const BaseContextPtr& ctx) {
  std::vector<FPoly::Term> ts;
  for (auto& [m, c] : fiber_coefficients(F, ps)) ts.push_back({m, FnElem(ctx, RatFun(c))});
  return FPoly::from_terms(ps.fiber_ring, std::move(ts), ctx);
}

/// Generic fibre algebra over a base region.
struct GenericBasis {
  BaseContextPtr ctx;
  GroebnerBasis<FnElem> gb;
  QuotientBasis qb;
  std::size_t rank() const { return qb.dim(); }
};

/// Groebner basis of the system over the function ring of V(E) \ V(H).
inline GenericBasis generic_basis(const ParamSystem& ps, const std::vector<MPoly>& equations, const MPoly& nonvanish,
                                  std::size_t pair_limit = kDefaultPairLimit) {
  auto ctx = std::make_shared<BaseContext>(ps.param_ring, equations, nonvanish, pair_limit);
  if (ctx->is_unit()) fail(ErrorKind::EmptyStratum, "base equations generate the unit ideal");
  std::vector<FPoly> input;
  for (const auto& F : ps.system) input.push_back(to_fpoly(F, ps, ctx));
  GenericBasis gbs{ctx, {ps.fiber_ring, {}}, {}};
  std::erase_if(input, [](const FPoly& f) { return f.is_zero(); });
  if (input.empty()) {
    if (ps.fiber_ring.size() > 0) fail(ErrorKind::GenericFiberInfinite, "system vanishes on the base region");
    return gbs;
  }
  gbs.gb = buchberger<FnElem>(input, ps.fiber_ring, pair_limit);
  if (gbs.gb.is_unit()) return gbs;
  try {
    gbs.qb = quotient_basis(gbs.gb);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotZeroDimensional) throw;
    fail(ErrorKind::GenericFiberInfinite, "generic fibre is not finite over the base region");
  }
  return gbs;
}

inline Matrix<RatFun> to_ratfun_matrix(const Matrix<FnElem>& m) {
  Matrix<RatFun> r(m.rows(), m.cols(), m(0, 0).value());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).value();
  return r;
}

inline Matrix<RatFun> generic_mult_matrix(const MPoly& sigma, const GenericBasis& gbs, const ParamSystem& ps) {
  return to_ratfun_matrix(mult_matrix(to_fpoly(sigma, ps, gbs.ctx), gbs.gb, gbs.qb));
}

inline UPoly<RatFun> reduce_coeffs(const UPoly<RatFun>& u, const BaseContext& ctx) {
  return u.map([&](const RatFun& c) { return ctx.reduce(c).reduced(); });
}

/// chi_sigma = det(lambda I - L_sigma), numerators reduced modulo the base equations.
inline UPoly<RatFun> parametric_charpoly(const Matrix<RatFun>& l_sigma, const BaseContext& ctx) {
  return reduce_coeffs(char_poly(l_sigma), ctx);
}

/// Subresultant chain of (chi, chi'); coeffs are Delta_0..Delta_{r-1}.
inline SresChain<RatFun> delta_chain(const UPoly<RatFun>& chi, const BaseContext& ctx) {
  if (chi.degree() < 1) fail(ErrorKind::Precondition, "Delta-chain needs deg chi >= 1");
  auto ch = sres_chain(chi, chi.derivative());
  for (auto& d : ch.coeffs) d = ctx.reduce(d).reduced();
  for (auto& p : ch.polys) p = reduce_coeffs(p, ctx);
  return ch;
}

/// Least index whose Delta does not vanish on the region.
inline int first_nonvanishing(const SresChain<RatFun>& ch, BaseContext& ctx) {
  for (std::size_t i = 0; i < ch.coeffs.size(); ++i)
    if (!ctx.vanishes(ch.coeffs[i].num())) return static_cast<int>(i);
  fail(ErrorKind::InvariantViolation, "every Delta vanishes on the base region");
}

struct ParametricRUR {
  UPoly<RatFun> u, g;
  std::vector<UPoly<RatFun>> numerators;
};

/// One locally closed piece V(equations) \ V(nonvanish) with its local data.
struct Chart {
  std::vector<MPoly> equations;
  MPoly nonvanish;
  MPoly h;
  MPoly sigma;
  UPoly<RatFun> chi;
  std::vector<RatFun> deltas;
  int s = 0;
  UPoly<RatFun> u, f;
  ParametricRUR rur;
  bool etale = false;
  BaseContextPtr ctx;
};

/// A stratum: the union of its charts, i.e. V(equations) minus the common
/// zeros of the chart nonvanish polynomials.
struct Stratum {
  std::vector<MPoly> equations;
  MPoly nonvanish;
  int rank = 0;
  int geo_count = 0;
  int depth = 0;
  std::vector<Chart> charts;

  const Chart* chart_at(const std::map<std::string, Rat>& y) const {
    for (const auto& c : charts) {
      bool on = std::all_of(c.equations.begin(), c.equations.end(),
                            [&](const MPoly& e) { return evaluate(e, y).is_zero(); });
      if (on && !evaluate(c.nonvanish, y).is_zero()) return &c;
    }
    return nullptr;
  }
  bool contains(const std::map<std::string, Rat>& y) const { return chart_at(y) != nullptr; }
};

struct ExcludedLocus {
  std::vector<MPoly> equations;
  MPoly nonvanish;
  ErrorKind reason;
  std::string detail;
  int depth = 0;

  bool contains(const std::map<std::string, Rat>& y) const {
    for (const auto& e : equations)
      if (!evaluate(e, y).is_zero()) return false;
    return !evaluate(nonvanish, y).is_zero();
  }
};

struct StratificationReport {
  ParamSystem system;
  std::vector<Stratum> strata;
  std::vector<ExcludedLocus> excluded;
  int depth = 0;
};

/// f = sResP_s / Delta_s and u = chi quo f; the remainder must vanish on the region.
inline std::pair<UPoly<RatFun>, UPoly<RatFun>> factor_uf(const UPoly<RatFun>& chi, const SresChain<RatFun>& ch, int s,
                                                         BaseContext& ctx, const MPoly& region) {
  const RatFun& ds = ch.coeffs.at(static_cast<std::size_t>(s));
  UPoly<RatFun> f = reduce_coeffs(ch.polys.at(static_cast<std::size_t>(s)).scale(RatFun(MPoly::constant(ds.ring(), Rat(1))) / ds), ctx);
  if (f.degree() != s) fail(ErrorKind::InvariantViolation, "sResP_s has the wrong degree");
  auto [u, gamma] = divmod(chi, f);
  for (const auto& c : gamma.coeffs())
    if (!ctx.vanishes(c.num(), &region))
      fail(ErrorKind::InvariantViolation, "remainder of chi by f does not vanish on the stratum");
  return {reduce_coeffs(u, ctx), f};
}

/// True when Res(u, u') has no zero on the chart.
inline bool etale_certificate(const Chart& c) {
  if (c.u.degree() <= 1) return true;
  auto ch = sres_chain(c.u, c.u.derivative());
  MPoly res = c.ctx->reduce(ch.coeffs[0].num());
  std::vector<MPoly> gens = c.ctx->groebner();
  if (res.is_zero()) return false;
  gens.push_back(res);
  return radical_member(c.nonvanish, gens, c.ctx->params());
}

/// g^e F(g_1/g, ..., g_n/g) mod u for a system generator F.
inline UPoly<RatFun> parametric_substitute(const MPoly& F, const ParametricRUR& r, const ParamSystem& ps) {
  const auto coeffs = fiber_coefficients(F, ps);
  std::uint64_t e = 0;
  for (const auto& [m, c] : coeffs) e = std::max(e, total_degree(m));
  const Ring& pr = ps.param_ring;
  const RatFun one(MPoly::constant(pr, Rat(1)));
  auto reduce_u = [&](const UPoly<RatFun>& p) { return rem(p, r.u); };
  std::vector<UPoly<RatFun>> gpow{UPoly<RatFun>::constant(one)};
  for (std::uint64_t k = 1; k <= e; ++k) gpow.push_back(reduce_u(gpow.back() * r.g));
  UPoly<RatFun> acc;
  for (const auto& [m, c] : coeffs) {
    UPoly<RatFun> term = UPoly<RatFun>::constant(RatFun(c));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::uint32_t k = 0; k < m[i]; ++k) term = reduce_u(term * r.numerators[i]);
    term = reduce_u(term * gpow[e - total_degree(m)]);
    acc = acc + term;
  }
  return reduce_u(acc);
}

/// RUR over the chart via trace double sums; back-substitution is checked
/// coefficientwise on the region.
inline ParametricRUR parametric_rur(const GenericBasis& gbs, const Matrix<RatFun>& l_sigma, const UPoly<RatFun>& u,
                                    const ParamSystem& ps, const MPoly& region) {
  BaseContext& ctx = *gbs.ctx;
  const RatFun zero(ps.param_ring);
  ParametricRUR r{u, {}, {}};
  auto id = Matrix<RatFun>::identity(gbs.rank(), zero);
  r.g = reduce_coeffs(rem(rur_sum(id, l_sigma, u, zero), u), ctx);
  for (std::size_t i = 0; i < ps.fiber_ring.size(); ++i) {
    auto lx = generic_mult_matrix(MPoly::variable(ps.fiber_ring, i), gbs, ps);
    r.numerators.push_back(reduce_coeffs(rem(rur_sum(lx, l_sigma, u, zero), u), ctx));
  }
  for (const auto& F : ps.system) {
    const auto sub = parametric_substitute(F, r, ps);
    for (const auto& c : sub.coeffs())
      if (!ctx.vanishes(c.num(), &region))
        fail(ErrorKind::InvariantViolation, "parametric RUR back-substitution fails");
  }
  return r;
}

namespace detail {

inline UPoly<RatFun> drop_vanishing(const UPoly<RatFun>& p, BaseContext& ctx, const MPoly& region) {
  const std::size_t n = p.coeffs().size();
  std::vector<RatFun> cs;
  for (std::size_t i = 0; i < n; ++i) {
    const RatFun& c = p.coeffs()[i];
    if (i + 1 < n && !c.is_zero() && ctx.vanishes(c.num(), &region)) cs.emplace_back(c.ring());
    else cs.push_back(c);
  }
  return UPoly<RatFun>(std::move(cs));
}

inline bool same_ideal(const std::vector<MPoly>& a, const std::vector<MPoly>& b, const Ring& ring) {
  auto gb = [&](const std::vector<MPoly>& v) {
    std::vector<MPoly> nz;
    for (const auto& p : v)
      if (!p.is_zero()) nz.push_back(p);
    if (nz.empty()) return std::vector<MPoly>{};
    return buchberger<Rat>(nz, ring).gens;
  };
  return gb(a) == gb(b);
}

struct NodeResult {
  std::vector<Stratum> strata;
  std::vector<ExcludedLocus> excluded;
};

struct Stratifier {
  const ParamSystem& ps;
  int max_depth;
  std::size_t pair_limit;
  int depth_used = 0;

  bool finite_over(const std::vector<MPoly>& base) {
    return is_finite_over_base(ps.system, base, ps.params, ps.vars);
  }

  MPoly one() const { return MPoly::constant(ps.param_ring, Rat(1)); }

  NodeResult node(const std::vector<MPoly>& E, const MPoly& H, int depth) {
    NodeResult out;
    std::vector<MPoly> nz;
    for (const auto& e : E)
      if (!e.is_zero()) nz.push_back(e);
    if (!nz.empty()) {
      if (buchberger<Rat>(nz, ps.param_ring, pair_limit).is_unit()) return out;
      if (radical_member(H, nz, ps.param_ring)) return out;
    } else if (H.is_zero()) {
      return out;
    }
    depth_used = std::max(depth_used, depth);
    if (depth >= max_depth) {
      out.excluded.push_back({E, H, ErrorKind::MaxDepthExceeded, "recursion depth limit reached", depth});
      return out;
    }
    GenericBasis gbs;
    try {
      gbs = generic_basis(ps, E, H, pair_limit);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::GenericFiberInfinite) {
        out.excluded.push_back({E, H, e.kind(), "fibre is not finite over this locus", depth});
        return out;
      }
      if (e.kind() == ErrorKind::EmptyStratum) return out;
      throw;
    }
    BaseContext& ctx = *gbs.ctx;
    const int r = static_cast<int>(gbs.rank());

    Chart c;
    c.ctx = gbs.ctx;
    c.equations = E;
    Matrix<RatFun> l_sigma;
    SresChain<RatFun> chain;
    if (r == 0) {
      c.sigma = MPoly(ps.fiber_ring);
      c.chi = c.u = c.f = UPoly<RatFun>::constant(RatFun(one()));
      c.rur.u = c.u;
    } else {
      auto family = candidate_family(ps.fiber_ring, static_cast<std::size_t>(r));
      int best = -1;
      for (const auto& sigma : family) {
        auto ls = generic_mult_matrix(sigma, gbs, ps);
        auto chi = parametric_charpoly(ls, ctx);
        auto ch = delta_chain(chi, ctx);
        int s = first_nonvanishing(ch, ctx);
        if (r - s > best) {
          best = r - s;
          c.sigma = sigma;
          c.chi = chi;
          c.s = s;
          l_sigma = std::move(ls);
          chain = std::move(ch);
        }
        if (best == r) break;
      }
      c.deltas = chain.coeffs;
    }
    c.h = ctx.pivot_product();
    MPoly N = c.h;
    if (r > 0) N = N * chain.coeffs[static_cast<std::size_t>(c.s)].num();
    N = ctx.reduce(N);
    if (!N.is_zero()) N = integer_primitive(mv_squarefree_part(N));

    if (N.is_zero() || ctx.vanishes(N)) return split_on_pivot(E, H, depth, ctx);

    if (r > 0) {
      std::tie(c.u, c.f) = factor_uf(c.chi, chain, c.s, ctx, N);
      c.rur = parametric_rur(gbs, l_sigma, c.u, ps, N);
    }
    c.nonvanish = integer_primitive(ctx.reduce(H * N));
    c.etale = etale_certificate(c);
    c.chi = drop_vanishing(c.chi, ctx, N);
    c.u = drop_vanishing(c.u, ctx, N);
    c.f = drop_vanishing(c.f, ctx, N);
    c.rur.u = c.u;
    c.rur.g = drop_vanishing(c.rur.g, ctx, N);
    for (auto& g : c.rur.numerators) g = drop_vanishing(g, ctx, N);

    Stratum st;
    st.equations = E;
    st.nonvanish = c.nonvanish;
    st.rank = r;
    st.geo_count = r - c.s;
    st.depth = depth;
    st.charts.push_back(std::move(c));
    out.strata.push_back(std::move(st));

    if (N.is_constant()) return out;
    std::vector<MPoly> childE = E;
    childE.push_back(N);
    NodeResult child = node(childE, H, depth + 1);
    Stratum& me = out.strata[0];
    bool uniform = !child.strata.empty() && child.excluded.empty() &&
                   std::all_of(child.strata.begin(), child.strata.end(), [&](const Stratum& x) {
                     return x.rank == me.rank && x.geo_count == me.geo_count;
                   });
    if (uniform && finite_over(E)) {
      // The whole locus E + <N> carries the same fibre data: absorb it as charts.
      for (auto& x : child.strata)
        for (auto& ch : x.charts) me.charts.push_back(std::move(ch));
      me.nonvanish = integer_primitive(ctx.reduce(H));
      child.strata.clear();
    }
    for (auto& s : child.strata) out.strata.push_back(std::move(s));
    for (auto& x : child.excluded) out.excluded.push_back(std::move(x));
    return out;
  }

  /// The open part is empty because some inverted element vanishes on a
  /// component: split the region along the first such pivot.
  NodeResult split_on_pivot(const std::vector<MPoly>& E, const MPoly& H, int depth, BaseContext& ctx) {
    NodeResult out;
    for (const auto& p : ctx.pivots()) {
      std::vector<MPoly> withp = ctx.groebner();
      withp.push_back(p);
      if (radical_member(H, withp, ps.param_ring)) continue;
      std::vector<MPoly> childE = E;
      childE.push_back(p);
      auto a = node(childE, H, depth + 1);
      auto b = node(ctx.groebner().empty() ? std::vector<MPoly>{} : saturation(ctx.groebner(), p),
                    integer_primitive(H * p), depth + 1);
      for (auto* part : {&a, &b}) {
        for (auto& s : part->strata) out.strata.push_back(std::move(s));
        for (auto& x : part->excluded) out.excluded.push_back(std::move(x));
      }
      return out;
    }
    out.excluded.push_back({E, H, ErrorKind::InvariantViolation, "open part empty and no pivot splits it", depth});
    return out;
  }
};

}  // namespace detail

/// Recursive stratification of the base V(E) by geometric fibre count.
inline StratificationReport stratify(const ParamSystem& ps, int max_depth = kDefaultMaxDepth,
                                     std::size_t pair_limit = kDefaultPairLimit) {
  if (max_depth < 1) fail(ErrorKind::Precondition, "max_depth must be at least 1");
  detail::Stratifier st{ps, max_depth, pair_limit, 0};
  auto res = st.node(ps.base, MPoly::constant(ps.param_ring, Rat(1)), 0);
  return {ps, std::move(res.strata), std::move(res.excluded), st.depth_used};
}

/// Small rationals ordered by height max(|num|, den), then by value with
/// positive before negative.
inline std::vector<Rat> small_rationals(int bound) {
  std::vector<Rat> out{Rat(0)};
  for (int h = 1; h <= bound; ++h) {
    std::vector<Rat> level;
    for (int d = 1; d <= h; ++d)
      for (int n : {h, -h}) {
        if (std::gcd(h, d) == 1) level.push_back(Rat(n, d));
      }
    for (int n = 1; n < h; ++n)
      if (std::gcd(n, h) == 1) {
        level.push_back(Rat(n, h));
        level.push_back(Rat(-n, h));
      }
    std::sort(level.begin(), level.end(), [](const Rat& a, const Rat& b) {
      if (a.abs() != b.abs()) return a.abs() < b.abs();
      return a.sign() > b.sign();
    });
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Up to `count` rational points of V(equations) accepted by `accept`,
/// found coordinate by coordinate from a lex Groebner basis with small
/// rational probes (|num|, den <= 20) and rational roots.
inline std::vector<std::map<std::string, Rat>> base_points(
    const Ring& ring, const std::vector<MPoly>& equations,
    const std::function<bool(const std::map<std::string, Rat>&)>& accept, std::size_t count,
    std::uint64_t seed = 0, std::size_t budget = 20000) {
  std::vector<std::map<std::string, Rat>> out;
  const std::size_t n = ring.size();
  if (n == 0) {
    std::map<std::string, Rat> empty;
    if (accept(empty)) out.push_back(empty);
    return out;
  }
  Ring lex(ring.names(), MonomialOrder::lex());
  std::vector<MPoly> G;
  std::vector<MPoly> nz;
  for (const auto& e : equations)
    if (!e.is_zero()) nz.push_back(embed(e, lex));
  if (!nz.empty()) {
    auto gb = buchberger<Rat>(nz, lex);
    if (gb.is_unit()) return out;
    G = gb.gens;
  }
  auto probes = small_rationals(20);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(probes.begin(), probes.end(), rng);
  }
  std::map<std::string, Rat> pt;
  std::size_t steps = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (out.size() >= count || steps > budget) return;
    if (k == 0) {
      ++steps;
      for (const auto& e : equations)
        if (!evaluate(e, pt).is_zero()) return;
      if (accept(pt)) out.push_back(pt);
      return;
    }
    const std::size_t v = k - 1;
    Ring uni({ring.name(v)});
    QPoly acc;
    bool constrained = false;
    for (const auto& g : G) {
      bool only_tail = true;
      for (std::size_t i = 0; i < v; ++i)
        if (g.involves(i)) only_tail = false;
      if (!only_tail || !g.involves(v)) continue;
      std::map<std::string, Rat> at;
      for (std::size_t i = v + 1; i < n; ++i) at[ring.name(i)] = pt.at(ring.name(i));
      MPoly sp = specialize(g, at, uni);
      if (sp.is_zero()) continue;
      QPoly q = to_qpoly(to_upoly(sp, 0));
      acc = constrained ? field_gcd(acc, q) : q;
      constrained = true;
    }
    std::vector<Rat> cands;
    if (constrained) {
      if (acc.degree() <= 0) return;
      cands = rational_roots(acc);
      std::reverse(cands.begin(), cands.end());
    } else {
      cands = probes;
    }
    for (const auto& a : cands) {
      if (out.size() >= count || steps > budget) return;
      ++steps;
      pt[ring.name(v)] = a;
      rec(v);
    }
    pt.erase(ring.name(v));
  };
  rec(n);
  return out;
}

inline std::vector<std::map<std::string, Rat>> stratum_samples(const Stratum& st, const Ring& params,
                                                              std::size_t count, std::uint64_t seed = 0) {
  return base_points(params, st.equations, [&](const auto& y) { return st.contains(y); }, count, seed);
}

}  // namespace qetale
