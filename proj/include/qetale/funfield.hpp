#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qetale/radical.hpp"
#include "qetale/ratfun.hpp"

namespace qetale {

/// Canonical text key for a polynomial (used for caches and deduplication).
inline std::string poly_key(const MPoly& p) {
  std::string s;
  for (const auto& t : p.terms()) {
    s += t.coeff.str();
    for (auto e : t.mono) s += "," + std::to_string(e);
    s += ";";
  }
  return s;
}

/// The locally closed base region V(E) \ V(H) together with the pivots
/// (inverted elements) met while computing over it. An element vanishes in
/// the region when num * H lies in the radical of E.
class BaseContext {
 public:
  BaseContext(Ring params, std::vector<MPoly> equations, MPoly nonvanish,
              std::size_t pair_limit = kDefaultPairLimit)
      : params_(std::move(params)),
        equations_(std::move(equations)),
        nonvanish_(std::move(nonvanish)),
        pair_limit_(pair_limit) {
    std::vector<MPoly> nz;
    for (const auto& e : equations_)
      if (!e.is_zero()) nz.push_back(e);
    if (!nz.empty()) gb_ = buchberger<Rat>(nz, params_, pair_limit_).gens;
  }

  const Ring& params() const { return params_; }
  const std::vector<MPoly>& equations() const { return equations_; }
  const std::vector<MPoly>& groebner() const { return gb_; }
  const MPoly& nonvanish() const { return nonvanish_; }
  std::size_t pair_limit() const { return pair_limit_; }
  bool is_unit() const { return gb_.size() == 1 && gb_[0].is_constant(); }

  MPoly reduce(const MPoly& p) const { return gb_.empty() ? p : normal_form(p, gb_); }

  RatFun reduce(const RatFun& r) const {
    if (gb_.empty()) return r;
    MPoly n = reduce(r.num());
    if (n.is_zero()) return RatFun(params_);
    return RatFun(std::move(n), r.den()).reduced();
  }

  /// num * extra vanishes on V(E) \ V(H).
  bool vanishes(const MPoly& num, const MPoly* extra = nullptr) {
    MPoly n = reduce(num);
    if (n.is_zero()) return true;
    if (gb_.empty()) return false;
    MPoly probe = n * nonvanish_;
    if (extra) probe = reduce(probe * *extra);
    else probe = reduce(probe);
    if (probe.is_zero()) return true;
    std::string key = poly_key(probe);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    bool v = radical_member(probe, gb_, params_);
    cache_.emplace(std::move(key), v);
    return v;
  }

  void record_pivot(const MPoly& c) {
    if (c.is_constant()) return;
    MPoly p = mv_squarefree_part(c);
    if (p.is_constant()) return;
    for (const auto& q : pivots_)
      if (q == p) return;
    pivots_.push_back(std::move(p));
  }

  const std::vector<MPoly>& pivots() const { return pivots_; }

  MPoly pivot_product() const {
    MPoly h = MPoly::constant(params_, Rat(1));
    for (const auto& c : pivots_) h *= c;
    return h;
  }

 private:
  Ring params_;
  std::vector<MPoly> equations_;
  MPoly nonvanish_;
  std::size_t pair_limit_;
  std::vector<MPoly> gb_;
  std::vector<MPoly> pivots_;
  std::map<std::string, bool> cache_;
};

using BaseContextPtr = std::shared_ptr<BaseContext>;

/// Element of the total ring of fractions of A/E localized at H, stored as
/// a rational function whose numerator is kept reduced modulo E.
class FnElem {
 public:
  FnElem() = default;
  FnElem(BaseContextPtr ctx, const RatFun& r) : ctx_(std::move(ctx)), r_(ctx_->reduce(r)) {}

  const RatFun& value() const { return r_; }
  const BaseContextPtr& context() const { return ctx_; }
  bool is_zero() const { return !ctx_ || r_.is_zero() || ctx_->vanishes(r_.num()); }

  FnElem operator-() const { return FnElem(ctx_, -r_, Raw{}); }
  friend FnElem operator+(const FnElem& a, const FnElem& b) { return FnElem(pick(a, b), a.r_ + b.r_); }
  friend FnElem operator-(const FnElem& a, const FnElem& b) { return FnElem(pick(a, b), a.r_ - b.r_); }
  friend FnElem operator*(const FnElem& a, const FnElem& b) { return FnElem(pick(a, b), a.r_ * b.r_); }
  friend FnElem operator/(const FnElem& a, const FnElem& b) {
    if (b.is_zero()) fail(ErrorKind::Domain, "division by an element vanishing on the base region");
    auto ctx = pick(a, b);
    ctx->record_pivot(b.r_.num());
    return FnElem(ctx, a.r_ / b.r_);
  }
  friend bool operator==(const FnElem& a, const FnElem& b) { return (a - b).is_zero(); }

 private:
  struct Raw {};
  FnElem(BaseContextPtr ctx, RatFun r, Raw) : ctx_(std::move(ctx)), r_(std::move(r)) {}

  static const BaseContextPtr& pick(const FnElem& a, const FnElem& b) {
    if (!a.ctx_ && !b.ctx_) fail(ErrorKind::Domain, "function field element without a base context");
    return a.ctx_ ? a.ctx_ : b.ctx_;
  }

  BaseContextPtr ctx_;
  RatFun r_;
};

template <>
struct coeff_traits<FnElem> {
  using context = BaseContextPtr;
  static FnElem zero(const context& c) { return FnElem(c, RatFun(c->params())); }
  static FnElem one(const context& c) { return FnElem(c, RatFun(MPoly::constant(c->params(), Rat(1)))); }
  static FnElem from_rat(const context& c, const Rat& q) {
    return FnElem(c, RatFun(MPoly::constant(c->params(), q)));
  }
  static bool is_zero(const FnElem& x) { return x.is_zero(); }
};

using FPoly = Polynomial<FnElem>;

}  // namespace qetale
