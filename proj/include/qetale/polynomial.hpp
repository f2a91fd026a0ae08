#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qetale/rat.hpp"
#include "qetale/ring.hpp"

namespace qetale {

/// Coefficient domain hooks used by Polynomial<C>. A coefficient type with
/// runtime state (e.g. a function field of a base variety) supplies a
/// non-empty context from which constants are built.
template <class C>
struct coeff_traits;

template <>
struct coeff_traits<Rat> {
  using context = std::monostate;
  static Rat zero(const context&) { return Rat(0); }
  static Rat one(const context&) { return Rat(1); }
  static Rat from_rat(const context&, const Rat& r) { return r; }
  static bool is_zero(const Rat& r) { return r.is_zero(); }
};

/// Sparse multivariate polynomial; terms kept in descending monomial order.
template <class C>
class Polynomial {
 public:
  using coeff_type = C;
  using traits = coeff_traits<C>;
  using context_type = typename traits::context;

  struct Term {
    Monomial mono;
    C coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  explicit Polynomial(Ring ring, context_type ctx = {}) : ring_(std::move(ring)), ctx_(std::move(ctx)) {}

  static Polynomial constant(Ring ring, C c, context_type ctx = {}) {
    Polynomial p(std::move(ring), std::move(ctx));
    if (!traits::is_zero(c)) p.terms_.push_back({Monomial(p.ring_.size(), 0), std::move(c)});
    return p;
  }
  static Polynomial constant(Ring ring, const Rat& r, context_type ctx = {})
    requires(!std::is_same_v<C, Rat>)
  {
    C c = traits::from_rat(ctx, r);
    return constant(std::move(ring), std::move(c), std::move(ctx));
  }
  static Polynomial variable(Ring ring, std::size_t i, context_type ctx = {}) {
    Polynomial p(std::move(ring), std::move(ctx));
    Monomial m(p.ring_.size(), 0);
    m.at(i) = 1;
    p.terms_.push_back({std::move(m), traits::one(p.ctx_)});
    return p;
  }
  static Polynomial variable(Ring ring, const std::string& name, context_type ctx = {}) {
    auto i = ring.require_index(name);
    return variable(std::move(ring), i, std::move(ctx));
  }
  static Polynomial monomial(Ring ring, Monomial m, C c, context_type ctx = {}) {
    Polynomial p(std::move(ring), std::move(ctx));
    if (m.size() != p.ring_.size()) fail(ErrorKind::Domain, "monomial length mismatch");
    if (!traits::is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  /// Builds a canonical polynomial from unordered, possibly repeated terms.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms, context_type ctx = {}) {
    Polynomial p(std::move(ring), std::move(ctx));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const Ring& ring() const { return ring_; }
  const context_type& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && qetale::total_degree(terms_[0].mono) == 0);
  }
  C constant_term() const {
    if (!terms_.empty() && qetale::total_degree(terms_.back().mono) == 0) return terms_.back().coeff;
    return traits::zero(ctx_);
  }

  const Monomial& lm() const { return require_nonzero().terms_.front().mono; }
  const C& lc() const { return require_nonzero().terms_.front().coeff; }
  const Term& lt() const { return require_nonzero().terms_.front(); }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, qetale::total_degree(t.mono));
    return d;
  }
  std::uint32_t degree(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
  }
  bool involves(std::size_t var) const { return degree(var) > 0; }

  C coeff(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return traits::zero(ctx_);
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = combine(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = combine(*this, o, true); }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_, a.ctx_);
    if (a.size() < b.size()) return b * a;
    Polynomial acc(a.ring_, a.ctx_);
    for (const auto& tb : b.terms_) acc += a.mul_term(tb.mono, tb.coeff);
    return acc;
  }

  Polynomial scale(const C& c) const {
    if (traits::is_zero(c)) return Polynomial(ring_, ctx_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    r.drop_zeros();
    return r;
  }

  /// this * c * x^m. Multiplying by a monomial preserves term order.
  Polynomial mul_term(const Monomial& m, const C& c) const {
    if (traits::is_zero(c)) return Polynomial(ring_, ctx_);
    Polynomial r(ring_, ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({mono_mul(t.mono, m), t.coeff * c});
    r.drop_zeros();
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ring_, traits::one(ctx_), ctx_);
    Polynomial b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e) b *= b;
    }
    return r;
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    std::vector<typename Polynomial<D>::Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({t.mono, f(t.coeff)});
    return ts;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coeff == b.terms_[i].coeff))
        return false;
    return true;
  }

  void check_compatible(const Polynomial& o) const {
    if (!(ring_ == o.ring_)) fail(ErrorKind::Domain, "polynomials live in different rings");
  }

 private:
  const Polynomial& require_nonzero() const {
    if (terms_.empty()) fail(ErrorKind::Domain, "leading term of the zero polynomial");
    return *this;
  }

  void drop_zeros() {
    std::erase_if(terms_, [](const Term& t) { return traits::is_zero(t.coeff); });
  }

  void normalize() {
    for (const auto& t : terms_)
      if (t.mono.size() != ring_.size()) fail(ErrorKind::Domain, "monomial length mismatch");
    const auto& ord = ring_.order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& x, const Term& y) { return ord.compare(x.mono, y.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff = out.back().coeff + t.coeff;
      else
        out.push_back(std::move(t));
    }
    terms_ = std::move(out);
    drop_zeros();
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    a.check_compatible(b);
    const auto& ord = a.ring_.order();
    Polynomial r(a.ring_, a.ctx_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size())
        c = -1;
      else if (j == b.terms_.size())
        c = 1;
      else
        c = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
      } else {
        C s = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!traits::is_zero(s)) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Ring ring_;
  context_type ctx_{};
  std::vector<Term> terms_;
};

using MPoly = Polynomial<Rat>;

inline MPoly operator*(const Rat& c, const MPoly& p) { return p.scale(c); }
inline MPoly operator*(const MPoly& p, const Rat& c) { return p.scale(c); }

/// Evaluates every variable of `p` that appears in `assignment` and returns
/// the result in `target` (which must contain every remaining variable).
inline MPoly specialize(const MPoly& p, const std::map<std::string, Rat>& assignment, const Ring& target) {
  const Ring& src = p.ring();
  for (const auto& [name, _] : assignment)
    if (!src.index_of(name)) fail(ErrorKind::Domain, "assignment names unknown variable '" + name + "'");
  std::vector<std::optional<Rat>> values(src.size());
  std::vector<std::optional<std::size_t>> dest(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = assignment.find(src.name(i));
    if (it != assignment.end()) {
      values[i] = it->second;
    } else {
      dest[i] = target.index_of(src.name(i));
      if (!dest[i] && p.involves(i))
        fail(ErrorKind::Domain, "variable '" + src.name(i) + "' missing from target ring");
    }
  }
  std::vector<MPoly::Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) {
    Rat c = t.coeff;
    Monomial m(target.size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (values[i])
        c *= values[i]->pow(t.mono[i]);
      else
        m[*dest[i]] = t.mono[i];
    }
    ts.push_back({std::move(m), std::move(c)});
  }
  return MPoly::from_terms(target, std::move(ts));
}

/// Specialization keeping the source ring minus the assigned variables.
inline MPoly specialize(const MPoly& p, const std::map<std::string, Rat>& assignment) {
  std::vector<std::string> rest;
  for (const auto& n : p.ring().names())
    if (!assignment.count(n)) rest.push_back(n);
  return specialize(p, assignment, Ring(rest, p.ring().order()));
}

/// Full evaluation to a rational; every variable that occurs must be assigned.
inline Rat evaluate(const MPoly& p, const std::map<std::string, Rat>& assignment) {
  MPoly s = specialize(p, assignment, Ring(std::vector<std::string>{}));
  return s.constant_term();
}

/// Re-expresses `p` over `target`, matching variables by name.
template <class C>
Polynomial<C> embed(const Polynomial<C>& p, const Ring& target) {
  if (p.ring() == target) return p;
  const Ring& src = p.ring();
  std::vector<std::size_t> map(src.size(), 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto j = target.index_of(src.name(i));
    if (!j) {
      if (p.involves(i)) fail(ErrorKind::Domain, "cannot embed: variable '" + src.name(i) + "' missing");
      continue;
    }
    map[i] = *j;
  }
  std::vector<typename Polynomial<C>::Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target.size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i)
      if (t.mono[i]) m[map[i]] = t.mono[i];
    ts.push_back({std::move(m), t.coeff});
  }
  return Polynomial<C>::from_terms(target, std::move(ts), p.context());
}

/// Exact multivariate division a / b; throws NotDivisible on a nonzero remainder.
template <class C>
Polynomial<C> exact_divide(const Polynomial<C>& a, const Polynomial<C>& b) {
  a.check_compatible(b);
  if (b.is_zero()) fail(ErrorKind::Domain, "division by the zero polynomial");
  Polynomial<C> q(a.ring(), a.context());
  Polynomial<C> r = a;
  const auto& blt = b.lt();
  while (!r.is_zero()) {
    const auto& rlt = r.lt();
    if (!divides(blt.mono, rlt.mono)) fail(ErrorKind::NotDivisible, "nonzero remainder in exact division");
    Monomial m = mono_div(rlt.mono, blt.mono);
    C c = rlt.coeff / blt.coeff;
    q += Polynomial<C>::monomial(a.ring(), m, c, a.context());
    r -= b.mul_term(m, c);
  }
  return q;
}

/// Partial derivative with respect to variable index `var`.
template <class C>
Polynomial<C> derivative(const Polynomial<C>& p, std::size_t var) {
  using Traits = coeff_traits<C>;
  std::vector<typename Polynomial<C>::Term> ts;
  for (const auto& t : p.terms()) {
    if (t.mono[var] == 0) continue;
    Monomial m = t.mono;
    C c = t.coeff * Traits::from_rat(p.context(), Rat(static_cast<long>(m[var])));
    m[var] -= 1;
    ts.push_back({std::move(m), std::move(c)});
  }
  return Polynomial<C>::from_terms(p.ring(), std::move(ts), p.context());
}

}  // namespace qetale
