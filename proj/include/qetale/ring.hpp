#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qetale/errors.hpp"

namespace qetale {

/// Exponent vector, one slot per ring variable.
using Monomial = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

/// b / a, assuming a | b.
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

enum class OrderKind { Grevlex, Lex };

/// Monomial order. `blocks` splits the variables into consecutive groups
/// compared one after another (an elimination order); within a group the
/// comparison follows `kind`. An empty block list means a single group.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::vector<std::size_t> blocks;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
  static MonomialOrder block(std::vector<std::size_t> sizes) {
    return {OrderKind::Grevlex, std::move(sizes)};
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

  /// Three-way comparison of a and b restricted to [lo, hi).
  int compare_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
    if (kind == OrderKind::Lex) {
      for (std::size_t i = lo; i < hi; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    }
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  int compare(const Monomial& a, const Monomial& b) const {
    if (blocks.empty()) return compare_range(a, b, 0, a.size());
    std::size_t lo = 0;
    for (std::size_t sz : blocks) {
      int c = compare_range(a, b, lo, std::min(lo + sz, a.size()));
      if (c != 0) return c;
      lo += sz;
    }
    if (lo < a.size()) return compare_range(a, b, lo, a.size());
    return 0;
  }
};

/// Ordered variable list plus monomial order. Cheap to copy.
class Ring {
 public:
  Ring() : data_(std::make_shared<const Data>()) {}
  explicit Ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex())
      : data_(std::make_shared<const Data>(Data{std::move(names), std::move(order)})) {
    auto sorted = data_->names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorKind::Domain, "duplicate variable name in ring");
  }

  std::size_t size() const { return data_->names.size(); }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::string& name(std::size_t i) const { return data_->names.at(i); }
  const MonomialOrder& order() const { return data_->order; }

  std::optional<std::size_t> index_of(const std::string& n) const {
    const auto& v = data_->names;
    auto it = std::find(v.begin(), v.end(), n);
    if (it == v.end()) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
  }
  std::size_t require_index(const std::string& n) const {
    auto i = index_of(n);
    if (!i) fail(ErrorKind::Domain, "unknown variable '" + n + "'");
    return *i;
  }

  Ring with_order(MonomialOrder o) const { return Ring(names(), std::move(o)); }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.data_ == b.data_ ||
           (a.data_->names == b.data_->names && a.data_->order == b.data_->order);
  }

 private:
  struct Data {
    std::vector<std::string> names;
    MonomialOrder order;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace qetale
