#pragma once

// Helpers shared by the test suites: seeded random generators and
// brute-force reference implementations that share no code with the
// library algorithms they check.

#include <algorithm>
#include <functional>
#include <optional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "qetale/qetale.hpp"

namespace qt = qetale;

namespace testsupport {

using qt::MPoly;
using qt::QPoly;
using qt::Rat;
using qt::Ring;

inline Rat random_rat(std::mt19937_64& rng, int bound = 9, bool allow_fraction = true) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, allow_fraction ? 4 : 1);
  return Rat(num(rng), den(rng));
}

/// Random polynomial with up to `terms` terms of total degree <= `deg`.
inline MPoly random_mpoly(std::mt19937_64& rng, const Ring& ring, int terms, int deg, int bound = 9) {
  std::uniform_int_distribution<int> e(0, deg);
  std::vector<MPoly::Term> ts;
  for (int k = 0; k < terms; ++k) {
    qt::Monomial m(ring.size(), 0);
    int budget = e(rng);
    for (std::size_t i = 0; i < ring.size() && budget > 0; ++i) {
      std::uniform_int_distribution<int> take(0, budget);
      int x = i + 1 == ring.size() ? budget : take(rng);
      m[i] = static_cast<std::uint32_t>(x);
      budget -= x;
    }
    ts.push_back({m, random_rat(rng, bound)});
  }
  return MPoly::from_terms(ring, std::move(ts));
}

inline QPoly random_qpoly(std::mt19937_64& rng, int deg, int bound = 9) {
  std::vector<Rat> c;
  for (int i = 0; i < deg; ++i) c.push_back(random_rat(rng, bound));
  Rat lc(0);
  while (lc.is_zero()) lc = random_rat(rng, bound);
  c.push_back(lc);
  return QPoly(std::move(c));
}

/// Determinant by the permutation (Leibniz) expansion.
template <class D>
D leibniz_det(const qt::Matrix<D>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  D acc = qt::domain_traits<D>::zero_like(m(0, 0));
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    D t = qt::domain_traits<D>::one_like(m(0, 0));
    for (std::size_t i = 0; i < n; ++i) t = t * m(i, perm[i]);
    acc = inv % 2 ? acc - t : acc + t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

/// Long division over Q written out directly.
inline std::pair<QPoly, QPoly> naive_divmod(QPoly a, const QPoly& b) {
  std::vector<Rat> q(static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)), Rat(0));
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int k = a.degree() - b.degree();
    Rat c = a.lc() / b.lc();
    q[static_cast<std::size_t>(k)] = c;
    a = a - QPoly::monomial(c, static_cast<std::size_t>(k)) * b;
  }
  return {QPoly(std::move(q)), a};
}

/// Monic gcd by the plain Euclidean algorithm.
inline QPoly euclid_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    auto r = naive_divmod(a, b).second;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.scale(a.lc().inverse());
}

/// Product of (t - r_i).
inline QPoly from_roots(const std::vector<Rat>& roots) {
  QPoly p = QPoly::constant(Rat(1));
  for (const auto& r : roots) p = p * QPoly(std::vector<Rat>{-r, Rat(1)});
  return p;
}

inline std::string read_file(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw std::runtime_error("cannot open " + path);
  std::string s;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) s.append(buf, n);
  std::fclose(f);
  return s;
}

inline std::string fixture(const std::string& name) { return std::string(QETALE_FIXTURES) + "/" + name; }

}  // namespace testsupport

namespace testsupport {

/// Determinant by Laplace expansion along rows with memoisation over the
/// set of used columns; O(2^n n) ring operations.
template <class D>
D laplace_det(const qt::Matrix<D>& m) {
  using T = qt::domain_traits<D>;
  const std::size_t n = m.rows();
  std::vector<std::optional<D>> memo(std::size_t(1) << n);
  std::function<D(std::size_t, std::size_t)> rec = [&](std::size_t row, std::size_t used) -> D {
    if (row == n) return T::one_like(m(0, 0));
    if (memo[used]) return *memo[used];
    D acc = T::zero_like(m(0, 0));
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (std::size_t(1) << c)) continue;
      if (!T::is_zero(m(row, c))) {
        D t = m(row, c) * rec(row + 1, used | (std::size_t(1) << c));
        acc = sign > 0 ? acc + t : acc - t;
      }
      sign = -sign;
    }
    memo[used] = acc;
    return acc;
  };
  return rec(0, 0);
}

/// Subresultant polynomials straight from the determinantal definition,
/// with the Sylvester matrix assembled here from the coefficient lists.
template <class D>
std::vector<qt::UPoly<D>> oracle_sres(const qt::UPoly<D>& f, const qt::UPoly<D>& g) {
  const int p = f.degree(), q = g.degree();
  const D zero = qt::domain_traits<D>::zero_like(f.lc());
  std::vector<qt::UPoly<D>> out;
  for (int j = 0; j <= q; ++j) {
    const int rows = p + q - j, cols = p + q - 2 * j;
    // entry (r, c): coefficient of t^(rows-1-r) in column polynomial c
    auto entry = [&](int r, int c) -> D {
      int deg = rows - 1 - r;
      if (c < q - j) {
        int k = deg - (q - j - 1 - c);
        return k >= 0 && k <= p ? f[static_cast<std::size_t>(k)] : zero;
      }
      int k = deg - (p - j - 1 - (c - (q - j)));
      return k >= 0 && k <= q ? g[static_cast<std::size_t>(k)] : zero;
    };
    std::vector<D> coeffs;
    for (int i = 0; i <= j; ++i) {
      qt::Matrix<D> mm(static_cast<std::size_t>(cols), static_cast<std::size_t>(cols), zero);
      for (int r = 0; r < cols; ++r) {
        int src = r < cols - 1 ? r : p + q - j - i - 1;
        for (int c = 0; c < cols; ++c) mm(r, c) = entry(src, c);
      }
      coeffs.push_back(laplace_det(mm));
    }
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

}  // namespace testsupport
