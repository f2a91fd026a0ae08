#pragma once

#include <vector>

#include "qetale/upoly.hpp"

namespace qetale {

/// Dense row-major matrix over a domain D.
template <class D>
class Matrix {
 public:
  using traits = domain_traits<D>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const D& fill)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const D& like) {
    Matrix m(n, n, traits::zero_like(like));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = traits::one_like(like);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  D& operator()(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
  const D& operator()(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }
  const std::vector<D>& entries() const { return a_; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) fail(ErrorKind::Domain, "matrix shape mismatch");
    Matrix r(x.rows_, y.cols_, traits::zero_like(x.a_.at(0)));
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const D& xik = x(i, k);
        if (traits::is_zero(xik)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) = r(i, j) + xik * y(k, j);
      }
    return r;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) {
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] = x.a_[i] + y.a_.at(i);
    return x;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (std::size_t i = 0; i < x.a_.size(); ++i)
      if (!(x.a_[i] == y.a_[i])) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& e : a_)
      if (!traits::is_zero(e)) return false;
    return true;
  }

  D trace() const {
    if (rows_ != cols_) fail(ErrorKind::Domain, "trace of a non-square matrix");
    D t = traits::zero_like(a_.at(0));
    for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
    return t;
  }

  /// Sub-matrix on the given rows (all columns).
  Matrix select_rows(const std::vector<std::size_t>& rs) const {
    Matrix m(rs.size(), cols_, a_.at(0));
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(rs[i], j);
    return m;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<D> a_;
};

/// Fraction-free (Bareiss) determinant; exact over any integral domain.
template <class D>
D determinant(Matrix<D> m) {
  using T = domain_traits<D>;
  if (m.rows() != m.cols()) fail(ErrorKind::Domain, "determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) fail(ErrorKind::Domain, "determinant of an empty matrix");
  D prev = T::one_like(m(0, 0));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (T::is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && T::is_zero(m(p, k))) ++p;
      if (p == n) return T::zero_like(m(0, 0));
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = T::exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  D d = m(n - 1, n - 1);
  return negate ? -d : d;
}

/// Characteristic polynomial det(t I - M) by Faddeev-LeVerrier. Only
/// divisions by the integers 1..n occur.
template <class D>
UPoly<D> char_poly(const Matrix<D>& a) {
  using T = domain_traits<D>;
  if (a.rows() != a.cols()) fail(ErrorKind::Domain, "characteristic polynomial of a non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) fail(ErrorKind::Domain, "characteristic polynomial of an empty matrix");
  const D& like = a(0, 0);
  std::vector<D> c(n + 1, T::zero_like(like));
  c[n] = T::one_like(like);
  Matrix<D> id = Matrix<D>::identity(n, like);
  Matrix<D> mk(n, n, T::zero_like(like));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<D> scaled = id;
    for (std::size_t i = 0; i < n; ++i) scaled(i, i) = c[n - k + 1];
    mk = a * mk + scaled;
    D tr = (a * mk).trace();
    c[n - k] = -(tr * T::from_rat_like(like, Rat(1) / Rat(static_cast<long>(k))));
  }
  return UPoly<D>(std::move(c));
}

/// Evaluates a univariate polynomial at a square matrix (Horner).
template <class D>
Matrix<D> eval_at_matrix(const UPoly<D>& p, const Matrix<D>& m) {
  const D& like = m(0, 0);
  Matrix<D> acc(m.rows(), m.cols(), domain_traits<D>::zero_like(like));
  Matrix<D> id = Matrix<D>::identity(m.rows(), like);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    Matrix<D> c = id;
    for (std::size_t k = 0; k < m.rows(); ++k) c(k, k) = p.coeffs()[i];
    acc = acc * m + c;
  }
  return acc;
}

}  // namespace qetale
