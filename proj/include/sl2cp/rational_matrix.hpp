#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sl2cp/error.hpp"

namespace sl2cp {

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;

  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  RationalMatrix(std::initializer_list<std::initializer_list<mpq_class>> init)
      : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_)
        throw Error(ErrorKind::BadInput, "ragged matrix initializer");
      for (const auto& x : row) entries_.push_back(x);
    }
    for (auto& x : entries_) x.canonicalize();
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RationalMatrix diagonal(const std::vector<mpq_class>& diag) {
    RationalMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  mpq_class& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool is_zero() const {
    for (const auto& x : entries_)
      if (x != 0) return false;
    return true;
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && (*this)(i, j) != 0) return false;
    return true;
  }

  bool is_integral() const {
    for (const auto& x : entries_)
      if (x.get_den() != 1) return false;
    return true;
  }

  mpq_class trace() const {
    mpq_class t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  /// Least common multiple of all denominators.
  mpz_class common_denominator() const {
    mpz_class l = 1;
    for (const auto& x : entries_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
  }

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    check_same_shape(a, b);
    RationalMatrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
    return r;
  }

  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    check_same_shape(a, b);
    RationalMatrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= b.entries_[k];
    return r;
  }

  friend RationalMatrix operator*(const mpq_class& c, const RationalMatrix& a) {
    RationalMatrix r = a;
    for (auto& x : r.entries_) x *= c;
    return r;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::BadInput, "matrix shape mismatch");
    RationalMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const mpq_class& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  static void check_same_shape(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(ErrorKind::BadInput, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> entries_;
};

/// Kronecker product; entry ((i1,i2),(j1,j2)) sits at (i1*b.rows+i2, j1*b.cols+j2).
inline RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      if (a(i1, j1) == 0) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          r(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
    }
  return r;
}

/// Block-diagonal assembly diag(a, b).
inline RationalMatrix block_diag(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

/// Reduced row echelon form; returns the pivot column of each nonzero row.
inline std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const mpq_class inv = 1 / m(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const mpq_class f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of the right null space, one vector per free column.
inline std::vector<std::vector<mpq_class>> null_space(RationalMatrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Exact inverse by Gauss-Jordan; nullopt when singular.
inline std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::BadInput, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return RationalMatrix{};
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Determinant by Gaussian elimination over Q.
inline mpq_class determinant(RationalMatrix m) {
  if (!m.is_square()) throw Error(ErrorKind::BadInput, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  mpq_class det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const mpq_class f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

}  // namespace sl2cp
