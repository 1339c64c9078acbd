#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sutura/laurent.hpp"

namespace sutura {

// Minimal dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), d_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& at(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
  }

  Matrix select_columns(const std::vector<std::size_t>& cs, const T& fill) const {
    Matrix m(rows_, cs.size(), fill);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) m.at(i, j) = at(i, cs[j]);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> d_;
};

// Determinant over Z[F] by fraction-free (Bareiss) elimination; divisions are
// exact in the ring. `rank` is the rank of the coefficient ring, needed for
// the empty matrix (det of a 0x0 matrix is 1).
inline LaurentPoly det_poly(Matrix<LaurentPoly> m, int rank) {
  if (m.rows() != m.cols()) throw NotSquare("det of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::constant(rank, 1);
  int sign = 1;
  LaurentPoly prev = LaurentPoly::constant(rank, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m.at(r, k).is_zero()) ++r;
      if (r == n) return LaurentPoly(rank);
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        auto q = try_divide(num, prev);
        if (!q) throw Error("fraction-free elimination: inexact division");
        m.at(i, j) = std::move(*q);
      }
      m.at(i, k) = LaurentPoly(rank);
    }
    prev = m.at(k, k);
  }
  LaurentPoly d = m.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

// Rank of the matrix over the fraction field Q(F), by the same fraction-free
// elimination with column skipping.
inline std::size_t rank_poly(Matrix<LaurentPoly> m, int rank) {
  std::size_t r = 0;
  LaurentPoly prev = LaurentPoly::constant(rank, 1);
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        LaurentPoly num = m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j);
        auto q = try_divide(num, prev);
        if (!q) throw Error("fraction-free elimination: inexact division");
        m.at(i, j) = std::move(*q);
      }
      m.at(i, c) = LaurentPoly(rank);
    }
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

// Integer determinant, fraction-free.
inline Int det_int(Matrix<Int> m) {
  if (m.rows() != m.cols()) throw NotSquare("det of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m.at(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        Int q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = q;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign < 0 ? Int(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

inline Matrix<Int> mat_mul(const Matrix<Int>& a, const Matrix<Int>& b) {
  Matrix<Int> c(a.rows(), b.cols(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

}  // namespace sutura
