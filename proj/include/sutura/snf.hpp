#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "sutura/matrix.hpp"

namespace sutura {

// Smith normal form with unimodular certificate: u * a * v = d, d diagonal
// with nonnegative entries, each dividing the next.
struct SmithForm {
  Matrix<Int> u, d, v;

  std::vector<Int> diagonal() const {
    std::size_t n = std::min(d.rows(), d.cols());
    std::vector<Int> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
  }
};

namespace detail {

inline void add_row(Matrix<Int>& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += f * m.at(src, j);
}

inline void add_col(Matrix<Int>& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += f * m.at(i, src);
}

inline void negate_row(Matrix<Int>& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

inline bool pivot_is_lone(const Matrix<Int>& d, std::size_t t) {
  for (std::size_t i = t + 1; i < d.rows(); ++i)
    if (d.at(i, t) != 0) return false;
  for (std::size_t j = t + 1; j < d.cols(); ++j)
    if (d.at(t, j) != 0) return false;
  return true;
}

// smallest nonzero |entry| in the lower-right block starting at (t, t)
inline bool locate_min(const Matrix<Int>& d, std::size_t t, std::size_t& bi, std::size_t& bj) {
  bool found = false;
  Int best = 0;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d.at(i, j) == 0) continue;
      Int a = abs(d.at(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        bi = i;
        bj = j;
      }
    }
  return found;
}

}  // namespace detail

inline SmithForm smith_normal_form(const Matrix<Int>& a) {
  std::size_t m = a.rows(), n = a.cols();
  SmithForm s{Matrix<Int>::identity(m, 0, 1), a, Matrix<Int>::identity(n, 0, 1)};
  Matrix<Int>&u = s.u, &d = s.d, &v = s.v;
  std::size_t nmin = std::min(m, n);

  for (std::size_t t = 0; t < nmin; ++t) {
    std::size_t bi = t, bj = t;
    if (!detail::locate_min(d, t, bi, bj)) break;  // rest is zero
    while (true) {
      detail::locate_min(d, t, bi, bj);
      if (bi != t) {
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
      }
      if (bj != t) {
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        detail::add_row(d, i, t, -q);
        detail::add_row(u, i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        detail::add_col(d, j, t, -q);
        detail::add_col(v, j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean || !detail::pivot_is_lone(d, t)) continue;
      // divisibility sweep: every later entry must be divisible by the pivot
      bool divides_all = true;
      for (std::size_t i = t + 1; i < m && divides_all; ++i)
        for (std::size_t j = t + 1; j < n && divides_all; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            detail::add_row(d, t, i, 1);
            detail::add_row(u, t, i, 1);
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (d.at(t, t) < 0) {
      detail::negate_row(d, t);
      detail::negate_row(u, t);
    }
  }
  return s;
}

// Integral solution of c * x = rhs, if one exists, via the Smith form:
// u c v = d, so c x = rhs iff d (v^{-1} x) = u rhs.
inline std::optional<std::vector<Int>> solve_linear_z(const Matrix<Int>& c,
                                                      const std::vector<Int>& rhs) {
  SmithForm s = smith_normal_form(c);
  std::size_t m = c.rows(), n = c.cols();
  std::vector<Int> b(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) b[i] += s.u.at(i, j) * rhs[j];
  std::vector<Int> y(n, 0);
  std::size_t nmin = std::min(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (i < nmin && s.d.at(i, i) != 0) {
      if (b[i] % s.d.at(i, i) != 0) return std::nullopt;
      y[i] = b[i] / s.d.at(i, i);
    } else if (b[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Int> x(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x[i] += s.v.at(i, j) * y[j];
  return x;
}

}  // namespace sutura
