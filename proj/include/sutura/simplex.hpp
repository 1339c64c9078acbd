#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sutura/laurent.hpp"

namespace sutura {

// Exact rational feasibility of { x in Q^n : a x >= b }, x free.
// Phase-1 simplex with Bland's rule on the standard form
//   a u - a w - s = b,  u, w, s >= 0,  x = u - w.
inline std::optional<std::vector<Rat>> feasible_point(const std::vector<std::vector<Rat>>& a,
                                                      const std::vector<Rat>& b) {
  std::size_t m = a.size();
  std::size_t n = m == 0 ? 0 : a.front().size();
  if (m == 0) return std::vector<Rat>(n, Rat(0));

  // columns: u(0..n-1), w(n..2n-1), s(2n..2n+m-1), artificial(2n+m..2n+2m-1)
  std::size_t ncols = 2 * n + 2 * m;
  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(ncols + 1, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    int sgn = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      t[i][j] = a[i][j] * sgn;
      t[i][n + j] = -a[i][j] * sgn;
    }
    t[i][2 * n + i] = Rat(-sgn);
    t[i][2 * n + m + i] = 1;
    t[i][ncols] = b[i] * sgn;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = 2 * n + m + i;

  auto reduced_cost = [&](std::size_t j) {
    // cost 1 on artificials, 0 elsewhere
    Rat r = j >= 2 * n + m ? Rat(1) : Rat(0);
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= 2 * n + m) r -= t[i][j];
    return r;
  };

  while (true) {
    // Bland: lowest-index entering column with negative reduced cost
    std::size_t enter = ncols;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (reduced_cost(j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == ncols) break;
    // ratio test; ties broken by lowest basis index
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][ncols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) return std::nullopt;  // unbounded phase-1: cannot happen
    Rat piv = t[leave][enter];
    for (std::size_t j = 0; j <= ncols; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (std::size_t j = 0; j <= ncols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  Rat objective = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= 2 * n + m) objective += t[i][ncols];
  if (objective != 0) return std::nullopt;

  std::vector<Rat> x(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n)
      x[basis[i]] += t[i][ncols];
    else if (basis[i] < 2 * n)
      x[basis[i] - n] -= t[i][ncols];
  }
  return x;
}

// Feasibility of the homogeneous strict system { x : r x > 0 for all rows }.
// By positive scaling this is equivalent to r x >= 1 for all rows.
inline std::optional<std::vector<Rat>> strict_cone_point(const std::vector<std::vector<Rat>>& rows,
                                                         std::size_t dim) {
  if (rows.empty()) return std::vector<Rat>(dim, Rat(0));  // whole space, vacuous witness
  return feasible_point(rows, std::vector<Rat>(rows.size(), Rat(1)));
}

}  // namespace sutura
