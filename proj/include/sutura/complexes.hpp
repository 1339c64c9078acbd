#pragma once

#include <vector>

#include "sutura/laurent_gcd.hpp"
#include "sutura/matrix.hpp"
#include "sutura/ring_hom.hpp"

namespace sutura {

// Chain complex of a pair, reduced to the single boundary matrix that
// presents H_1 as a cokernel: an s x r matrix over Z[F] with r >= s (zero
// columns are appended on construction).
class PairComplex {
 public:
  PairComplex(Matrix<LaurentPoly> boundary, int rank) : rank_(rank) {
    if (boundary.rows() == 0) throw EmptyComplex("pair complex needs at least one row");
    if (boundary.cols() < boundary.rows()) {
      Matrix<LaurentPoly> wide(boundary.rows(), boundary.rows(), LaurentPoly(rank));
      for (std::size_t i = 0; i < boundary.rows(); ++i)
        for (std::size_t j = 0; j < boundary.cols(); ++j) wide.at(i, j) = boundary.at(i, j);
      boundary_ = std::move(wide);
    } else {
      boundary_ = std::move(boundary);
    }
  }

  int rank() const { return rank_; }
  std::size_t s() const { return boundary_.rows(); }
  std::size_t r() const { return boundary_.cols(); }
  const Matrix<LaurentPoly>& boundary() const { return boundary_; }

 private:
  Matrix<LaurentPoly> boundary_;
  int rank_;
};

// Entrywise pushforward of the boundary matrix along psi.
inline PairComplex specialize(const Matrix<LaurentPoly>& boundary, const RingHom& psi) {
  Matrix<LaurentPoly> out(boundary.rows(), boundary.cols(), LaurentPoly(psi.target_rank()));
  for (std::size_t i = 0; i < boundary.rows(); ++i)
    for (std::size_t j = 0; j < boundary.cols(); ++j)
      out.at(i, j) = apply_hom(boundary.at(i, j), psi);
  return PairComplex(std::move(out), psi.target_rank());
}

namespace detail {

// advance a size-s index combination over [0, r) in lexicographic order
inline bool next_combination(std::vector<std::size_t>& c, std::size_t r) {
  std::size_t s = c.size();
  for (std::size_t i = s; i-- > 0;) {
    if (c[i] < r - s + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Order of the presented module: normalized gcd of all s x s minors. Zero
// when every minor vanishes. Invariant under unimodular row/column
// operations and zero-column stabilization.
inline LaurentPoly module_order(const PairComplex& c) {
  std::size_t s = c.s(), r = c.r();
  std::vector<std::size_t> cols(s);
  for (std::size_t i = 0; i < s; ++i) cols[i] = i;
  LaurentPoly zero(c.rank());
  LaurentPoly g(c.rank());
  do {
    LaurentPoly minor = det_poly(c.boundary().select_columns(cols, zero), c.rank());
    if (!minor.is_zero()) {
      g = g.is_zero() ? minor : gcd_laurent(g, minor);
      LaurentPoly n = normalize(g);
      if (n.is_one()) return n;  // gcd hit a unit, no later minor matters
    }
  } while (detail::next_combination(cols, r));
  return normalize(g);
}

// Ranks over the fraction field Q(F): h0 = corank of the boundary matrix
// (the presented module), h1 = kernel rank.
struct QfRanks {
  std::size_t h0;
  std::size_t h1;
};

inline QfRanks qf_homology_ranks(const PairComplex& c) {
  std::size_t rk = rank_poly(c.boundary(), c.rank());
  return {c.s() - rk, c.r() - rk};
}

// Closed form for H_0 of a connected pair over Q(F): 1 iff Y is empty and
// psi is trivial, else 0.
inline int h0_pair(bool connected, bool y_empty, bool psi_trivial) {
  if (!connected) throw NotConnected("h0_pair assumes a connected space");
  return (y_empty && psi_trivial) ? 1 : 0;
}

}  // namespace sutura
