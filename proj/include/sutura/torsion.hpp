#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sutura/complexes.hpp"
#include "sutura/matrix.hpp"
#include "sutura/newton.hpp"
#include "sutura/ring_hom.hpp"
#include "sutura/verdicts.hpp"

namespace sutura {

// Decategorified Spin^c support: exponent vectors weighted by the Euler
// characteristics read off the normalized Alexander polynomial. The Spin^c
// torsor has no canonical origin, so the support is stored in normalized
// position (componentwise minimum exponent 0); the overall sign is
// conventional. A class with nonzero SFH but zero Euler characteristic is
// invisible here.
class ChiSupport {
 public:
  explicit ChiSupport(int rank) : rank_(rank) {}

  static ChiSupport from_polynomial(const LaurentPoly& delta) {
    ChiSupport s(delta.rank());
    LaurentPoly n = normalize(delta);
    for (const auto& [e, c] : n.terms()) s.points_.emplace(e, c);
    return s;
  }

  int rank() const { return rank_; }
  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }
  const std::map<ExpVec, Int>& points() const { return points_; }

  Int chi_at(const ExpVec& e) const {
    auto it = points_.find(e);
    return it == points_.end() ? Int(0) : it->second;
  }

  std::vector<ExpVec> point_list() const {
    std::vector<ExpVec> out;
    out.reserve(points_.size());
    for (const auto& [e, c] : points_) out.push_back(e);
    return out;
  }

  friend bool operator==(const ChiSupport& a, const ChiSupport& b) {
    return a.rank_ == b.rank_ && a.points_ == b.points_;
  }

 private:
  int rank_;
  std::map<ExpVec, Int> points_;
};

inline ChiSupport chi_support(const LaurentPoly& delta) {
  return ChiSupport::from_polynomial(delta);
}

// Class in H^1(M) = Hom(H_1(M), Z), as a linear functional on exponents.
struct AlphaClass {
  std::vector<std::int64_t> coeffs;

  bool is_zero() const {
    for (auto c : coeffs)
      if (c != 0) return false;
    return true;
  }

  std::int64_t pair(const ExpVec& e) const {
    if (e.size() != coeffs.size()) throw RankMismatch("alpha rank mismatch");
    std::int64_t v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += coeffs[i] * e[i];
    return v;
  }
};

// Alexander polynomial of a sutured triple presented by a square boundary
// matrix over Z[H-free]: normalize(det(psi(A))). The square shape is the
// chi(M) = chi(R_-) reduction of a balanced sutured pair; anything else is
// rejected.
inline LaurentPoly sutured_alexander(const Matrix<LaurentPoly>& a, const RingHom& psi) {
  if (a.rows() != a.cols())
    throw NotSquare("boundary matrix must be square (balanced pair has chi = 0)");
  if (a.rows() == 0) return LaurentPoly::constant(psi.target_rank(), 1);  // empty determinant
  PairComplex c = specialize(a, psi);
  // specialize never changes the shape here, so this is a plain determinant
  return normalize(det_poly(c.boundary(), psi.target_rank()));
}

struct ExtremalSpinc {
  ExpVec point;
  Int chi;
  std::vector<Rat> witness;  // alpha with alpha.point < alpha.other strictly
};

// Extremal Spin^c structures: vertices of the convex hull of the support,
// each with a rational functional certifying strict unique minimality.
// Translation-invariant because the support is stored in normalized position.
inline std::vector<ExtremalSpinc> extremal_spinc(const ChiSupport& s) {
  if (s.empty()) throw EmptySupport("extremal_spinc of empty support");
  std::vector<ExpVec> pts = s.point_list();
  std::vector<ExtremalSpinc> out;
  for (const auto& v : pts) {
    auto w = vertex_witness(pts, v);
    if (w) out.push_back({v, s.chi_at(v), std::move(*w)});
  }
  return out;
}

// chi(SFH_alpha) at the torsion level: the sum of chi over the support points
// that pair minimally with alpha. |value| is translation-invariant; the sign
// follows the normalization convention.
inline Int chi_sfh_alpha(const ChiSupport& s, const AlphaClass& alpha) {
  if (s.empty()) throw EmptySupport("chi_sfh_alpha of empty support");
  if (alpha.is_zero()) throw ZeroAlpha("chi_sfh_alpha needs a nonzero alpha");
  bool first = true;
  std::int64_t best = 0;
  for (const auto& [e, c] : s.points()) {
    std::int64_t v = alpha.pair(e);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  Int sum = 0;
  for (const auto& [e, c] : s.points())
    if (alpha.pair(e) == best) sum += c;
  return sum;
}

// Product detection, necessary-condition only: a product sutured manifold has
// SFH = Z, hence Delta normalizes to 1. Delta = 0 carries no information.
inline Verdict product_test(const LaurentPoly& delta) {
  if (delta.is_zero()) return Verdict::Inconclusive;
  return normalize(delta).is_one() ? Verdict::CandidateProduct : Verdict::NotProduct;
}

}  // namespace sutura
