#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "sutura/simplex.hpp"
#include "sutura/torsion.hpp"
#include "sutura/verdicts.hpp"

namespace sutura {

// Decoration of the boundary tori: one curve per torus, as its image in the
// free quotient of H_1(M). Every curve must be non-torsion, i.e. nonzero.
struct Decoration {
  std::vector<std::vector<std::int64_t>> curves;

  friend bool operator==(const Decoration& a, const Decoration& b) { return a.curves == b.curves; }
};

inline void validate_decoration(const Decoration& c, int rank) {
  if (c.curves.empty()) throw BadDecoration("decoration needs at least one curve");
  for (const auto& cv : c.curves) {
    if (static_cast<int>(cv.size()) != rank)
      throw BadDecoration("decoration curve has wrong rank");
    if (std::all_of(cv.begin(), cv.end(), [](std::int64_t x) { return x == 0; }))
      throw BadDecoration("decoration curve must be non-torsion (nonzero)");
  }
}

struct PairingResult {
  int s_alpha;  // number of curves alpha vanishes on
  bool in_cone;  // alpha lies in C(M, c): alpha(c_i) != 0 for all i
};

inline PairingResult decoration_pairing(const AlphaClass& alpha, const Decoration& c) {
  if (alpha.is_zero()) throw ZeroAlpha("decoration_pairing needs a nonzero alpha");
  validate_decoration(c, static_cast<int>(alpha.coeffs.size()));
  int s = 0;
  for (const auto& cv : c.curves) {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < cv.size(); ++i) v += alpha.coeffs[i] * cv[i];
    if (v == 0) ++s;
  }
  return {s, s == 0};
}

// Open rational cone minus finitely many hyperplanes: strict inequalities
// a.alpha > 0 plus excluded hyperplanes h.alpha != 0. Rows are canonicalized
// (coprime integer entries, excluded rows sign-fixed) so structural equality
// is set equality.
class RationalCone {
 public:
  RationalCone(int dim, std::vector<std::vector<Int>> strict,
               std::vector<std::vector<Int>> excluded)
      : dim_(dim) {
    for (auto& r : strict) push_row(strict_, std::move(r), false);
    for (auto& r : excluded) push_row(excluded_, std::move(r), true);
    std::sort(strict_.begin(), strict_.end());
    strict_.erase(std::unique(strict_.begin(), strict_.end()), strict_.end());
    std::sort(excluded_.begin(), excluded_.end());
    excluded_.erase(std::unique(excluded_.begin(), excluded_.end()), excluded_.end());
  }

  int dim() const { return dim_; }
  const std::vector<std::vector<Int>>& strict() const { return strict_; }
  const std::vector<std::vector<Int>>& excluded() const { return excluded_; }

  template <class Vec>
  bool contains(const Vec& alpha) const {
    if (static_cast<int>(alpha.size()) != dim_) throw RankMismatch("cone membership rank");
    for (const auto& r : strict_) {
      Rat v = dot(r, alpha);
      if (!(v > 0)) return false;
    }
    for (const auto& r : excluded_) {
      Rat v = dot(r, alpha);
      if (v == 0) return false;
    }
    return true;
  }

  bool contains(const AlphaClass& a) const {
    std::vector<Rat> v;
    v.reserve(a.coeffs.size());
    for (auto x : a.coeffs) v.emplace_back(x);
    return contains(v);
  }

  // A nonempty open convex cone cannot lie inside finitely many hyperplanes,
  // so emptiness depends on the strict system alone.
  bool is_empty() const {
    std::vector<std::vector<Rat>> rows;
    rows.reserve(strict_.size());
    for (const auto& r : strict_) {
      std::vector<Rat> q;
      q.reserve(r.size());
      for (const auto& x : r) q.emplace_back(x);
      rows.push_back(std::move(q));
    }
    return !strict_cone_point(rows, static_cast<std::size_t>(dim_)).has_value();
  }

  friend bool operator==(const RationalCone& a, const RationalCone& b) {
    return a.dim_ == b.dim_ && a.strict_ == b.strict_ && a.excluded_ == b.excluded_;
  }
  friend bool operator<(const RationalCone& a, const RationalCone& b) {
    if (a.strict_ != b.strict_) return a.strict_ < b.strict_;
    return a.excluded_ < b.excluded_;
  }

 private:
  template <class Row, class Vec>
  static Rat dot(const Row& r, const Vec& v) {
    Rat s = 0;
    for (std::size_t i = 0; i < r.size(); ++i) s += Rat(r[i]) * Rat(v[i]);
    return s;
  }

  void push_row(std::vector<std::vector<Int>>& dst, std::vector<Int> r, bool sign_free) {
    Int g = 0;
    for (const auto& x : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return;  // zero row carries no constraint; callers reject separately
    for (auto& x : r) x /= g;
    if (sign_free) {
      // h and -h cut the same hyperplane; fix the first nonzero entry positive
      for (const auto& x : r) {
        if (x == 0) continue;
        if (x < 0)
          for (auto& y : r) y = -y;
        break;
      }
    }
    dst.push_back(std::move(r));
  }

  int dim_;
  std::vector<std::vector<Int>> strict_;
  std::vector<std::vector<Int>> excluded_;
};

// Normal cone of a support point: { alpha : alpha.v < alpha.u for all other
// support points u }. Infeasible exactly when v is not a hull vertex.
inline RationalCone normal_cone(const ChiSupport& s, const ExpVec& v) {
  if (!s.points().count(v)) throw NotInSupport("normal_cone point not in support");
  std::vector<std::vector<Int>> rows;
  for (const auto& [u, c] : s.points()) {
    if (u == v) continue;
    std::vector<Int> r;
    r.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r.emplace_back(u[i] - v[i]);
    rows.push_back(std::move(r));
  }
  return RationalCone(s.rank(), std::move(rows), {});
}

struct FiberedCone {
  RationalCone cone;
  ExpVec vertex;  // the extremal Spin^c structure the cone certifies

  friend bool operator<(const FiberedCone& a, const FiberedCone& b) {
    if (!(a.cone == b.cone)) return a.cone < b.cone;
    return a.vertex < b.vertex;
  }
  friend bool operator==(const FiberedCone& a, const FiberedCone& b) {
    return a.cone == b.cone && a.vertex == b.vertex;
  }
};

// chi-level candidate-fibred region: every cone is labeled CANDIDATE_FIBERED.
struct FiberedCones {
  int rank = 0;
  std::vector<FiberedCone> cones;  // sorted, deduplicated
};

// The union over decorations and extremal vertices with |chi| = 1 of
// (normal cone of the vertex) intersect C(M, c). Independent of the
// decoration list order. Classes outside every emitted cone are classified
// pointwise by classify_alpha.
inline FiberedCones fibered_cones(const ChiSupport& s, const std::vector<Decoration>& decs) {
  if (s.empty()) throw EmptySupport("fibered_cones of empty support");
  if (decs.empty()) throw BadDecoration("fibered_cones needs at least one decoration");
  for (const auto& d : decs) validate_decoration(d, s.rank());

  FiberedCones out;
  out.rank = s.rank();
  for (const auto& ex : extremal_spinc(s)) {
    if (!(ex.chi == 1 || ex.chi == -1)) continue;
    RationalCone base = normal_cone(s, ex.point);
    for (const auto& d : decs) {
      std::vector<std::vector<Int>> excluded;
      for (const auto& cv : d.curves) {
        std::vector<Int> r;
        r.reserve(cv.size());
        for (auto x : cv) r.emplace_back(x);
        excluded.push_back(std::move(r));
      }
      std::vector<std::vector<Int>> strict = base.strict();
      out.cones.push_back({RationalCone(s.rank(), std::move(strict), std::move(excluded)),
                           ex.point});
    }
  }
  std::sort(out.cones.begin(), out.cones.end());
  out.cones.erase(std::unique(out.cones.begin(), out.cones.end()), out.cones.end());
  return out;
}

// Pointwise verdict for a single class. Sound directions only: NOT_FIBERED
// when alpha misses every C(M, c) or the minimal chi has magnitude != 1;
// CANDIDATE_FIBERED is a necessary-condition pass, never a proof; chi = 0
// yields INCONCLUSIVE because the detection hypothesis fails.
inline Verdict classify_alpha(const ChiSupport& s, const std::vector<Decoration>& decs,
                              const AlphaClass& alpha) {
  if (s.empty()) throw EmptySupport("classify_alpha of empty support");
  if (alpha.is_zero()) throw ZeroAlpha("classify_alpha needs a nonzero alpha");
  if (decs.empty()) throw BadDecoration("classify_alpha needs at least one decoration");
  bool in_some_c = false;
  for (const auto& d : decs)
    if (decoration_pairing(alpha, d).in_cone) {
      in_some_c = true;
      break;
    }
  if (!in_some_c) return Verdict::NotFibered;  // alpha dies on some boundary torus
  Int chi = chi_sfh_alpha(s, alpha);
  if (chi == 0) return Verdict::Inconclusive;
  return (chi == 1 || chi == -1) ? Verdict::CandidateFibered : Verdict::NotFibered;
}

struct SingleTorusReport {
  FiberedCones cones;
  bool candidate_exists;  // some extremal vertex has |chi| = 1
};

// Single boundary torus: one decoration suffices and the candidate-fibred
// set is the whole of M(M, c). The existence flag is the chi-level version of
// "fibred classes exist iff some extremal Spin^c structure has SFH = Z".
inline SingleTorusReport single_torus_report(const ChiSupport& s, const Decoration& c) {
  if (c.curves.size() != 1) throw BadDecoration("single torus report needs exactly one curve");
  validate_decoration(c, s.rank());
  SingleTorusReport rep{fibered_cones(s, {c}), false};
  for (const auto& ex : extremal_spinc(s))
    if (ex.chi == 1 || ex.chi == -1) {
      rep.candidate_exists = true;
      break;
    }
  return rep;
}

}  // namespace sutura
