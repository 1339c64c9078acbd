#pragma once

#include <cstdint>
#include <vector>

#include "sutura/laurent.hpp"

namespace sutura {

// Homomorphism F_source -> F_target of free abelian groups, extended to the
// ring homomorphism Z[F_source] -> Z[F_target]. Stored as a
// target_rank x source_rank integer matrix; column j is the image of the
// j-th basis element.
class RingHom {
 public:
  RingHom(int target_rank, int source_rank)
      : tgt_(target_rank),
        src_(source_rank),
        m_(static_cast<std::size_t>(target_rank),
           std::vector<std::int64_t>(static_cast<std::size_t>(source_rank), 0)) {
    if (target_rank < 0 || source_rank < 0) throw RankMismatch("negative rank");
  }

  RingHom(int target_rank, int source_rank, std::vector<std::vector<std::int64_t>> rows)
      : tgt_(target_rank), src_(source_rank), m_(std::move(rows)) {
    if (static_cast<int>(m_.size()) != target_rank) throw RankMismatch("RingHom row count");
    for (const auto& r : m_)
      if (static_cast<int>(r.size()) != source_rank) throw RankMismatch("RingHom column count");
  }

  static RingHom identity(int rank) {
    RingHom h(rank, rank);
    for (int i = 0; i < rank; ++i) h.m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return h;
  }

  // the trivial homomorphism onto the rank-0 group
  static RingHom trivial(int source_rank) { return RingHom(0, source_rank); }

  int target_rank() const { return tgt_; }
  int source_rank() const { return src_; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return m_; }

  std::int64_t entry(int i, int j) const {
    return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  bool is_trivial() const {
    for (const auto& r : m_)
      for (auto v : r)
        if (v != 0) return false;
    return true;
  }

  ExpVec apply(const ExpVec& e) const {
    if (static_cast<int>(e.size()) != src_) throw RankMismatch("RingHom applied to wrong rank");
    ExpVec out(static_cast<std::size_t>(tgt_), 0);
    for (int i = 0; i < tgt_; ++i)
      for (int j = 0; j < src_; ++j)
        out[static_cast<std::size_t>(i)] += m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(j)];
    return out;
  }

  // this ∘ inner
  RingHom compose(const RingHom& inner) const {
    if (src_ != inner.tgt_) throw RankMismatch("RingHom composition rank mismatch");
    RingHom out(tgt_, inner.src_);
    for (int i = 0; i < tgt_; ++i)
      for (int j = 0; j < inner.src_; ++j) {
        std::int64_t s = 0;
        for (int k = 0; k < src_; ++k) s += entry(i, k) * inner.entry(k, j);
        out.m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
      }
    return out;
  }

  friend bool operator==(const RingHom& a, const RingHom& b) {
    return a.tgt_ == b.tgt_ && a.src_ == b.src_ && a.m_ == b.m_;
  }

 private:
  int tgt_, src_;
  std::vector<std::vector<std::int64_t>> m_;
};

// Pushforward of p along psi, collecting terms (cancellation may occur).
inline LaurentPoly apply_hom(const LaurentPoly& p, const RingHom& psi) {
  if (p.rank() != psi.source_rank()) throw RankMismatch("apply_hom rank mismatch");
  LaurentPoly out(psi.target_rank());
  for (const auto& [e, c] : p.terms()) out.add_term(psi.apply(e), c);
  return out;
}

}  // namespace sutura
