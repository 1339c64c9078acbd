#pragma once

namespace sutura {

// Report vocabulary. CANDIDATE_* verdicts are necessary-condition checks at
// the Euler-characteristic level and never claim the converse; NOT_* verdicts
// are sound.
enum class Verdict {
  CandidateFibered,
  NotFibered,
  Inconclusive,
  CandidateProduct,
  NotProduct,
};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::CandidateFibered: return "CANDIDATE_FIBERED";
    case Verdict::NotFibered: return "NOT_FIBERED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    case Verdict::CandidateProduct: return "CANDIDATE_PRODUCT";
    case Verdict::NotProduct: return "NOT_PRODUCT";
  }
  return "INCONCLUSIVE";
}

}  // namespace sutura
