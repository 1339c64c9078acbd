#pragma once

// Test-only generator of PD codes from braid closures. Strands run downward;
// sigma_i crosses strand i over strand i+1 (a positive crossing), and the
// closure joins bottom positions back to the top. Edge labels are assigned by
// walking the closed-up knot, so they are consecutive along the orientation
// as the PD convention requires.

#include <array>
#include <optional>
#include <vector>

#include "sutura/pd.hpp"

namespace braid {

struct BraidGen {
  int index;  // 1-based: strands index, index+1
  int sign;   // +1: left strand over
};

// PD of the closure when it is a knot; nullopt for links.
inline std::optional<sutura::PdCode> closure_pd(int strands, const std::vector<BraidGen>& word) {
  int levels = static_cast<int>(word.size());
  if (strands < 2 || levels == 0) return std::nullopt;
  for (const BraidGen& g : word)
    if (g.index < 1 || g.index >= strands || (g.sign != 1 && g.sign != -1)) return std::nullopt;

  struct Passage {
    int in_label = 0;
    int out_label = 0;
    bool seen = false;
  };
  // per crossing: passage entering on the left position, and on the right
  std::vector<std::array<Passage, 2>> passages(static_cast<std::size_t>(levels));

  int total = 2 * levels;
  int label = 0;
  int t = 0, p = 0;
  const int t0 = 0, p0 = 0;
  bool started = false;
  while (!(started && t == t0 && p == p0)) {
    started = true;
    if (t == levels) {
      t = 0;  // closure arc, position unchanged
      continue;
    }
    int left = word[static_cast<std::size_t>(t)].index - 1;
    int right = left + 1;
    if (p == left || p == right) {
      if (label == total) return std::nullopt;  // longer walk than a knot allows
      ++label;
      Passage& pas = passages[static_cast<std::size_t>(t)][p == left ? 0 : 1];
      pas.seen = true;
      pas.in_label = label;
      pas.out_label = label % total + 1;
      p = (p == left) ? right : left;
    }
    ++t;
  }
  if (label != total) return std::nullopt;  // walk closed early: a link

  sutura::PdCode pd;
  for (int c = 0; c < levels; ++c) {
    const Passage& lft = passages[static_cast<std::size_t>(c)][0];
    const Passage& rgt = passages[static_cast<std::size_t>(c)][1];
    if (!lft.seen || !rgt.seen) return std::nullopt;
    if (word[static_cast<std::size_t>(c)].sign > 0) {
      // left strand over: under enters north-east, ccw = (NE, NW, SW, SE)
      pd.crossings.push_back({rgt.in_label, lft.in_label, rgt.out_label, lft.out_label});
    } else {
      // right strand over: under enters north-west, ccw = (NW, SW, SE, NE)
      pd.crossings.push_back({lft.in_label, rgt.out_label, lft.out_label, rgt.in_label});
    }
  }
  return pd;
}

}  // namespace braid
