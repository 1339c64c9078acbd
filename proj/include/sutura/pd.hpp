#pragma once

#include <array>
#include <map>
#include <numeric>
#include <vector>

#include "sutura/presentation.hpp"

namespace sutura {

// Planar diagram code: crossings as 4-tuples of edge labels, counterclockwise
// from the incoming under-strand. Edge labels run 1..2n consecutively along
// the orientation, so the over-strand labels of a crossing are cyclically
// consecutive. declared_arcs covers the 0-crossing unknot.
struct PdCode {
  std::vector<std::array<int, 4>> crossings;
  int declared_arcs = -1;
};

struct WirtingerData {
  GroupPresentation presentation;
  int arc_count = 0;
  std::vector<int> edge_to_arc;  // index: edge label - 1
  std::vector<int> crossing_signs;
};

inline WirtingerData wirtinger_from_pd(const PdCode& pd) {
  if (pd.crossings.empty()) {
    int arcs = pd.declared_arcs;
    if (arcs < 1) throw InvalidPD("empty diagram needs a declared arc count >= 1");
    return {GroupPresentation(arcs, {}), arcs, {}, {}};
  }
  int n = static_cast<int>(pd.crossings.size());
  int ne = 2 * n;

  std::map<int, int> label_count;
  for (const auto& x : pd.crossings)
    for (int l : x) {
      if (l < 1 || l > ne)
        throw InvalidPD("edge label " + std::to_string(l) + " outside 1.." + std::to_string(ne));
      ++label_count[l];
    }
  for (const auto& [l, k] : label_count)
    if (k != 2)
      throw InvalidPD("edge label " + std::to_string(l) + " appears " + std::to_string(k) +
                      " times (expected exactly 2)");

  auto succ = [ne](int l) { return l % ne + 1; };

  // merge over-strand edges into arcs
  std::vector<int> parent(static_cast<std::size_t>(ne));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };

  std::vector<int> signs;
  std::vector<std::array<int, 3>> crossing_edges;  // under_in, under_out, over edge
  for (const auto& x : pd.crossings) {
    auto [i, j, k, l] = std::array<int, 4>{x[0], x[1], x[2], x[3]};
    if (k != succ(i))
      throw InvalidPD("under-strand labels " + std::to_string(i) + " -> " + std::to_string(k) +
                      " are not consecutive along the orientation");
    int sign;
    if (l == succ(j))
      sign = 1;  // over-strand enters on the right of the under direction
    else if (j == succ(l))
      sign = -1;
    else
      throw InvalidPD("over-strand labels " + std::to_string(j) + ", " + std::to_string(l) +
                      " are not consecutive along the orientation");
    signs.push_back(sign);
    parent[static_cast<std::size_t>(find(j - 1))] = find(l - 1);
    crossing_edges.push_back({i, k, j});
  }

  std::map<int, int> arc_index;  // union-find root -> arc id, ordered by root
  for (int e = 0; e < ne; ++e) {
    int r = find(e);
    if (!arc_index.count(r)) {
      int id = static_cast<int>(arc_index.size());
      arc_index[r] = id;
    }
  }
  int arcs = static_cast<int>(arc_index.size());
  std::vector<int> edge_to_arc(static_cast<std::size_t>(ne));
  for (int e = 0; e < ne; ++e) edge_to_arc[static_cast<std::size_t>(e)] = arc_index[find(e)];

  // one relator per crossing: out = over^{sign} in over^{-sign}
  std::vector<Word> relators;
  for (int c = 0; c < n; ++c) {
    int a_in = edge_to_arc[static_cast<std::size_t>(crossing_edges[static_cast<std::size_t>(c)][0] - 1)];
    int a_out = edge_to_arc[static_cast<std::size_t>(crossing_edges[static_cast<std::size_t>(c)][1] - 1)];
    int a_over = edge_to_arc[static_cast<std::size_t>(crossing_edges[static_cast<std::size_t>(c)][2] - 1)];
    int s = signs[static_cast<std::size_t>(c)];
    relators.push_back(Word({{a_over, s}, {a_in, 1}, {a_over, -s}, {a_out, -1}}));
  }
  return {GroupPresentation(arcs, std::move(relators)), arcs, std::move(edge_to_arc),
          std::move(signs)};
}

}  // namespace sutura
