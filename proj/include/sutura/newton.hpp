#pragma once

#include <optional>
#include <set>
#include <vector>

#include "sutura/laurent.hpp"
#include "sutura/simplex.hpp"

namespace sutura {

// Witness functional for v being a vertex of conv(pts): a rational alpha with
// alpha.v < alpha.u for every other point u. nullopt when v is not a vertex.
inline std::optional<std::vector<Rat>> vertex_witness(const std::vector<ExpVec>& pts,
                                                      const ExpVec& v) {
  std::vector<std::vector<Rat>> rows;
  for (const auto& u : pts) {
    if (u == v) continue;
    std::vector<Rat> r;
    r.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r.emplace_back(u[i] - v[i]);
    rows.push_back(std::move(r));
  }
  return strict_cone_point(rows, v.size());
}

inline std::set<ExpVec> hull_vertices(const std::vector<ExpVec>& pts) {
  std::set<ExpVec> uniq(pts.begin(), pts.end());
  std::vector<ExpVec> u(uniq.begin(), uniq.end());
  std::set<ExpVec> out;
  for (const auto& v : u)
    if (vertex_witness(u, v)) out.insert(v);
  return out;
}

// Vertices of the Newton polytope (convex hull of the support).
inline std::set<ExpVec> newton_vertices(const LaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("newton_vertices of the zero polynomial");
  std::vector<ExpVec> pts;
  pts.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) pts.push_back(e);
  return hull_vertices(pts);
}

}  // namespace sutura
