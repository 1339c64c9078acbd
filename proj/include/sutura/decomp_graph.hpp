#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "sutura/matrix.hpp"
#include "sutura/snf.hpp"

namespace sutura {

enum class Color { Green, Black };

inline const char* to_string(Color c) { return c == Color::Green ? "green" : "black"; }

struct GraphEdge {
  int tail;
  int head;
  Color color;
  std::int64_t weight;  // crossing multiplicity, nonzero
};

// Directed multigraph of decomposition pieces (vertices) and surface
// components (edges). Green means the piece or component touches R_-.
// Invariants enforced on construction: connected, at least one green vertex,
// and every edge at a black vertex is black (black is open).
class SuturedGraph {
 public:
  SuturedGraph(std::vector<Color> vertex_colors, std::vector<GraphEdge> edges)
      : vcolors_(std::move(vertex_colors)), edges_(std::move(edges)) {
    if (vcolors_.empty()) throw InvalidGraph("graph needs at least one vertex");
    int n = static_cast<int>(vcolors_.size());
    for (const GraphEdge& e : edges_) {
      if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
        throw InvalidGraph("edge endpoint out of range");
      if (e.weight == 0) throw InvalidGraph("edge weight must be nonzero");
    }
    if (std::none_of(vcolors_.begin(), vcolors_.end(),
                     [](Color c) { return c == Color::Green; }))
      throw InvalidColoring("at least one vertex must be green (R_- is nonempty)");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const GraphEdge& e = edges_[i];
      if (e.color == Color::Green &&
          (vcolors_[static_cast<std::size_t>(e.tail)] == Color::Black ||
           vcolors_[static_cast<std::size_t>(e.head)] == Color::Black))
        throw InvalidColoring("green edge at a black vertex (black must be open)");
    }
    if (!connected()) throw InvalidGraph("graph must be connected");
  }

  std::size_t vertex_count() const { return vcolors_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  Color vertex_color(int v) const { return vcolors_[static_cast<std::size_t>(v)]; }
  const GraphEdge& edge(int e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= edges_.size()) throw UnknownEdge("no such edge");
    return edges_[static_cast<std::size_t>(e)];
  }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::vector<Color>& vertex_colors() const { return vcolors_; }

 private:
  bool connected() const {
    std::vector<char> seen(vcolors_.size(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const GraphEdge& e : edges_) {
        int o = -1;
        if (e.tail == v) o = e.head;
        else if (e.head == v) o = e.tail;
        else continue;
        if (!seen[static_cast<std::size_t>(o)]) {
          seen[static_cast<std::size_t>(o)] = 1;
          stack.push_back(o);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  }

  std::vector<Color> vcolors_;
  std::vector<GraphEdge> edges_;
};

// True iff deleting e disconnects the underlying undirected multigraph.
// A self-loop is never a bridge.
inline bool bridge_test(const SuturedGraph& g, int e) {
  const GraphEdge& f = g.edge(e);
  if (f.tail == f.head) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack = {f.tail};
  seen[static_cast<std::size_t>(f.tail)] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      if (static_cast<int>(i) == e) continue;
      const GraphEdge& ge = g.edge(static_cast<int>(i));
      int o = -1;
      if (ge.tail == v) o = ge.head;
      else if (ge.head == v) o = ge.tail;
      else continue;
      if (!seen[static_cast<std::size_t>(o)]) {
        seen[static_cast<std::size_t>(o)] = 1;
        stack.push_back(o);
      }
    }
  }
  return !seen[static_cast<std::size_t>(f.head)];
}

// Cut-space test: the weighted indicator vectors of e1 and e2 differ by an
// integer combination of vertex-boundary vectors. Returns the coefficients
// when they do.
inline std::optional<std::vector<Int>> class_witness(const SuturedGraph& g,
                                                     const std::set<int>& e1,
                                                     const std::set<int>& e2) {
  for (int e : e1) g.edge(e);
  for (int e : e2) g.edge(e);
  std::size_t m = g.edge_count(), n = g.vertex_count();
  Matrix<Int> c(m, n, Int(0));
  std::vector<Int> d(m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    const GraphEdge& ge = g.edge(static_cast<int>(e));
    if (ge.tail != ge.head) {
      c.at(e, static_cast<std::size_t>(ge.head)) += ge.weight;
      c.at(e, static_cast<std::size_t>(ge.tail)) -= ge.weight;
    }
    Int ind = 0;
    if (e1.count(static_cast<int>(e))) ind += 1;
    if (e2.count(static_cast<int>(e))) ind -= 1;
    d[e] = ind * Int(ge.weight);
  }
  return solve_linear_z(c, d);
}

inline bool class_equal(const SuturedGraph& g, const std::set<int>& e1, const std::set<int>& e2) {
  return class_witness(g, e1, e2).has_value();
}

enum class MvVerdict { Invertible, NotInvertible };

inline const char* to_string(MvVerdict v) {
  return v == MvVerdict::Invertible ? "INVERTIBLE" : "NOT_INVERTIBLE";
}

struct MvReport {
  MvVerdict verdict = MvVerdict::NotInvertible;
  std::vector<int> black_vertices;  // row order
  std::vector<int> black_edges;     // column order
  Matrix<LaurentPoly> matrix;       // entries in Z[x^{\pm 1}]
  LaurentPoly det{1};               // zero when not square
};

// Matrix-level invertibility over Q(x): square with nonzero determinant.
inline MvVerdict mv_invertibility(const Matrix<LaurentPoly>& m, LaurentPoly* det_out = nullptr) {
  if (m.rows() != m.cols()) {
    if (det_out) *det_out = LaurentPoly(1);
    return MvVerdict::NotInvertible;
  }
  LaurentPoly d = det_poly(m, 1);
  if (det_out) *det_out = d;
  return d.is_zero() ? MvVerdict::NotInvertible : MvVerdict::Invertible;
}

// Mayer-Vietoris certificate: rows are the black vertices, columns the black
// edges; column e carries +1 at i(e) and -x^{w(e)} at t(e), restricted to
// black rows (a self-loop contributes the single entry 1 - x^w). The map is
// an isomorphism over Q(x) exactly when the matrix is square with nonzero
// determinant; anything else certifies that the Delta != 0 hypothesis fails
// for this combinatorial model.
inline MvReport mv_certificate(const SuturedGraph& g) {
  MvReport rep;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.vertex_color(static_cast<int>(v)) == Color::Black)
      rep.black_vertices.push_back(static_cast<int>(v));
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (g.edge(static_cast<int>(e)).color == Color::Black)
      rep.black_edges.push_back(static_cast<int>(e));

  std::vector<int> row_of(g.vertex_count(), -1);
  for (std::size_t i = 0; i < rep.black_vertices.size(); ++i)
    row_of[static_cast<std::size_t>(rep.black_vertices[i])] = static_cast<int>(i);

  rep.matrix = Matrix<LaurentPoly>(rep.black_vertices.size(), rep.black_edges.size(),
                                   LaurentPoly(1));
  for (std::size_t j = 0; j < rep.black_edges.size(); ++j) {
    const GraphEdge& e = g.edge(rep.black_edges[j]);
    LaurentPoly xw = LaurentPoly::monomial(1, {e.weight}, 1);
    if (e.tail == e.head) {
      int r = row_of[static_cast<std::size_t>(e.tail)];
      if (r >= 0)
        rep.matrix.at(static_cast<std::size_t>(r), j) = LaurentPoly::constant(1, 1) - xw;
    } else {
      int rt = row_of[static_cast<std::size_t>(e.tail)];
      int rh = row_of[static_cast<std::size_t>(e.head)];
      if (rt >= 0) rep.matrix.at(static_cast<std::size_t>(rt), j) = LaurentPoly::constant(1, 1);
      if (rh >= 0) rep.matrix.at(static_cast<std::size_t>(rh), j) = -xw;
    }
  }
  rep.verdict = mv_invertibility(rep.matrix, &rep.det);
  return rep;
}

struct PruneStep {
  int edge;
  std::vector<int> black_side;  // vertices of the all-black side at removal time
};

struct PruneResult {
  std::set<int> surviving;        // edge ids (the green edges)
  std::vector<PruneStep> steps;
  std::vector<Int> cut_witness;   // coefficients: sum_v a_v * cut(v) = removed class
};

// Replay a prune certificate against the graph it claims to prune: every
// recorded edge must be a black bridge with a green endpoint at its removal
// time, its far side must be the recorded all-black vertex set, the surviving
// set must be everything never removed, and the cut witness must solve the
// class equation exactly.
bool verify_prune(const SuturedGraph& g, const PruneResult& r);

// Bridge-based pruning of the surface components that do not touch R_-.
// Black edges with a green endpoint are removed one at a time; each must be a
// bridge whose far side is entirely black (the removed component is then
// null-homologous rel boundary), and the endpoints merge into a green piece.
// A candidate on a cycle (or a loop) contradicts the separating claim and
// raises NonSeparatingBlackEdge -- Delta^alpha = 0 for such a configuration.
// A qualifying bridge with green on both sides cannot arise from a valid
// touching relation and raises InvalidColoring.
//
// `priority` reorders candidate selection (used by the confluence tests);
// the surviving edge set does not depend on it.
inline PruneResult prune_non_touching(const SuturedGraph& g,
                                      const std::vector<int>& priority = {}) {
  std::size_t nv = g.vertex_count(), ne = g.edge_count();
  std::vector<int> pri(ne);
  for (std::size_t i = 0; i < ne; ++i) pri[i] = static_cast<int>(i);
  if (!priority.empty()) {
    if (priority.size() != ne) throw Error("priority size mismatch");
    pri = priority;
  }

  // current state: union-find over vertices, merged class is green if any
  // member is green; alive edge flags
  std::vector<int> parent(nv);
  for (std::size_t i = 0; i < nv; ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  std::vector<Color> ccolor(nv);
  for (std::size_t i = 0; i < nv; ++i) ccolor[i] = g.vertex_color(static_cast<int>(i));
  std::vector<char> alive(ne, 1);

  auto cls_green = [&](int v) { return ccolor[static_cast<std::size_t>(find(v))] == Color::Green; };

  PruneResult out;
  while (true) {
    // candidate: alive black edge with a green endpoint class
    int best = -1;
    for (std::size_t e = 0; e < ne; ++e) {
      if (!alive[e] || g.edge(static_cast<int>(e)).color != Color::Black) continue;
      const GraphEdge& ge = g.edge(static_cast<int>(e));
      if (!cls_green(ge.tail) && !cls_green(ge.head)) continue;
      if (best < 0 || pri[e] < pri[static_cast<std::size_t>(best)]) best = static_cast<int>(e);
    }
    if (best < 0) {
      // connectivity guarantees no black edge survives without a green
      // endpoint; any alive black edge here is a structural bug
      for (std::size_t e = 0; e < ne; ++e)
        if (alive[e] && g.edge(static_cast<int>(e)).color == Color::Black)
          throw Error("internal: stranded black edge");
      break;
    }
    const GraphEdge& f = g.edge(best);
    int u = find(f.tail), v = find(f.head);
    if (u == v)
      throw NonSeparatingBlackEdge("black self-loop at a green piece: edge " +
                                   std::to_string(best));

    // bridge test in the current merged graph
    std::vector<char> seen(nv, 0);
    std::vector<int> stack = {u};
    seen[static_cast<std::size_t>(u)] = 1;
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (std::size_t e = 0; e < ne; ++e) {
        if (!alive[e] || static_cast<int>(e) == best) continue;
        const GraphEdge& ge = g.edge(static_cast<int>(e));
        int a = find(ge.tail), b = find(ge.head);
        int o = -1;
        if (a == w) o = b;
        else if (b == w) o = a;
        else continue;
        if (!seen[static_cast<std::size_t>(o)]) {
          seen[static_cast<std::size_t>(o)] = 1;
          stack.push_back(o);
        }
      }
    }
    if (seen[static_cast<std::size_t>(v)])
      throw NonSeparatingBlackEdge("black edge " + std::to_string(best) +
                                   " with a green endpoint lies on a cycle");

    bool ug = ccolor[static_cast<std::size_t>(u)] == Color::Green;
    bool vg = ccolor[static_cast<std::size_t>(v)] == Color::Green;
    if (ug && vg)
      throw InvalidColoring("bridge " + std::to_string(best) +
                            " has green pieces on both sides");
    int green_cls = ug ? u : v;
    int black_cls = ug ? v : u;

    // the far side of the bridge must be entirely black
    std::vector<int> side;
    std::vector<char> sseen(nv, 0);
    std::vector<int> sstack = {black_cls};
    sseen[static_cast<std::size_t>(black_cls)] = 1;
    while (!sstack.empty()) {
      int w = sstack.back();
      sstack.pop_back();
      side.push_back(w);
      for (std::size_t e = 0; e < ne; ++e) {
        if (!alive[e] || static_cast<int>(e) == best) continue;
        const GraphEdge& ge = g.edge(static_cast<int>(e));
        int a = find(ge.tail), b = find(ge.head);
        int o = -1;
        if (a == w) o = b;
        else if (b == w) o = a;
        else continue;
        if (!sseen[static_cast<std::size_t>(o)]) {
          sseen[static_cast<std::size_t>(o)] = 1;
          sstack.push_back(o);
        }
      }
    }
    for (int w : side)
      if (ccolor[static_cast<std::size_t>(w)] == Color::Green)
        throw InvalidColoring("side of bridge " + std::to_string(best) +
                              " away from R_- contains a green piece");

    std::sort(side.begin(), side.end());
    out.steps.push_back({best, side});
    alive[static_cast<std::size_t>(best)] = 0;
    parent[static_cast<std::size_t>(black_cls)] = green_cls;  // merged piece touches R_-
  }

  std::set<int> all;
  for (std::size_t e = 0; e < ne; ++e) {
    all.insert(static_cast<int>(e));
    if (alive[e]) out.surviving.insert(static_cast<int>(e));
  }
  auto w = class_witness(g, all, out.surviving);
  if (!w) throw Error("internal: pruned class is not a cut combination");
  out.cut_witness = std::move(*w);
  return out;
}

inline bool verify_prune(const SuturedGraph& g, const PruneResult& r) {
  std::size_t nv = g.vertex_count(), ne = g.edge_count();
  if (r.cut_witness.size() != nv) return false;

  std::vector<int> parent(nv);
  for (std::size_t i = 0; i < nv; ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  std::vector<Color> ccolor(g.vertex_colors());
  std::vector<char> alive(ne, 1);

  for (const PruneStep& st : r.steps) {
    if (st.edge < 0 || static_cast<std::size_t>(st.edge) >= ne) return false;
    if (!alive[static_cast<std::size_t>(st.edge)]) return false;
    const GraphEdge& f = g.edge(st.edge);
    if (f.color != Color::Black) return false;
    int u = find(f.tail), v = find(f.head);
    if (u == v) return false;  // a loop is never a bridge
    // far side of the claimed bridge, in the current merged graph
    std::vector<char> seen(nv, 0);
    std::vector<int> stack;
    bool ug = ccolor[static_cast<std::size_t>(u)] == Color::Green;
    bool vg = ccolor[static_cast<std::size_t>(v)] == Color::Green;
    if (ug == vg) return false;  // exactly one endpoint class touches R_-
    int green_cls = ug ? u : v;
    int black_cls = ug ? v : u;
    stack.push_back(black_cls);
    seen[static_cast<std::size_t>(black_cls)] = 1;
    std::vector<int> side;
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      side.push_back(w);
      for (std::size_t e = 0; e < ne; ++e) {
        if (!alive[e] || static_cast<int>(e) == st.edge) continue;
        const GraphEdge& ge = g.edge(static_cast<int>(e));
        int a = find(ge.tail), b = find(ge.head);
        int o = a == w ? b : (b == w ? a : -1);
        if (o >= 0 && !seen[static_cast<std::size_t>(o)]) {
          seen[static_cast<std::size_t>(o)] = 1;
          stack.push_back(o);
        }
      }
    }
    if (seen[static_cast<std::size_t>(green_cls)]) return false;  // not a bridge
    for (int w : side)
      if (ccolor[static_cast<std::size_t>(w)] == Color::Green) return false;
    std::sort(side.begin(), side.end());
    if (side != st.black_side) return false;
    alive[static_cast<std::size_t>(st.edge)] = 0;
    parent[static_cast<std::size_t>(black_cls)] = green_cls;
  }

  std::set<int> expected;
  for (std::size_t e = 0; e < ne; ++e)
    if (alive[e]) expected.insert(static_cast<int>(e));
  if (expected != r.surviving) return false;
  for (int e : expected)
    if (g.edge(e).color != Color::Green) return false;

  // the witness solves: sum_v a_v cut(v) = weighted indicator of the removals
  for (std::size_t e = 0; e < ne; ++e) {
    const GraphEdge& ge = g.edge(static_cast<int>(e));
    Int lhs = 0;
    if (ge.tail != ge.head)
      lhs = Int(ge.weight) * (r.cut_witness[static_cast<std::size_t>(ge.head)] -
                              r.cut_witness[static_cast<std::size_t>(ge.tail)]);
    Int rhs = r.surviving.count(static_cast<int>(e)) ? Int(0) : Int(ge.weight);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace sutura
