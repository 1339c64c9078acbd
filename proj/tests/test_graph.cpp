#include <catch2/catch.hpp>

#include "oracles.hpp"
#include "sutura/decomp_graph.hpp"

using namespace sutura;

namespace {

const Color G = Color::Green;
const Color B = Color::Black;

}  // namespace

TEST_CASE("graph construction invariants") {
  CHECK_THROWS_AS(SuturedGraph({B}, {}), InvalidColoring);  // no green vertex
  CHECK_THROWS_AS(SuturedGraph({G, B}, {{0, 1, G, 1}}), InvalidColoring);  // green edge at black
  CHECK_THROWS_AS(SuturedGraph({G, G}, {}), InvalidGraph);  // disconnected
  CHECK_THROWS_AS(SuturedGraph({G, G}, {{0, 1, G, 0}}), InvalidGraph);  // zero weight
  CHECK_THROWS_AS(SuturedGraph({G}, {{0, 2, G, 1}}), InvalidGraph);  // endpoint range
  CHECK_NOTHROW(SuturedGraph({G}, {}));
  CHECK_NOTHROW(SuturedGraph({G, B}, {{0, 1, B, 1}}));
}

TEST_CASE("bridge_test examples") {
  // path: tree edges are bridges
  SuturedGraph path({G, G, G}, {{0, 1, G, 1}, {1, 2, G, 1}});
  CHECK(bridge_test(path, 0));
  CHECK(bridge_test(path, 1));

  // triangle: cycle edges are not
  SuturedGraph tri({G, G, G}, {{0, 1, G, 1}, {1, 2, G, 1}, {2, 0, G, 1}});
  CHECK_FALSE(bridge_test(tri, 0));
  CHECK_FALSE(bridge_test(tri, 1));
  CHECK_FALSE(bridge_test(tri, 2));

  // parallel edges form a length-2 cycle
  SuturedGraph par({G, G}, {{0, 1, G, 1}, {0, 1, G, 2}});
  CHECK_FALSE(bridge_test(par, 0));
  CHECK_FALSE(bridge_test(par, 1));

  // a self-loop is never a bridge
  SuturedGraph loop({G}, {{0, 0, G, 1}});
  CHECK_FALSE(bridge_test(loop, 0));

  CHECK_THROWS_AS(bridge_test(loop, 3), UnknownEdge);
}

TEST_CASE("prune: all-green graph is untouched") {
  SuturedGraph g({G, G, G}, {{0, 1, G, 1}, {1, 2, G, 1}, {2, 0, G, 1}});
  PruneResult r = prune_non_touching(g);
  CHECK(r.surviving == std::set<int>{0, 1, 2});
  CHECK(r.steps.empty());
}

TEST_CASE("prune: black leaf removed") {
  SuturedGraph g({G, B, G}, {{0, 2, G, 1}, {0, 1, B, 1}});
  PruneResult r = prune_non_touching(g);
  CHECK(r.surviving == std::set<int>{0});
  REQUIRE(r.steps.size() == 1);
  CHECK(r.steps[0].edge == 1);
  CHECK(r.steps[0].black_side == std::vector<int>{1});
  CHECK(class_equal(g, {0, 1}, r.surviving));
  CHECK(verify_prune(g, r));

  // tampered certificates are rejected
  PruneResult forged = r;
  forged.steps[0].black_side = {0};
  CHECK_FALSE(verify_prune(g, forged));
  PruneResult wrong_witness = r;
  wrong_witness.cut_witness[0] += 1;
  CHECK_FALSE(verify_prune(g, wrong_witness));
  PruneResult kept_too_much = r;
  kept_too_much.surviving.insert(1);
  CHECK_FALSE(verify_prune(g, kept_too_much));
}

TEST_CASE("prune: black tree hanging from green") {
  // green 0 -- b1 -- b2, plus green edge 0-3
  SuturedGraph g({G, B, B, G},
                 {{0, 3, G, 1}, {0, 1, B, 1}, {1, 2, B, 2}});
  PruneResult r = prune_non_touching(g);
  CHECK(r.surviving == std::set<int>{0});
  CHECK(r.steps.size() == 2);
  CHECK(class_equal(g, {0, 1, 2}, r.surviving));
}

TEST_CASE("prune: black edge on a cycle fails") {
  // green 0, black 1 joined by two parallel black edges
  SuturedGraph g({G, B}, {{0, 1, B, 1}, {0, 1, B, 1}});
  CHECK_THROWS_AS(prune_non_touching(g), NonSeparatingBlackEdge);
}

TEST_CASE("prune: black self-loop behind a bridge fails") {
  // the loop is not null-homologous in the cut-space model, and becomes a
  // loop at a green piece once the bridge is contracted
  SuturedGraph g({G, B}, {{0, 1, B, 1}, {1, 1, B, 1}});
  CHECK_THROWS_AS(prune_non_touching(g), NonSeparatingBlackEdge);
}

TEST_CASE("prune: bridge with green on both sides is rejected") {
  SuturedGraph g({G, G}, {{0, 1, B, 1}});
  CHECK_THROWS_AS(prune_non_touching(g), InvalidColoring);

  SuturedGraph deep({G, B, G}, {{0, 1, B, 1}, {1, 2, B, 1}});
  CHECK_THROWS_AS(prune_non_touching(deep), InvalidColoring);
}

TEST_CASE("mv_certificate examples") {
  // all green: empty matrix, vacuously invertible
  SuturedGraph green({G, G}, {{0, 1, G, 1}});
  MvReport all_green = mv_certificate(green);
  CHECK(all_green.verdict == MvVerdict::Invertible);
  CHECK(all_green.black_vertices.empty());
  CHECK(all_green.black_edges.empty());

  // matrix-level route for the 1x1 self-loop block: det = 1 - x
  Matrix<LaurentPoly> loop_block(1, 1, parse_poly("1 - x1", 1));
  CHECK(mv_invertibility(loop_block) == MvVerdict::Invertible);

  // a valid graph with a black self-loop also carries the bridge edge, so the
  // matrix is 1x2 and the certificate correctly fails
  SuturedGraph loop({G, B}, {{0, 1, B, 1}, {1, 1, B, 2}});
  MvReport lr = mv_certificate(loop);
  CHECK(lr.verdict == MvVerdict::NotInvertible);
  REQUIRE(lr.matrix.rows() == 1);
  REQUIRE(lr.matrix.cols() == 2);
  CHECK(lr.matrix.at(0, 0) == -parse_poly("t", 1));            // -x^{w}, head black
  CHECK(lr.matrix.at(0, 1) == parse_poly("1 - t^2", 1));       // 1 - x^{w} for the loop

  // black leaf: 1x1 matrix (-x^w), invertible
  SuturedGraph leaf({G, B}, {{0, 1, B, 3}});
  MvReport lf = mv_certificate(leaf);
  CHECK(lf.verdict == MvVerdict::Invertible);
  CHECK(normalize(lf.det).is_one());

  // unequal counts: not square
  SuturedGraph unsq({G, B, B}, {{0, 1, B, 1}, {0, 2, B, 1}, {1, 2, B, 1}, {1, 2, B, 1}});
  CHECK(mv_certificate(unsq).verdict == MvVerdict::NotInvertible);

  // black path green - b1 - b2: 2x2 triangular block, det a unit monomial
  SuturedGraph path({G, B, B}, {{0, 1, B, 2}, {1, 2, B, 3}});
  MvReport pr = mv_certificate(path);
  REQUIRE(pr.matrix.rows() == 2);
  REQUIRE(pr.matrix.cols() == 2);
  CHECK(pr.matrix.at(0, 0) == -parse_poly("t^2", 1));  // head of edge 0 is b1
  CHECK(pr.matrix.at(0, 1) == parse_poly("1", 1));     // tail of edge 1 is b1
  CHECK(pr.matrix.at(1, 1) == -parse_poly("t^3", 1));  // head of edge 1 is b2
  CHECK(pr.matrix.at(1, 0).is_zero());
  CHECK(pr.verdict == MvVerdict::Invertible);
  CHECK(normalize(pr.det).is_one());
}

TEST_CASE("class_equal examples") {
  SuturedGraph g({G, B, G},
                 {{0, 2, G, 1}, {0, 1, B, 1}, {0, 2, G, 1}});
  CHECK(class_equal(g, {0, 1}, {0, 1}));

  // removing the bridge whose cut side is interior is trivial in homology
  CHECK(class_equal(g, {0, 1, 2}, {0, 2}));

  // removing a cycle edge is not: edges 0 and 2 are parallel
  CHECK_FALSE(class_equal(g, {0, 2}, {0}));

  CHECK_THROWS_AS(class_equal(g, {7}, {}), UnknownEdge);
}

TEST_CASE("prune trichotomy on arbitrary valid graphs") {
  // success, NonSeparatingBlackEdge, or InvalidColoring; success implies a
  // replayable certificate and class preservation
  std::mt19937 rng(7402);
  int successes = 0, rejections = 0;
  for (int iter = 0; iter < 200; ++iter) {
    int nv = 2 + static_cast<int>(oracles::rnd_range(rng, 0, 6));
    std::vector<Color> colors;
    colors.push_back(G);  // guarantee a green vertex
    for (int v = 1; v < nv; ++v)
      colors.push_back(oracles::rnd_range(rng, 0, 2) == 0 ? B : G);
    std::vector<GraphEdge> edges;
    auto edge_color = [&](int a, int b) {
      if (colors[static_cast<std::size_t>(a)] == B || colors[static_cast<std::size_t>(b)] == B)
        return B;
      return oracles::rnd_range(rng, 0, 1) == 0 ? B : G;
    };
    for (int v = 1; v < nv; ++v) {
      int p = static_cast<int>(oracles::rnd_range(rng, 0, v - 1));
      edges.push_back({p, v, edge_color(p, v), oracles::rnd_range(rng, 1, 3)});
    }
    int extra = static_cast<int>(oracles::rnd_range(rng, 0, 3));
    for (int k = 0; k < extra; ++k) {
      int a = static_cast<int>(oracles::rnd_range(rng, 0, nv - 1));
      int b = static_cast<int>(oracles::rnd_range(rng, 0, nv - 1));
      edges.push_back({a, b, edge_color(a, b), oracles::rnd_range(rng, 1, 3)});
    }
    SuturedGraph g(colors, edges);
    try {
      PruneResult r = prune_non_touching(g);
      ++successes;
      CHECK(verify_prune(g, r));
      std::set<int> all;
      for (std::size_t e = 0; e < g.edge_count(); ++e) all.insert(static_cast<int>(e));
      CHECK(class_equal(g, all, r.surviving));
      for (int e : r.surviving) CHECK(g.edge(e).color == G);
    } catch (const NonSeparatingBlackEdge&) {
      ++rejections;
    } catch (const InvalidColoring&) {
      ++rejections;
    }
  }
  // the generator must exercise both regimes
  CHECK(successes > 20);
  CHECK(rejections > 20);
}

TEST_CASE("invertible certificate implies clean pruning and confluence") {
  std::mt19937 rng(7401);
  int tested = 0;
  while (tested < 25) {
    // green core tree with extra green edges, black trees hanging off it
    int greens = 2 + static_cast<int>(oracles::rnd_range(rng, 0, 3));
    std::vector<Color> colors(static_cast<std::size_t>(greens), G);
    std::vector<GraphEdge> edges;
    for (int v = 1; v < greens; ++v)
      edges.push_back({static_cast<int>(oracles::rnd_range(rng, 0, v - 1)), v, G,
                       oracles::rnd_range(rng, 1, 2)});
    int blacks = 1 + static_cast<int>(oracles::rnd_range(rng, 0, 4));
    for (int b = 0; b < blacks; ++b) {
      int id = static_cast<int>(colors.size());
      colors.push_back(B);
      // parent: any green vertex or existing black vertex
      int parent = static_cast<int>(oracles::rnd_range(rng, 0, id - 1));
      bool flip = oracles::rnd_range(rng, 0, 1) == 0;
      edges.push_back(flip ? GraphEdge{id, parent, B, oracles::rnd_range(rng, 1, 3)}
                           : GraphEdge{parent, id, B, oracles::rnd_range(rng, 1, 3)});
    }
    SuturedGraph g(colors, edges);
    if (mv_certificate(g).verdict != MvVerdict::Invertible) continue;
    ++tested;

    PruneResult base = prune_non_touching(g);
    std::set<int> all;
    for (std::size_t e = 0; e < g.edge_count(); ++e) all.insert(static_cast<int>(e));
    CHECK(class_equal(g, all, base.surviving));
    CHECK(verify_prune(g, base));
    for (const auto& st : base.steps)
      for (int v : st.black_side) CHECK(g.vertex_color(v) == B);

    // replay under random selection orders: identical surviving set
    std::vector<int> pri(g.edge_count());
    for (std::size_t i = 0; i < pri.size(); ++i) pri[i] = static_cast<int>(i);
    for (int rep = 0; rep < 5; ++rep) {
      for (std::size_t i = pri.size(); i > 1; --i)
        std::swap(pri[i - 1], pri[oracles::rnd_range(rng, 0, static_cast<std::int64_t>(i) - 1)]);
      CHECK(prune_non_touching(g, pri).surviving == base.surviving);
    }
  }
}
