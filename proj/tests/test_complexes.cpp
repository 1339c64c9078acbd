#include <catch2/catch.hpp>

#include "oracles.hpp"
#include "sutura/complexes.hpp"

using namespace sutura;

namespace {

Matrix<LaurentPoly> poly_matrix(int rank, std::vector<std::vector<std::string>> rows) {
  Matrix<LaurentPoly> m(rows.size(), rows.empty() ? 0 : rows.front().size(), LaurentPoly(rank));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = parse_poly(rows[i][j], rank);
  return m;
}

// random product of elementary row and column operations over Z[t^{+-1}]
void random_unimodular_ops(std::mt19937& rng, Matrix<LaurentPoly>& m, int rank) {
  int ops = 4 + static_cast<int>(oracles::rnd_range(rng, 0, 6));
  for (int k = 0; k < ops; ++k) {
    bool row = oracles::rnd_range(rng, 0, 1) == 0;
    std::size_t n = row ? m.rows() : m.cols();
    if (n < 1) continue;
    std::size_t i = static_cast<std::size_t>(oracles::rnd_range(rng, 0, static_cast<std::int64_t>(n) - 1));
    switch (oracles::rnd_range(rng, 0, 2)) {
      case 0: {  // swap
        std::size_t j = static_cast<std::size_t>(oracles::rnd_range(rng, 0, static_cast<std::int64_t>(n) - 1));
        if (i == j) break;
        if (row) m.swap_rows(i, j);
        else m.swap_cols(i, j);
        break;
      }
      case 1: {  // scale by a unit +-t^k
        LaurentPoly u = LaurentPoly::monomial(
            rank, ExpVec{oracles::rnd_range(rng, -2, 2)}, oracles::rnd_range(rng, 0, 1) == 0 ? 1 : -1);
        if (row)
          for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) = m.at(i, c) * u;
        else
          for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, i) = m.at(r, i) * u;
        break;
      }
      default: {  // add a polynomial multiple of another row/column
        std::size_t j = static_cast<std::size_t>(oracles::rnd_range(rng, 0, static_cast<std::int64_t>(n) - 1));
        if (i == j) break;
        LaurentPoly q = oracles::random_poly(rng, rank, 2, -3, 3, -1, 1);
        if (row)
          for (std::size_t c = 0; c < m.cols(); ++c)
            m.at(i, c) = m.at(i, c) + q * m.at(j, c);
        else
          for (std::size_t r = 0; r < m.rows(); ++r)
            m.at(r, i) = m.at(r, i) + q * m.at(r, j);
        break;
      }
    }
  }
}

}  // namespace

TEST_CASE("specialize examples") {
  Matrix<LaurentPoly> m = poly_matrix(2, {{"x1 - 1"}});
  PairComplex same = specialize(m, RingHom::identity(2));
  CHECK(same.boundary().at(0, 0) == parse_poly("x1 - 1", 2));

  PairComplex killed = specialize(m, RingHom::trivial(2));
  CHECK(killed.boundary().at(0, 0).is_zero());

  PairComplex collapsed = specialize(poly_matrix(2, {{"x1 - x2"}}), RingHom(1, 2, {{1, 1}}));
  CHECK(collapsed.boundary().at(0, 0).is_zero());

  CHECK_THROWS_AS(PairComplex(Matrix<LaurentPoly>(0, 2, LaurentPoly(1)), 1), EmptyComplex);
}

TEST_CASE("stabilization pads zero columns") {
  // 2 rows, 1 column: a column of zeros is appended so r >= s
  Matrix<LaurentPoly> tall(2, 1, LaurentPoly(1));
  tall.at(0, 0) = parse_poly("t", 1);
  tall.at(1, 0) = parse_poly("1", 1);
  PairComplex c(tall, 1);
  CHECK(c.s() == 2);
  CHECK(c.r() == 2);
  CHECK(c.boundary().at(0, 1).is_zero());
}

TEST_CASE("module_order examples") {
  CHECK(module_order(PairComplex(poly_matrix(1, {{"2t^-1 - 3 + 2t"}}), 1)) ==
        normalize(parse_poly("2 - 3t + 2t^2", 1)));
  CHECK(module_order(PairComplex(poly_matrix(1, {{"t - 1", "0"}, {"0", "t + 1"}}), 1)) ==
        normalize(parse_poly("t^2 - 1", 1)));
  CHECK(module_order(PairComplex(poly_matrix(1, {{"t - 1", "0"}}), 1)) ==
        normalize(parse_poly("t - 1", 1)));
}

TEST_CASE("qf_homology_ranks examples") {
  QfRanks r1 = qf_homology_ranks(PairComplex(poly_matrix(1, {{"t - 1"}}), 1));
  CHECK(r1.h0 == 0);
  CHECK(r1.h1 == 0);

  QfRanks r2 = qf_homology_ranks(PairComplex(poly_matrix(1, {{"0"}}), 1));
  CHECK(r2.h0 == 1);
  CHECK(r2.h1 == 1);

  QfRanks r3 = qf_homology_ranks(PairComplex(poly_matrix(1, {{"1", "0"}, {"0", "1"}}), 1));
  CHECK(r3.h0 == 0);
  CHECK(r3.h1 == 0);
}

TEST_CASE("h0_pair truth table") {
  CHECK(h0_pair(true, true, true) == 1);
  CHECK(h0_pair(true, true, false) == 0);
  CHECK(h0_pair(true, false, true) == 0);
  CHECK(h0_pair(true, false, false) == 0);
  CHECK_THROWS_AS(h0_pair(false, true, true), NotConnected);
}

TEST_CASE("order invariance under unimodular operations and stabilization") {
  std::mt19937 rng(7201);
  for (int iter = 0; iter < 30; ++iter) {
    Matrix<LaurentPoly> m(3, 5, LaurentPoly(1));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) m.at(i, j) = oracles::random_poly(rng, 1, 3, -5, 5, 0, 2);
    LaurentPoly base = module_order(PairComplex(m, 1));

    Matrix<LaurentPoly> tweaked = m;
    random_unimodular_ops(rng, tweaked, 1);
    CHECK(module_order(PairComplex(tweaked, 1)) == base);

    Matrix<LaurentPoly> padded(3, 7, LaurentPoly(1));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) padded.at(i, j) = m.at(i, j);
    CHECK(module_order(PairComplex(padded, 1)) == base);
  }
}

TEST_CASE("order nonzero iff torsion over the fraction field") {
  std::mt19937 rng(7202);
  for (int iter = 0; iter < 50; ++iter) {
    std::size_t s = 1 + static_cast<std::size_t>(oracles::rnd_range(rng, 0, 2));
    std::size_t r = s + static_cast<std::size_t>(oracles::rnd_range(rng, 0, 2));
    Matrix<LaurentPoly> m(s, r, LaurentPoly(1));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < r; ++j) m.at(i, j) = oracles::random_poly(rng, 1, 2, -2, 2, 0, 1);
    PairComplex c(m, 1);
    CHECK((module_order(c).is_zero() ? 1 : 0) == (qf_homology_ranks(c).h0 == 0 ? 0 : 1));
  }
}

TEST_CASE("square case: order equals the determinant") {
  std::mt19937 rng(7203);
  for (int iter = 0; iter < 20; ++iter) {
    std::size_t n = 1 + static_cast<std::size_t>(oracles::rnd_range(rng, 0, 2));
    Matrix<LaurentPoly> m(n, n, LaurentPoly(1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = oracles::random_poly(rng, 1, 2, -3, 3, 0, 2);
    CHECK(module_order(PairComplex(m, 1)) == normalize(det_poly(m, 1)));
    CHECK(normalize(det_poly(m, 1)) == normalize(oracles::naive_det(m, 1)));
  }
}
