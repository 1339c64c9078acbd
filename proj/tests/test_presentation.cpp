#include <catch2/catch.hpp>

#include "oracles.hpp"
#include "sutura/presentation.hpp"

using namespace sutura;

namespace {

// U R V = D with |det U| = |det V| = 1
void check_certificate(const AbelianStructure& ab) {
  Matrix<Int> urv = mat_mul(mat_mul(ab.u, ab.relator_matrix), ab.v);
  CHECK(urv == ab.d);
  CHECK(abs(det_int(ab.u)) == 1);
  CHECK(abs(det_int(ab.v)) == 1);
  std::size_t nmin = std::min(ab.d.rows(), ab.d.cols());
  for (std::size_t i = 0; i < ab.d.rows(); ++i)
    for (std::size_t j = 0; j < ab.d.cols(); ++j)
      if (i != j) CHECK(ab.d.at(i, j) == 0);
  for (std::size_t i = 0; i + 1 < nmin; ++i)
    if (ab.d.at(i + 1, i + 1) != 0) CHECK(ab.d.at(i + 1, i + 1) % ab.d.at(i, i) == 0);
}

}  // namespace

TEST_CASE("abelianization examples") {
  GroupPresentation trefoil(2, {Word::parse("a b a B A B", 2)});
  AbelianStructure ab = abelianization(trefoil);
  CHECK(ab.free_rank == 1);
  CHECK(ab.torsion_divisors.empty());
  check_certificate(ab);
  CHECK(verify_abelianization(trefoil, ab));

  GroupPresentation free2(2, {});
  AbelianStructure f = abelianization(free2);
  CHECK(f.free_rank == 2);
  CHECK(f.torsion_divisors.empty());

  GroupPresentation z2(1, {Word::parse("a a", 1)});
  AbelianStructure t = abelianization(z2);
  CHECK(t.free_rank == 0);
  REQUIRE(t.torsion_divisors.size() == 1);
  CHECK(t.torsion_divisors[0] == 2);
  check_certificate(t);
  CHECK(verify_abelianization(z2, t));

  // a tampered certificate is rejected
  AbelianStructure bad = t;
  bad.free_rank = 1;
  CHECK_FALSE(verify_abelianization(z2, bad));
  AbelianStructure bad2 = t;
  bad2.d.at(0, 0) = 3;
  CHECK_FALSE(verify_abelianization(z2, bad2));
}

TEST_CASE("abelianization is presentation-order independent") {
  std::mt19937 rng(7101);
  for (int iter = 0; iter < 30; ++iter) {
    int gens = 2 + static_cast<int>(oracles::rnd_range(rng, 0, 2));
    int nrel = static_cast<int>(oracles::rnd_range(rng, 0, 3));
    std::vector<Word> rels;
    for (int i = 0; i < nrel; ++i)
      rels.push_back(oracles::random_reduced_word(rng, gens, static_cast<int>(oracles::rnd_range(rng, 1, 6))));
    AbelianStructure a = abelianization(GroupPresentation(gens, rels));
    std::vector<Word> shuffled = rels;
    for (std::size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[oracles::rnd_range(rng, 0, static_cast<std::int64_t>(i) - 1)]);
    AbelianStructure b = abelianization(GroupPresentation(gens, shuffled));
    CHECK(a.free_rank == b.free_rank);
    CHECK(a.torsion_divisors == b.torsion_divisors);
    check_certificate(a);
    CHECK(verify_abelianization(GroupPresentation(gens, rels), a));
  }
}

TEST_CASE("adding a redundant relator keeps the invariants") {
  GroupPresentation trefoil(2, {Word::parse("a b a B A B", 2)});
  Word r = trefoil.relators()[0];
  Word conj = Word::parse("b", 2) * r * Word::parse("B", 2);
  GroupPresentation fat(2, {r, conj});
  AbelianStructure a = abelianization(trefoil), b = abelianization(fat);
  CHECK(a.free_rank == b.free_rank);
  CHECK(a.torsion_divisors == b.torsion_divisors);
}

TEST_CASE("fox derivative base cases") {
  RingHom id = RingHom::identity(2);
  CHECK(fox_derivative(Word::parse("a", 2), 0, id).is_one());
  CHECK(fox_derivative(Word::parse("b", 2), 0, id).is_zero());
  CHECK(fox_derivative(Word::parse("A", 2), 0, id) ==
        -LaurentPoly::monomial(2, {-1, 0}, 1));

  // d(aba^-1b^-1)/da = 1 - aba^-1 pushed through the target
  RingHom collapse(1, 2, {{1, 1}});
  LaurentPoly d = fox_derivative(Word::parse("a b A B", 2), 0, collapse);
  CHECK(d == parse_poly("1 - t", 1));
}

TEST_CASE("fox fundamental identity") {
  std::mt19937 rng(7102);
  for (int iter = 0; iter < 100; ++iter) {
    int gens = 1 + static_cast<int>(oracles::rnd_range(rng, 0, 3));
    Word w = oracles::random_reduced_word(rng, gens, static_cast<int>(oracles::rnd_range(rng, 0, 8)));
    int target_rank = 1 + static_cast<int>(oracles::rnd_range(rng, 0, 1));
    std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(target_rank));
    for (auto& row : rows) {
      row.resize(static_cast<std::size_t>(gens));
      for (auto& x : row) x = oracles::rnd_range(rng, -2, 2);
    }
    RingHom psi(target_rank, gens, rows);
    LaurentPoly lhs(target_rank);
    for (int j = 0; j < gens; ++j) {
      ExpVec img(static_cast<std::size_t>(target_rank), 0);
      for (int i = 0; i < target_rank; ++i) img[static_cast<std::size_t>(i)] = psi.entry(i, j);
      LaurentPoly xbar_minus_1 = LaurentPoly::monomial(target_rank, img, 1) -
                                 LaurentPoly::constant(target_rank, 1);
      lhs = lhs + fox_derivative(w, j, psi) * xbar_minus_1;
    }
    LaurentPoly rhs = LaurentPoly::monomial(target_rank, psi.apply(w.abelianized(gens)), 1) -
                      LaurentPoly::constant(target_rank, 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("alexander_matrix examples") {
  GroupPresentation trefoil(2, {Word::parse("a b a B A B", 2)});
  Matrix<LaurentPoly> m = alexander_matrix(trefoil, RingHom::identity(1));
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 2);
  CHECK(normalize(m.at(0, 0)) == normalize(parse_poly("t^2 - t + 1", 1)));
  CHECK(normalize(m.at(0, 1)) == normalize(parse_poly("t^2 - t + 1", 1)));
  CHECK(m.at(0, 0) == -m.at(0, 1));

  GroupPresentation free2(2, {});
  Matrix<LaurentPoly> f = alexander_matrix(free2, RingHom::identity(2));
  CHECK(f.rows() == 0);
  CHECK(f.cols() == 2);

  // <a | a^n> with trivial psi: the 1x1 matrix (n)
  for (int n = 1; n <= 5; ++n) {
    std::vector<Letter> ls(static_cast<std::size_t>(n), Letter{0, 1});
    GroupPresentation g(1, {Word(ls)});
    AbelianStructure ab = abelianization(g);
    CHECK(ab.free_rank == 0);
    Matrix<LaurentPoly> mm = alexander_matrix(g, RingHom::identity(0), ab);
    REQUIRE(mm.rows() == 1);
    REQUIRE(mm.cols() == 1);
    CHECK(mm.at(0, 0) == LaurentPoly::constant(0, n));
  }
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(Word::parse("a c", 2), SemanticError);
  CHECK_THROWS_AS(fox_derivative(Word::parse("a", 2), 5, RingHom::identity(2)), IndexOutOfRange);
  GroupPresentation trefoil(2, {Word::parse("a b a B A B", 2)});
  CHECK_THROWS_AS(alexander_matrix(trefoil, RingHom::identity(3)), RankMismatch);
}
