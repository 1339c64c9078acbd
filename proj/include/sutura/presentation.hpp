#pragma once

#include <vector>

#include "sutura/matrix.hpp"
#include "sutura/ring_hom.hpp"
#include "sutura/snf.hpp"
#include "sutura/word.hpp"

namespace sutura {

class GroupPresentation {
 public:
  GroupPresentation(int n_generators, std::vector<Word> relators)
      : n_gens_(n_generators), relators_(std::move(relators)) {
    if (n_generators < 0) throw IndexOutOfRange("negative generator count");
    for (const Word& r : relators_)
      for (const Letter& l : r.letters())
        if (l.gen < 0 || l.gen >= n_gens_) throw IndexOutOfRange("relator letter out of range");
  }

  int generators() const { return n_gens_; }
  const std::vector<Word>& relators() const { return relators_; }

 private:
  int n_gens_;
  std::vector<Word> relators_;
};

// H_1 of the presented group: Z^free_rank + sum Z/d_i, with the projection to
// the free quotient and the Smith certificate for the abelianized relator
// matrix retained.
struct AbelianStructure {
  int free_rank = 0;
  std::vector<Int> torsion_divisors;  // each > 1, each dividing the next
  Matrix<Int> to_free;                // free_rank x n_generators

  // certificate: u * relator_matrix * v = d
  Matrix<Int> relator_matrix;  // #relators x #generators
  Matrix<Int> u, d, v;

  RingHom to_free_hom() const {
    std::vector<std::vector<std::int64_t>> rows(to_free.rows());
    for (std::size_t i = 0; i < to_free.rows(); ++i) {
      rows[i].resize(to_free.cols());
      for (std::size_t j = 0; j < to_free.cols(); ++j) {
        const Int& x = to_free.at(i, j);
        if (!x.fits_slong_p()) throw Error("abelianization matrix entry does not fit int64");
        rows[i][j] = x.get_si();
      }
    }
    return RingHom(static_cast<int>(to_free.rows()), static_cast<int>(to_free.cols()),
                   std::move(rows));
  }
};

inline AbelianStructure abelianization(const GroupPresentation& g) {
  std::size_t r = g.relators().size();
  std::size_t n = static_cast<std::size_t>(g.generators());
  Matrix<Int> rel(r, n, Int(0));
  for (std::size_t i = 0; i < r; ++i) {
    ExpVec e = g.relators()[i].abelianized(g.generators());
    for (std::size_t j = 0; j < n; ++j) rel.at(i, j) = Int(e[j]);
  }
  SmithForm s = smith_normal_form(rel);

  AbelianStructure out;
  out.relator_matrix = rel;
  out.u = s.u;
  out.d = s.d;
  out.v = s.v;

  // Generator class e_j maps to row j of v in the coordinates where the
  // relator lattice is diagonal; the free coordinates are the columns whose
  // diagonal entry is 0 (or beyond the diagonal).
  std::vector<std::size_t> free_cols;
  std::size_t nmin = std::min(r, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (j >= nmin || s.d.at(j, j) == 0)
      free_cols.push_back(j);
    else if (s.d.at(j, j) > 1)
      out.torsion_divisors.push_back(s.d.at(j, j));
  }
  out.free_rank = static_cast<int>(free_cols.size());
  out.to_free = Matrix<Int>(free_cols.size(), n, Int(0));
  for (std::size_t k = 0; k < free_cols.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) out.to_free.at(k, j) = s.v.at(j, free_cols[k]);
  return out;
}

// Full certificate check: the retained Smith data really diagonalizes the
// abelianized relator matrix of g with unimodular transforms, and the derived
// fields (free rank, torsion divisors, projection) match it.
inline bool verify_abelianization(const GroupPresentation& g, const AbelianStructure& ab) {
  std::size_t r = g.relators().size(), n = static_cast<std::size_t>(g.generators());
  if (ab.relator_matrix.rows() != r || ab.relator_matrix.cols() != n) return false;
  for (std::size_t i = 0; i < r; ++i) {
    ExpVec e = g.relators()[i].abelianized(g.generators());
    for (std::size_t j = 0; j < n; ++j)
      if (ab.relator_matrix.at(i, j) != Int(e[j])) return false;
  }
  if (mat_mul(mat_mul(ab.u, ab.relator_matrix), ab.v) != ab.d) return false;
  if (abs(det_int(ab.u)) != 1 || abs(det_int(ab.v)) != 1) return false;

  std::size_t nmin = std::min(r, n);
  std::vector<std::size_t> free_cols;
  std::vector<Int> torsion;
  for (std::size_t i = 0; i < ab.d.rows(); ++i)
    for (std::size_t j = 0; j < ab.d.cols(); ++j)
      if (i != j && ab.d.at(i, j) != 0) return false;
  for (std::size_t j = 0; j < n; ++j) {
    Int dj = j < nmin ? ab.d.at(j, j) : Int(0);
    if (dj < 0) return false;
    if (j + 1 < nmin) {
      const Int& next = ab.d.at(j + 1, j + 1);
      if (dj == 0 && next != 0) return false;  // zeros come last
      if (dj != 0 && next != 0 && next % dj != 0) return false;
    }
    if (dj == 0) free_cols.push_back(j);
    else if (dj > 1) torsion.push_back(dj);
  }
  if (ab.free_rank != static_cast<int>(free_cols.size())) return false;
  if (ab.torsion_divisors != torsion) return false;
  if (ab.to_free.rows() != free_cols.size() || ab.to_free.cols() != n) return false;
  for (std::size_t k = 0; k < free_cols.size(); ++k)
    for (std::size_t j = 0; j < n; ++j)
      if (ab.to_free.at(k, j) != ab.v.at(j, free_cols[k])) return false;
  return true;
}

// Fox derivative of w with respect to generator j, pushed through `target`
// (which must kill the relators, e.g. psi composed with the projection to the
// free quotient of H_1). Satisfies d(uv) = du + u-bar dv, d(x_j) = 1,
// d(x_j^{-1}) = -x_j-bar^{-1}.
inline LaurentPoly fox_derivative(const Word& w, int j, const RingHom& target) {
  if (j < 0 || j >= target.source_rank()) throw IndexOutOfRange("fox_derivative generator index");
  int m = target.target_rank();
  LaurentPoly out(m);
  ExpVec prefix(static_cast<std::size_t>(m), 0);
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || l.gen >= target.source_rank())
      throw IndexOutOfRange("word letter outside target source rank");
    ExpVec img(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) img[static_cast<std::size_t>(i)] = target.entry(i, l.gen);
    if (l.sign > 0) {
      if (l.gen == j) out.add_term(prefix, 1);
      prefix = exp_add(prefix, img);
    } else {
      prefix = exp_sub(prefix, img);
      if (l.gen == j) out.add_term(prefix, -1);
    }
  }
  return out;
}

// Fox Jacobian (#relators x #generators) over Z[F], F the target of
// psi composed with the free quotient of H_1.
inline Matrix<LaurentPoly> alexander_matrix(const GroupPresentation& g, const RingHom& psi,
                                            const AbelianStructure& ab) {
  if (psi.source_rank() != ab.free_rank)
    throw RankMismatch("psi source rank != free rank of H_1");
  RingHom target = psi.compose(ab.to_free_hom());
  std::size_t r = g.relators().size();
  std::size_t n = static_cast<std::size_t>(g.generators());
  Matrix<LaurentPoly> m(r, n, LaurentPoly(psi.target_rank()));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = fox_derivative(g.relators()[i], static_cast<int>(j), target);
  return m;
}

inline Matrix<LaurentPoly> alexander_matrix(const GroupPresentation& g, const RingHom& psi) {
  return alexander_matrix(g, psi, abelianization(g));
}

}  // namespace sutura
