#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sutura/errors.hpp"

namespace sutura {

using Int = mpz_class;
using Rat = mpq_class;

// Exponent vector of a monomial in Z[x1^{±1}, ..., xn^{±1}].
// The length is the rank of the underlying free abelian group; comparison is
// lexicographic (std::vector's operator<), which is the single global
// tiebreak used throughout.
using ExpVec = std::vector<std::int64_t>;

inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline ExpVec exp_min(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

// Element of the group ring Z[F], F free abelian of fixed rank. Terms are a
// finite map from exponent vectors to nonzero big integers; the zero
// polynomial is the empty map. Values are immutable in spirit: every
// operation returns a fresh polynomial.
class LaurentPoly {
 public:
  explicit LaurentPoly(int rank) : rank_(rank) {
    if (rank < 0) throw RankMismatch("negative rank");
  }

  static LaurentPoly constant(int rank, Int c) {
    LaurentPoly p(rank);
    p.add_term(ExpVec(static_cast<std::size_t>(rank), 0), c);
    return p;
  }

  static LaurentPoly monomial(int rank, ExpVec e, Int c) {
    if (static_cast<int>(e.size()) != rank) throw RankMismatch("monomial exponent length != rank");
    LaurentPoly p(rank);
    p.add_term(std::move(e), c);
    return p;
  }

  // x_{i} (0-based variable index), exponent 1.
  static LaurentPoly variable(int rank, int i, std::int64_t power = 1) {
    if (i < 0 || i >= rank) throw RankMismatch("variable index out of range");
    ExpVec e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(i)] = power;
    return monomial(rank, std::move(e), 1);
  }

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExpVec, Int>& terms() const { return terms_; }

  Int coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_term(ExpVec e, const Int& c) {
    if (static_cast<int>(e.size()) != rank_) throw RankMismatch("term exponent length != rank");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // 1 (the multiplicative identity), exactly.
  bool is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    if (c != 1) return false;
    return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
  }

  // unit of Z[F]: a single term with coefficient ±1
  bool is_unit() const {
    if (terms_.size() != 1) return false;
    const Int& c = terms_.begin()->second;
    return c == 1 || c == -1;
  }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
  }

  // componentwise minimum over the support; pre: nonzero
  ExpVec min_exponent() const {
    if (is_zero()) throw ZeroPolynomial("min_exponent of zero polynomial");
    ExpVec m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) m = exp_min(m, e);
    return m;
  }

  LaurentPoly shifted(const ExpVec& by) const {
    LaurentPoly r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(exp_add(e, by), c);
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    check_ranks(a, b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    check_ranks(a, b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_ranks(a, b);
    LaurentPoly r(a.rank_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const Int& c) {
    LaurentPoly r(a.rank_);
    if (c == 0) return r;
    for (const auto& [e, ce] : a.terms_) r.terms_.emplace(e, ce * c);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  static void check_ranks(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.rank_ != b.rank_) throw RankMismatch("mixed-rank polynomial arithmetic");
  }

  int rank_;
  std::map<ExpVec, Int> terms_;
};

// Canonical representative of the ≐-class (equality up to multiplication by
// ±f, f in F): shift so the componentwise minimum over the support is the
// zero vector, then negate globally if the coefficient at the
// lexicographically smallest support point is negative. Idempotent; two
// polynomials are associate iff their normalizations are equal.
inline LaurentPoly normalize(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  ExpVec m = p.min_exponent();
  for (auto& x : m) x = -x;
  LaurentPoly s = p.shifted(m);
  if (s.terms().begin()->second < 0) return -s;
  return s;
}

inline bool associates(const LaurentPoly& a, const LaurentPoly& b) {
  return normalize(a) == normalize(b);
}

// Exact division in Z[F]. Returns the quotient when q divides p, nullopt
// otherwise. Both are shifted to ordinary polynomials first so the greedy
// leading-term loop terminates unconditionally.
inline std::optional<LaurentPoly> try_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.rank() != q.rank()) throw RankMismatch("try_divide rank mismatch");
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return LaurentPoly(p.rank());
  ExpVec mp = p.min_exponent(), mq = q.min_exponent();
  ExpVec neg_mp = mp, neg_mq = mq;
  for (auto& x : neg_mp) x = -x;
  for (auto& x : neg_mq) x = -x;
  LaurentPoly a = p.shifted(neg_mp);  // min exponent 0
  LaurentPoly b = q.shifted(neg_mq);
  LaurentPoly quot(p.rank());
  while (!a.is_zero()) {
    const auto& [ea, ca] = *a.terms().rbegin();  // lex-largest term
    const auto& [eb, cb] = *b.terms().rbegin();
    ExpVec t = exp_sub(ea, eb);
    if (std::any_of(t.begin(), t.end(), [](std::int64_t x) { return x < 0; })) return std::nullopt;
    if (!mpz_divisible_p(ca.get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
    Int qc;
    mpz_divexact(qc.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    LaurentPoly term = LaurentPoly::monomial(p.rank(), t, qc);
    quot = quot + term;
    a = a - term * b;
  }
  // restore the unit shift: p/q = x^{mp - mq} * (a0 / b0)
  return quot.shifted(exp_sub(mp, mq));
}

inline bool divides(const LaurentPoly& q, const LaurentPoly& p) {
  if (q.is_zero()) return p.is_zero();
  return try_divide(p, q).has_value();
}

namespace detail {

inline std::string var_name(int rank, std::size_t i) {
  if (rank == 1) return "t";
  return "x" + std::to_string(i + 1);
}

inline void print_monomial(std::ostringstream& os, int rank, const ExpVec& e, const Int& abs_c) {
  bool printed = false;
  if (abs_c != 1) {
    os << abs_c.get_str();
    printed = true;
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (printed) os << "*";
    os << var_name(rank, i);
    if (e[i] != 1) os << "^" << e[i];
    printed = true;
  }
  if (!printed) os << abs_c.get_str();  // constant 1
}

}  // namespace detail

// Terms in increasing lexicographic exponent order, explicit signs; the
// single variable prints as t and multivariable as x1..xn.
inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    detail::print_monomial(os, p.rank(), e, a);
  }
  return os.str();
}

// Parser for the same syntax: sums of terms like "2*t^-1", "t^2", "3",
// "x1*x2^2", with optional '*' between factors.
inline LaurentPoly parse_poly(const std::string& text, int rank) {
  struct Tok {
    enum Kind { Num, Var, Caret, Star, Plus, Minus, End } kind;
    Int num;
    int var = 0;
  };
  std::vector<Tok> toks;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("polynomial \"" + text + "\": " + msg);
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      toks.push_back({Tok::Num, Int(text.substr(i, j - i), 10), 0});
      i = j;
      continue;
    }
    if (ch == 't') {
      if (rank != 1) fail("variable t only valid at rank 1");
      toks.push_back({Tok::Var, 0, 0});
      ++i;
      continue;
    }
    if (ch == 'x') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1) fail("expected variable index after x");
      std::string digits = text.substr(i + 1, j - i - 1);
      if (digits.size() > 6) fail("variable index too large");
      int idx = std::stoi(digits);
      if (idx < 1 || idx > rank) fail("variable x" + std::to_string(idx) + " out of range for rank " + std::to_string(rank));
      toks.push_back({Tok::Var, 0, idx - 1});
      i = j;
      continue;
    }
    if (ch == '^') {
      toks.push_back({Tok::Caret, 0, 0});
      ++i;
      continue;
    }
    if (ch == '*') {
      toks.push_back({Tok::Star, 0, 0});
      ++i;
      continue;
    }
    if (ch == '+') {
      toks.push_back({Tok::Plus, 0, 0});
      ++i;
      continue;
    }
    if (ch == '-') {
      toks.push_back({Tok::Minus, 0, 0});
      ++i;
      continue;
    }
    fail(std::string("unexpected character '") + ch + "'");
  }
  toks.push_back({Tok::End, 0, 0});

  LaurentPoly out(rank);
  std::size_t k = 0;
  auto parse_exponent = [&]() -> std::int64_t {
    bool neg = false;
    if (toks[k].kind == Tok::Minus) {
      neg = true;
      ++k;
    }
    if (toks[k].kind != Tok::Num) fail("expected integer exponent after ^");
    if (!toks[k].num.fits_slong_p()) fail("exponent too large");
    std::int64_t v = toks[k].num.get_si();
    ++k;
    return neg ? -v : v;
  };
  while (toks[k].kind != Tok::End) {
    int sign = 1;
    while (toks[k].kind == Tok::Plus || toks[k].kind == Tok::Minus) {
      if (toks[k].kind == Tok::Minus) sign = -sign;
      ++k;
    }
    Int coeff = 1;
    ExpVec e(static_cast<std::size_t>(rank), 0);
    bool saw_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      if (toks[k].kind == Tok::Num) {
        coeff *= toks[k].num;
        ++k;
        saw_factor = true;
      } else if (toks[k].kind == Tok::Var) {
        int v = toks[k].var;
        ++k;
        std::int64_t p = 1;
        if (toks[k].kind == Tok::Caret) {
          ++k;
          p = parse_exponent();
        }
        e[static_cast<std::size_t>(v)] += p;
        saw_factor = true;
      } else {
        fail("expected a coefficient or variable");
      }
      if (toks[k].kind == Tok::Star) {
        ++k;  // explicit product, next factor required
      } else if (toks[k].kind == Tok::Num || toks[k].kind == Tok::Var) {
        // juxtaposition like "2t" or "x1x2"
      } else {
        expect_factor = false;
      }
    }
    if (!saw_factor) fail("empty term");
    out.add_term(std::move(e), coeff * sign);
  }
  return out;
}

}  // namespace sutura
