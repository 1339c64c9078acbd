#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sutura/laurent.hpp"

namespace sutura {

// gcd of all coefficients, >= 0
inline Int int_content(const LaurentPoly& p) {
  Int g = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace detail {

// All helpers below work on "ordinary" polynomials: every exponent >= 0.
// Divisibility here is in Z[x1..xn], whose only units are +-1; the public
// try_divide works in the Laurent ring, where any monomial is a unit, and
// would accept too much.

inline std::optional<LaurentPoly> ordinary_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) return std::nullopt;
  LaurentPoly rem = p;
  LaurentPoly quot(p.rank());
  while (!rem.is_zero()) {
    const auto& [ep, cp] = *rem.terms().rbegin();
    const auto& [eq, cq] = *q.terms().rbegin();
    ExpVec t = exp_sub(ep, eq);
    if (std::any_of(t.begin(), t.end(), [](std::int64_t x) { return x < 0; }))
      return std::nullopt;
    if (!mpz_divisible_p(cp.get_mpz_t(), cq.get_mpz_t())) return std::nullopt;
    Int c;
    mpz_divexact(c.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());
    LaurentPoly term = LaurentPoly::monomial(p.rank(), t, c);
    quot = quot + term;
    rem = rem - term * q;
  }
  return quot;
}

inline LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q, const char* what) {
  auto r = ordinary_divide(p, q);
  if (!r) throw Error(std::string("internal: inexact division in ") + what);
  return *r;
}

inline std::int64_t deg_in(const LaurentPoly& p, int k) {
  std::int64_t d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[static_cast<std::size_t>(k)]);
  return d;
}

// coefficient of x_k^d, as a polynomial with the k-th exponent zeroed
inline LaurentPoly coeff_of(const LaurentPoly& p, int k, std::int64_t d) {
  LaurentPoly out(p.rank());
  for (const auto& [e, c] : p.terms()) {
    if (e[static_cast<std::size_t>(k)] != d) continue;
    ExpVec e2 = e;
    e2[static_cast<std::size_t>(k)] = 0;
    out.add_term(std::move(e2), c);
  }
  return out;
}

inline LaurentPoly times_power(const LaurentPoly& p, int k, std::int64_t d) {
  ExpVec shift(static_cast<std::size_t>(p.rank()), 0);
  shift[static_cast<std::size_t>(k)] = d;
  return p.shifted(shift);
}

inline LaurentPoly int_pow(const LaurentPoly& p, std::int64_t n) {
  LaurentPoly r = LaurentPoly::constant(p.rank(), 1);
  for (std::int64_t i = 0; i < n; ++i) r = r * p;
  return r;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// monomial gcd: integer gcd of the coefficients, componentwise minimum of
// the exponents over both supports
inline LaurentPoly monomial_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  Int c;
  Int ca = int_content(a), cb = int_content(b);
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  ExpVec e = exp_min(a.min_exponent(), b.min_exponent());
  return LaurentPoly::monomial(a.rank(), std::move(e), c);
}

// gcd of the x_k-coefficients
inline LaurentPoly poly_content(const LaurentPoly& p, int k) {
  LaurentPoly g(p.rank());
  std::int64_t d = deg_in(p, k);
  for (std::int64_t i = 0; i <= d; ++i) {
    LaurentPoly c = coeff_of(p, k, i);
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : poly_gcd(g, c);
    if (g.is_constant() && !g.is_zero()) {
      Int cc = g.coeff(ExpVec(static_cast<std::size_t>(g.rank()), 0));
      if (cc == 1 || cc == -1) break;
    }
  }
  return g;
}

inline LaurentPoly primitive_part(const LaurentPoly& p, int k) {
  if (p.is_zero()) return p;
  return exact_divide(p, poly_content(p, k), "primitive_part");
}

// canonical pseudo-remainder prem(a, b) = lc(b)^{delta+1} a mod b in the
// variable x_k, delta = deg a - deg b >= 0, deg_k(b) >= 1. The subresultant
// divisions depend on exactly this power of the leading coefficient.
inline LaurentPoly pseudo_rem(const LaurentPoly& a, const LaurentPoly& b, int k) {
  std::int64_t db = deg_in(b, k);
  LaurentPoly lcb = coeff_of(b, k, db);
  LaurentPoly r = a;
  std::int64_t e = deg_in(a, k) - db + 1;
  while (!r.is_zero()) {
    std::int64_t dr = deg_in(r, k);
    if (dr < db) break;
    LaurentPoly lcr = coeff_of(r, k, dr);
    r = r * lcb - times_power(lcr * b, k, dr - db);
    --e;
  }
  return r * int_pow(lcb, e);
}

// highest variable index with positive degree in either input, or -1
inline int top_variable(const LaurentPoly& a, const LaurentPoly& b) {
  for (int k = a.rank() - 1; k >= 0; --k)
    if (deg_in(a, k) > 0 || deg_in(b, k) > 0) return k;
  return -1;
}

// gcd in Z[x1..xn]: contents by recursion one variable at a time, primitive
// parts by the subresultant remainder sequence (dividing each pseudo-remainder
// by the predicted factor g h^delta keeps the growth polynomial, so only the
// inputs and the final remainder ever need a content computation).
inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.term_count() == 1 || b.term_count() == 1) return monomial_gcd(a, b);
  if (a == b) return a;
  // trial division settles nested-factor inputs without a remainder sequence
  if (ordinary_divide(b, a)) return a;
  if (ordinary_divide(a, b)) return b;

  int k = top_variable(a, b);
  if (deg_in(a, k) == 0) return poly_gcd(a, poly_content(b, k));
  if (deg_in(b, k) == 0) return poly_gcd(poly_content(a, k), b);

  LaurentPoly ca = poly_content(a, k), cb = poly_content(b, k);
  LaurentPoly cg = poly_gcd(ca, cb);
  LaurentPoly u = exact_divide(a, ca, "poly_gcd content");
  LaurentPoly v = exact_divide(b, cb, "poly_gcd content");
  if (deg_in(u, k) < deg_in(v, k)) std::swap(u, v);

  LaurentPoly g = LaurentPoly::constant(a.rank(), 1);
  LaurentPoly h = g;
  while (true) {
    std::int64_t delta = deg_in(u, k) - deg_in(v, k);
    LaurentPoly r = pseudo_rem(u, v, k);
    if (r.is_zero()) break;
    if (deg_in(r, k) == 0) return cg;  // primitive parts are coprime
    u = v;
    v = exact_divide(r, g * int_pow(h, delta), "subresultant step");
    g = coeff_of(u, k, deg_in(u, k));
    if (delta > 0)
      h = delta == 1 ? g : exact_divide(int_pow(g, delta), int_pow(h, delta - 1), "subresultant h");
  }
  return cg * primitive_part(v, k);
}

}  // namespace detail

// gcd in the Laurent ring Z[F] (a UFD); the result is the canonical
// normalized representative, so it is independent of the input order and
// absorbs units. gcd of an all-zero list is 0.
inline LaurentPoly gcd_laurent(const std::vector<LaurentPoly>& ps) {
  if (ps.empty()) throw RankMismatch("gcd_laurent needs at least one input");
  int rank = ps.front().rank();
  LaurentPoly g(rank);
  for (const auto& p : ps) {
    if (p.rank() != rank) throw RankMismatch("gcd_laurent mixed ranks");
    if (p.is_zero()) continue;
    ExpVec m = p.min_exponent();
    for (auto& x : m) x = -x;
    LaurentPoly q = p.shifted(m);  // ordinary polynomial now
    g = g.is_zero() ? q : detail::poly_gcd(g, q);
    LaurentPoly n = normalize(g);
    if (n.is_one()) return n;  // running gcd hit a unit
  }
  return normalize(g);
}

inline LaurentPoly gcd_laurent(const LaurentPoly& a, const LaurentPoly& b) {
  return gcd_laurent(std::vector<LaurentPoly>{a, b});
}

}  // namespace sutura
