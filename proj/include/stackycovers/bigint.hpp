#pragma once

#include <gmpxx.h>

#include <cassert>
#include <string>

namespace stacky {

// Exact arbitrary-precision integers and rationals. Every arithmetic
// quantity in the library flows through these; no rounding anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int pow_ui(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// a | b, with the convention 0 | b iff b == 0.
inline bool divides(const Int& a, const Int& b) {
  if (a == 0) return b == 0;
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

// Canonical representative of a mod m in [0, m); requires m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  assert(m > 0);
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Exact quotient a / b; asserts b | a.
inline Int exact_div(const Int& a, const Int& b) {
  assert(b != 0 && divides(b, a));
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool is_even(const Int& a) { return mpz_even_p(a.get_mpz_t()) != 0; }
inline bool is_odd(const Int& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }

inline std::string to_str(const Int& a) { return a.get_str(); }

inline unsigned long to_ulong(const Int& a) {
  assert(a >= 0 && mpz_fits_ulong_p(a.get_mpz_t()));
  return mpz_get_ui(a.get_mpz_t());
}

}  // namespace stacky
