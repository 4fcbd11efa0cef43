#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace solvarith {

// Exact arithmetic substrate. Rat is a canonicalized fraction: gcd(num, den) = 1,
// den >= 1. GMP maintains exactly this invariant, so it is the carrier type.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int num(const Rat& q) { return q.get_num(); }
inline Int den(const Rat& q) { return q.get_den(); }

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

/// floor(a / b) for b != 0.
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Exact integer square root together with a perfect-square flag.
inline bool perfect_square_root(const Int& a, Int& root) {
  if (a < 0) return false;
  Int rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t());
  return rem == 0;
}

/// p-adic valuation of a nonzero integer; returns v and sets cofactor = a / p^v.
inline unsigned long remove_factor(const Int& a, const Int& p, Int& cofactor) {
  return mpz_remove(cofactor.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
}

inline bool is_probable_prime(const Int& a) {
  return mpz_probab_prime_p(a.get_mpz_t(), 40) != 0;
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace solvarith
