#pragma once

#include <gmpxx.h>

#include <string>

namespace bredonk {

// Every exact computation in the library runs on GMP integers.
using Integer = mpz_class;

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Truncated division (rounds toward zero), matching C++ built-in semantics.
inline Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

}  // namespace bredonk
