#pragma once

#include <gmpxx.h>

#include <string>

namespace pslab {

// All arithmetic in the library is exact. Rationals are kept canonical
// (reduced, positive denominator) by GMP; the only care needed is after
// constructing from a raw num/den pair, which make_rational handles.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace pslab
