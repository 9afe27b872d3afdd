#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qpart {

// Arbitrary-precision signed integer used for every coefficient and count.
using Integer = mpz_class;

/// Floor of the square root of a non-negative integer.
inline Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt: negative argument " + n.get_str());
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const Integer& d, const Integer& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline std::int64_t to_i64(const Integer& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + n.get_str());
  return n.get_si();
}

inline Integer make_int(std::int64_t v) {
  Integer r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace qpart
