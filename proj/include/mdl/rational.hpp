#pragma once

#include <gmpxx.h>

#include <string>

#include "mdl/errors.hpp"

namespace mdl {

// Exact rational arithmetic for all density values and threshold comparisons.
// Floating point is reserved for logarithms (g-values); everything that feeds
// an inequality against a bound stays rational.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Smallest integer >= q.
inline long ceil_rat(const Rat& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!r.fits_slong_p()) throw DomainError("ceil_rat overflow: " + q.get_str());
  return r.get_si();
}

// Largest integer <= q.
inline long floor_rat(const Rat& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!r.fits_slong_p()) throw DomainError("floor_rat overflow: " + q.get_str());
  return r.get_si();
}

// Canonical "num/den" form ("num" when the denominator is 1).
inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Accepts "a/b", plain integers, and finite decimals ("0.25" -> 1/4).
Rat parse_rat(const std::string& text);

}  // namespace mdl
