#pragma once

#include <gmpxx.h>

#include <string>

namespace summandlab {

// Exact rational coefficients. mpq_class keeps values canonical: reduced to
// lowest terms, positive denominator, zero stored as 0/1.
using Scalar = mpq_class;
using Integer = mpz_class;

inline Scalar scalar_of(long n) { return Scalar(n); }

inline Scalar scalar_of(long num, long den) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "n" and "n/d" forms.
Scalar parse_scalar(const std::string& text);

std::string to_string(const Scalar& value);
std::string to_string(const Integer& value);

}  // namespace summandlab
