#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace coxlab {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Rational built from a numerator and denominator, canonicalized.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool fits_int64(const BigInt& x) {
  return x >= BigInt(INT64_MIN) && x <= BigInt(INT64_MAX) && x.fits_slong_p();
}

}  // namespace coxlab
