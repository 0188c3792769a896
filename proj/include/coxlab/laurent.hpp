#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxlab/numeric.hpp"

namespace coxlab {

/// Integer Laurent polynomial in v. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) { add_term(0, BigInt(c)); }  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(int exponent, const BigInt& coefficient = 1);
  /// sum c_i q^i with q = v^2.
  static LaurentPoly from_q_coefficients(const std::vector<BigInt>& coefficients);

  const std::map<int, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(int exponent) const;
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }

  void add_term(int exponent, const BigInt& coefficient);
  /// v^n -> v^-n.
  LaurentPoly bar() const;
  LaurentPoly shifted(int by) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// "v^-2 - 1", "0".
  std::string to_string() const;

 private:
  std::map<int, BigInt> terms_;
};

/// Dense polynomial in q with big coefficients, trimmed.
using QPoly = std::vector<BigInt>;

std::string format_qpoly(const QPoly& p, const std::string& var = "q");

}  // namespace coxlab
