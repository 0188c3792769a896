#pragma once

// Exact elements of cyclotomic fields Q(zeta_N), stored in the power basis
// 1, zeta, ..., zeta^{phi(N)-1} as integer numerators over one common positive
// denominator. Binary operations embed both operands in Q(zeta_lcm).

#include <complex>
#include <string>
#include <vector>

#include "coxlab/numeric.hpp"

namespace coxlab {

class Cyclotomic {
 public:
  /// Zero in Q.
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(const Rational& value);

  /// zeta_N^k.
  static Cyclotomic root_of_unity(int conductor, long long k);
  /// Takes ownership of raw coordinates (length phi(N)) over `denominator`.
  static Cyclotomic from_coordinates(int conductor, std::vector<BigInt> numerators, BigInt denominator = 1);

  int conductor() const { return conductor_; }
  const std::vector<BigInt>& numerators() const { return num_; }
  const BigInt& denominator() const { return den_; }
  std::vector<Rational> coordinates() const;

  bool is_zero() const;
  bool is_rational() const;
  /// Only meaningful when is_rational().
  Rational rational_value() const;

  /// The same value viewed in Q(zeta_M); M must be a multiple of conductor().
  Cyclotomic embedded(int m) const;
  /// The same value in Q(zeta_d) for the smallest d dividing conductor().
  Cyclotomic reduced() const;
  /// zeta -> zeta^-1.
  Cyclotomic conj() const;
  /// zeta -> zeta^k for k coprime to the conductor.
  Cyclotomic galois(long long k) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator-(const Cyclotomic& a);
  /// Division by a nonzero rational.
  Cyclotomic divided_by(const Rational& r) const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Floating-point value for display only.
  std::complex<double> to_complex() const;
  /// Power-basis rendering such as "1/2" or "3*z5 - z5^3", where zN is
  /// exp(2 pi i / N).
  std::string to_string() const;

 private:
  void normalize();

  int conductor_ = 1;
  std::vector<BigInt> num_;
  BigInt den_ = 1;
};

}  // namespace coxlab
