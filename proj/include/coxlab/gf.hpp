#pragma once

// Finite fields GF(p^s) with p^s <= 2^16, and dense linear algebra over them.
//
// An element is stored as the integer sum c_i p^i of its coordinates in the
// basis 1, a, ..., a^{s-1}, where a is a root of the defining polynomial. The
// defining polynomial is the monic polynomial of degree s whose coefficient
// encoding sum c_i p^i is smallest among those whose root generates the
// multiplicative group, so discrete logarithms are taken to base a.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace coxlab {

using FieldElem = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldSize = 1u << 16;

class Field {
 public:
  /// NotPrime unless p is prime; TooLarge when p^s > 2^16.
  static std::shared_ptr<const Field> make(int p, int s);

  int characteristic() const { return p_; }
  int degree() const { return s_; }
  std::uint32_t size() const { return q_; }
  /// Coefficients low to high, monic, length degree()+1.
  const std::vector<int>& defining_polynomial() const { return poly_; }
  /// The root a of the defining polynomial, a primitive element.
  FieldElem generator() const { return exp_[1]; }

  FieldElem zero() const { return 0; }
  FieldElem one() const { return 1; }
  /// Image of an integer in the prime field.
  FieldElem from_int(long long k) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem mul(FieldElem a, FieldElem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  /// DomainError(InvalidArgument) for zero.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, long long k) const;
  /// x -> x^{p^times}; negative counts are taken modulo the degree.
  FieldElem frobenius(FieldElem x, long long times = 1) const;

  /// Discrete log to base generator(); a must be nonzero.
  std::uint32_t log(FieldElem a) const { return log_[a]; }
  FieldElem exp(long long k) const;

  /// "2", "a^2 + 2*a + 1".
  std::string to_string(FieldElem x) const;

 private:
  Field() = default;

  int p_ = 2;
  int s_ = 1;
  std::uint32_t q_ = 2;
  std::vector<int> poly_;
  std::vector<FieldElem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint16_t> add_table_;  // q*q entries for small odd fields
};

using FieldVector = std::vector<FieldElem>;
using FieldMatrix = std::vector<FieldVector>;

/// Reduced row echelon form in place (zero rows removed); returns pivot columns.
std::vector<int> rref(const Field& f, FieldMatrix& m);
std::size_t rank(const Field& f, FieldMatrix m);
/// Basis of the right kernel {x : m x = 0}.
std::vector<FieldVector> nullspace(const Field& f, FieldMatrix m);
FieldMatrix multiply(const Field& f, const FieldMatrix& a, const FieldMatrix& b);
/// Empty matrix when m is singular.
FieldMatrix inverse(const Field& f, const FieldMatrix& m);
/// det(xI - m), low coefficient first, monic.
std::vector<FieldElem> charpoly(const Field& f, FieldMatrix m);

}  // namespace coxlab
