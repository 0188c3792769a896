#pragma once

// Unipotent cuspidal data (C, mu) of split simple groups, their q = 1
// specialization, and consistency checks against the Weyl group.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxlab/weyl.hpp"

namespace coxlab {

/// exp(2 pi i a / b) with 0 <= a < b and gcd(a, b) = 1.
struct TurnFraction {
  int numerator = 0;
  int denominator = 1;

  static TurnFraction make(int a, int b);
  std::string to_string() const;  // "1", "-1", "z3", "z5^2"
  friend bool operator==(const TurnFraction&, const TurnFraction&) = default;
};

/// root * q^{half_exponent / 2}.
struct EigenvalueSpec {
  TurnFraction root;
  int half_exponent = 0;

  bool integral_exponent() const { return half_exponent % 2 == 0; }
  std::string exponent_string() const;  // "3", "7/2"
  std::string to_string() const;        // "z3 q^3", "-q^11", "z4^3 q^(7/2)"
};

/// Classical types: cycle lengths of the permutation of {1..2n}. Exceptional
/// types: the characteristic polynomial as {d: multiplicity of Phi_d}.
struct ClassSpec {
  enum class Kind { CycleType, CharPoly };
  Kind kind = Kind::CharPoly;
  std::vector<int> cycles;  // ascending
  std::map<int, int> factors;

  static ClassSpec cycle_type(std::vector<int> lengths);
  static ClassSpec char_poly(std::map<int, int> factors);
  std::string to_string() const;
  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

struct CuspidalDatum {
  CoxeterSpec group;
  std::string label;  // name of the class within the table, e.g. "C30"
  ClassSpec cls;
  EigenvalueSpec eigenvalue;
};

/// The full table for one type; empty when there is no cuspidal datum.
/// UnsupportedSpec for invalid ranks.
std::vector<CuspidalDatum> cuspidal_data(const CoxeterSpec& spec);

struct CuspidalCondition {
  bool exists = false;
  int k = 0;
};

/// n = k^2 + k (B/C) or n = k^2 with k even (D); never for A.
/// UnsupportedFamily for exceptional types.
CuspidalCondition has_cuspidal(const CoxeterSpec& spec);

struct SpecializedDatum {
  ClassSpec cls;
  TurnFraction root;
  bool half_integer_exponent = false;  // the bijection depends on a choice of sqrt(q)
};

std::vector<SpecializedDatum> specialize_q1(const std::vector<CuspidalDatum>& data);

struct MatchedClass {
  std::vector<int> representative;  // ShortLex word of the smallest element
  std::size_t size = 0;
  int min_length = 0;
  bool elliptic = false;
};

/// Conjugacy classes of W whose elements have the given cycle type (classical)
/// or characteristic polynomial (exceptional). TooLarge when |W| > max_size.
std::vector<MatchedClass> match_classes(const CoxeterSpec& spec, const ClassSpec& cls,
                                        std::size_t max_size = kDefaultMaxGroupSize);

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus status);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  bool required = true;
  std::string detail;
};

struct ValidationReport {
  CoxeterSpec spec;
  std::vector<Check> checks;

  /// No required check failed.
  bool ok() const;
};

/// Structural checks on the table. Class-level checks are skipped when |W|
/// exceeds `max_size`; the length check is informational for classical types.
ValidationReport validate(const CoxeterSpec& spec, std::size_t max_size = kDefaultMaxGroupSize);

}  // namespace coxlab
