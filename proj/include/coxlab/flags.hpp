#pragma once

// Complete flags over finite fields, their relative position, and the point
// counts built on top of them: Deligne-Lusztig pieces, the Drinfeld curve,
// the space of flag functions and Brauer characters.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coxlab/cyclotomic.hpp"
#include "coxlab/gf.hpp"
#include "coxlab/weyl.hpp"

namespace coxlab {

inline constexpr std::size_t kDefaultMaxFlags = 1'000'000;

/// V_1 < V_2 < ... < V_{n-1} inside GF(q)^n. Each subspace is kept in reduced
/// echelon form, so equal flags compare equal.
struct Flag {
  int dimension = 0;
  std::vector<FieldMatrix> subspaces;  // subspaces[i - 1] = V_i

  /// V_i for 0 <= i <= n (V_0 empty, V_n the identity basis).
  FieldMatrix subspace(int i) const;

  friend auto operator<=>(const Flag&, const Flag&) = default;
};

/// The alternating form x_1 y_{2n} - x_{2n} y_1 + x_2 y_{2n-1} - ... on GF(q)^{2n}.
class SymplecticForm {
 public:
  explicit SymplecticForm(int half_dimension);

  int dimension() const { return 2 * half_; }
  /// Gram matrix entry (i, j), 0-based, as an integer in {-1, 0, 1}.
  int gram(int i, int j) const;
  FieldElem pair(const Field& f, const FieldVector& x, const FieldVector& y) const;
  /// Orthogonal complement of the row space of `basis`, in reduced echelon form.
  FieldMatrix perp(const Field& f, const FieldMatrix& basis) const;
  /// V_i = V_{2n-i}^perp for every i.
  bool is_compatible(const Field& f, const Flag& flag) const;

 private:
  int half_;
};

/// Flags of GF(q)^n in increasing order; with a form, only the compatible
/// ones. TooLarge when the count would exceed `max_count`.
std::vector<Flag> enumerate_flags(const Field& f, int n, const SymplecticForm* form = nullptr,
                                  std::size_t max_count = kDefaultMaxFlags);
/// Number of complete flags (or compatible flags for the symplectic case).
BigInt flag_count(std::uint64_t q, int n, bool symplectic);

/// The flag built from the rows of an invertible matrix: V_i spans rows 1..i.
Flag flag_from_basis(const Field& f, const FieldMatrix& basis);
Flag transform(const Field& f, const FieldMatrix& g, const Flag& flag);
/// Entrywise x -> x^{p^times}.
Flag frobenius(const Field& f, const Flag& flag, long long times);

/// dim(V_i n V'_j) for 0 <= i, j <= n.
std::vector<std::vector<int>> intersection_dimensions(const Field& f, const Flag& a, const Flag& b);
/// The permutation w with V'_j spanned by v_{w(1)}, ..., v_{w(j)} for a basis
/// adapted to V. DimensionMismatch for different ambient spaces; NotSymplectic
/// when a form is given and a flag is not compatible with it.
BigPermutation relative_position(const Field& f, const Flag& a, const Flag& b,
                                 const SymplecticForm* form = nullptr);

/// q = p^s; nullopt unless q is a prime power.
std::optional<std::pair<int, int>> prime_power(std::uint64_t q);

enum class GroupType { GL, Sp };

std::string to_string(GroupType type);

struct PieceCount {
  BigPermutation element;
  std::vector<int> word;  // ShortLex reduced word in the Weyl group
  int length = 0;
  std::uint64_t count = 0;
};

struct DLCountReport {
  GroupType type = GroupType::GL;
  int n = 0;
  std::uint64_t q = 0;
  int m = 0;
  std::uint64_t total = 0;       // number of flags over GF(q^m)
  std::vector<PieceCount> rows;  // every Weyl group element, by (length, one-line)
};

/// The Weyl group whose permutation model indexes relative positions of
/// GL_n (degree n) or Sp_2n (degree 2n) flags.
CoxeterSpec weyl_type(GroupType type, int n);

/// Counts flags B over GF(q^m) by the relative position of (B, F(B)), F the
/// q-Frobenius.
DLCountReport dl_piece_counts(GroupType type, int n, std::uint64_t q, int m,
                              std::size_t max_flags = kDefaultMaxFlags);

struct CoxeterConditionReport {
  std::size_t chain_condition = 0;   // flags with V_i != F(V_i) < V_{i+1}
  std::size_t coxeter_position = 0;  // flags in position [2, 3, ..., n, 1]
  std::size_t both = 0;
  bool equal = false;
};

CoxeterConditionReport coxeter_condition_check(int n, std::uint64_t q, int m,
                                               std::size_t max_flags = kDefaultMaxFlags);

struct DrinfeldReport {
  std::uint64_t q = 0;
  int m = 0;
  std::uint64_t count = 0;
  bool torus_in_field = false;  // (q + 1) | (q^m - 1)
  bool torus_free = false;      // every orbit has q + 1 points
  bool divisible = false;       // count % (q + 1) == 0
  int sl2_samples = 0;
  bool sl2_invariant = false;
};

/// Points of x^q y - x y^q = 1 over GF(q^m), with the SL_2(F_q) and
/// mu_{q+1} actions checked on the full solution set.
DrinfeldReport drinfeld_count(std::uint64_t q, int m, std::uint64_t seed = 1, int sl2_samples = 10);

enum class FlagFunctionMode { Modular, Rational };

std::string to_string(FlagFunctionMode mode);

struct FlagFunctionReport {
  int n = 0;
  int p = 0;
  FlagFunctionMode mode = FlagFunctionMode::Modular;
  std::size_t flags = 0;
  std::size_t equations = 0;
  std::size_t dimension = 0;
  BigInt expected = 0;
  int stability_samples = 0;
  bool stable = false;
};

/// Kernel of the flag-sum equations: functions on complete flags of GF(p)^n
/// whose sum over the completions of every almost complete flag vanishes.
/// Modular: values on a flag lie on its line V_1; rational: scalar values.
FlagFunctionReport brauer_space_dim(int n, int p, FlagFunctionMode mode, std::uint64_t seed = 1,
                                    std::size_t max_flags = kDefaultMaxFlags);

struct BrauerCharacterReport {
  int splitting_degree = 0;                 // eigenvalues lie in GF(p^{s * k})
  std::vector<std::uint32_t> eigenvalues;   // discrete logs in that field
  Cyclotomic value;
};

/// Sum of the lifted eigenvalues of `g`, u(a^k) = exp(2 pi i k / (Q - 1)) for
/// the generator a of the smallest splitting field GF(Q). SplittingFieldTooLarge
/// when Q would exceed 2^16.
BrauerCharacterReport brauer_character(const Field& f, const FieldMatrix& g);

}  // namespace coxlab
