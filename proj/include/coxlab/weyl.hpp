#pragma once

// Finite Weyl groups realized as permutation groups of their root systems.
//
// An element is identified by the images of the simple roots; the images of
// all other roots follow by linearity. Roots are stored in simple-root
// coordinates, positive roots first (sorted by height), then their negatives
// in the same order, so `root + num_positive()` is the negative of `root`.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coxlab/intpoly.hpp"
#include "coxlab/numeric.hpp"

namespace coxlab {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CoxeterSpec {
  Family family = Family::A;
  int rank = 1;

  /// Accepts "E8", "B2", "a3" ...
  static CoxeterSpec parse(std::string_view text);

  std::string name() const;
  bool is_classical() const;

  friend bool operator==(const CoxeterSpec&, const CoxeterSpec&) = default;
};

/// Throws UnsupportedSpec unless the rank lies in the family's range.
void check_spec(const CoxeterSpec& spec);

/// |W| from the standard order formulas.
BigInt weyl_group_order(const CoxeterSpec& spec);

inline constexpr int kMaxRank = 16;
inline constexpr std::size_t kDefaultMaxGroupSize = 10'000'000;
inline constexpr std::size_t kDefaultMaxClassSize = 10'000'000;

using RootIndex = std::uint16_t;
using RootVector = std::array<std::int8_t, kMaxRank>;
using Images = std::array<RootIndex, kMaxRank>;

struct ImagesHash {
  std::size_t operator()(const Images& images) const noexcept;
};

enum class Side { Left, Right };

class WeylGroup;

class WeylElement {
 public:
  WeylElement() = default;

  const WeylGroup& group() const { return *group_; }
  const WeylGroup* group_ptr() const { return group_; }
  const Images& images() const { return images_; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.group_ == b.group_ && a.images_ == b.images_;
  }
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    return a.images_ < b.images_;
  }

 private:
  friend class WeylGroup;
  WeylElement(const WeylGroup* group, const Images& images) : group_(group), images_(images) {}

  const WeylGroup* group_ = nullptr;
  Images images_{};
};

/// A permutation of {1..m}, stored in one-line notation with 1-based values.
struct BigPermutation {
  std::vector<int> images;

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int point) const { return images[point - 1]; }

  static BigPermutation identity(int degree);
  /// (a * b)(x) = a(b(x)).
  friend BigPermutation operator*(const BigPermutation& a, const BigPermutation& b);
  BigPermutation inverse() const;
  bool commutes_with_involution() const;
  std::string one_line() const;

  friend auto operator<=>(const BigPermutation&, const BigPermutation&) = default;
};

/// Sorted (descending) cycle lengths, fixed points included as 1-cycles.
std::vector<int> cycle_type(const BigPermutation& p);

class WeylGroup {
 public:
  static std::shared_ptr<const WeylGroup> build(const CoxeterSpec& spec);

  const CoxeterSpec& spec() const { return spec_; }
  int rank() const { return rank_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_positive_; }
  const RootVector& root(RootIndex r) const { return roots_[r]; }
  bool is_positive(RootIndex r) const { return r < num_positive_; }
  RootIndex negate(RootIndex r) const {
    return static_cast<RootIndex>(r < num_positive_ ? r + num_positive_ : r - num_positive_);
  }
  /// The root with the given coordinates; throws std::out_of_range otherwise.
  RootIndex root_index(const RootVector& v) const;
  /// Action of simple reflection `s` on the root list.
  RootIndex reflect(int s, RootIndex r) const { return generator_action_[s][r]; }
  /// <root_j, coroot_i>, so that s_i(a_j) = a_j - cartan(j, i) a_i.
  int cartan(int j, int i) const { return cartan_[j][i]; }

  const BigInt& order() const;

  WeylElement identity() const;
  WeylElement generator(int s) const;
  /// Product of generators, 0-based indices.
  WeylElement from_word(const std::vector<int>& word) const;
  /// Parses "s1 s2 s1", "s1s2", "1 2 1"; "e" or "" is the identity.
  WeylElement parse_word(std::string_view text) const;
  WeylElement from_images(const Images& images) const { return WeylElement(this, images); }

  RootIndex apply(const WeylElement& w, RootIndex r) const;
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
  WeylElement left_multiply(int s, const WeylElement& w) const;
  WeylElement right_multiply(const WeylElement& w, int s) const;
  WeylElement inverse(const WeylElement& w) const;
  bool is_right_descent(const WeylElement& w, int s) const {
    return !is_positive(w.images()[s]);
  }
  /// ShortLex-minimal reduced word (0-based generator indices).
  std::vector<int> reduced_word(const WeylElement& w) const;
  /// Matrix of w on the reflection representation in the simple-root basis
  /// (column j holds the coordinates of w(a_j)).
  std::vector<std::vector<long long>> reflection_matrix(const WeylElement& w) const;
  /// The longest element: the unique element sending every simple root to a
  /// negative root.
  WeylElement longest_element() const;
  /// s_1 s_2 ... s_r.
  WeylElement coxeter_element() const;

  std::string format_word(const std::vector<int>& word) const;
  std::string format(const WeylElement& w) const { return format_word(reduced_word(w)); }

 private:
  explicit WeylGroup(const CoxeterSpec& spec);
  RootIndex combine(const WeylElement& w, const RootVector& coords) const;

  CoxeterSpec spec_;
  int rank_;
  int num_positive_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootVector> roots_;
  std::unordered_map<std::uint64_t, RootIndex> lookup_;
  std::vector<std::vector<RootIndex>> generator_action_;
  mutable std::once_flag order_once_;
  mutable BigInt order_;
};

void check_same_group(const WeylElement& a, const WeylElement& b);

WeylElement multiply(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& a);
int length(const WeylElement& a);
/// Generator indices s with l(sw) < l(w) (Left) or l(ws) < l(w) (Right).
std::vector<int> descents(const WeylElement& a, Side side);
/// Bruhat order via the subword property on the ShortLex reduced word of w.
bool bruhat_leq(const WeylElement& y, const WeylElement& w);

struct CharPolyResult {
  IntPoly coefficients;
  /// {d: multiplicity of Phi_d} when the polynomial is a product of
  /// cyclotomic polynomials.
  std::optional<std::map<int, int>> cyclotomic_factors;
};

CharPolyResult char_poly_reflection(const WeylElement& w);
std::string format_cyclotomic_factors(const std::map<int, int>& factors);

/// The class of w, found by closing under conjugation by generators. The
/// first entry is w itself; TooLarge once `max_size` is exceeded.
std::vector<WeylElement> conjugacy_class(const WeylElement& w,
                                         std::size_t max_size = kDefaultMaxClassSize);
int min_length_in_class(const std::vector<WeylElement>& cls);

/// det(w - 1) != 0 on the reflection representation.
bool is_elliptic(const WeylElement& w);

/// Permutation model: S_{n+1} for A_n, permutations of {1..2n} commuting with
/// i -> 2n+1-i for B/C/D. UnsupportedFamily for exceptional types.
BigPermutation to_big_permutation(const WeylElement& w);
/// The images of the simple reflections in the permutation model.
std::vector<BigPermutation> big_permutation_generators(const CoxeterSpec& spec);

}  // namespace coxlab
