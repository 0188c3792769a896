#pragma once

// Finite permutation groups with elements numbered 0..N-1 in lexicographic
// order of their one-line notation (so the identity is element 0).

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coxlab {

/// 0-based one-line notation.
using Perm = std::vector<std::uint16_t>;

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

Perm compose(const Perm& a, const Perm& b);  // a(b(x))
Perm invert(const Perm& p);
Perm identity_perm(int degree);
/// Parses cycle notation such as "(1,2)(3,4)" or "()"; points are 1-based.
/// NotPermutation on repeated points or malformed text.
Perm parse_cycles(std::string_view text, int degree);
/// Largest point mentioned in cycle notation.
int max_point(std::string_view text);
std::string format_cycles(const Perm& p);

inline constexpr std::size_t kMaxPermGroupSize = 100'000;
inline constexpr std::size_t kMaxCharacterTableGroup = 10'000;

using GroupElement = std::uint32_t;

struct ConjugacyClass {
  GroupElement representative;  // smallest member
  std::vector<GroupElement> members;  // sorted
};

class FiniteGroup {
 public:
  /// Closure of the generators; TooLarge beyond `max_size` elements.
  static FiniteGroup generated_by(int degree, const std::vector<Perm>& generators,
                                  std::size_t max_size = kMaxPermGroupSize);
  /// A set of permutations already closed under composition.
  static FiniteGroup from_elements(int degree, std::vector<Perm> elements);

  /// Symmetric, alternating and cyclic groups, elementary abelian 2-groups
  /// F2^n (acting on 2n points), and the trivial group, by name:
  /// "S3", "A5", "Z4", "F2^3", "trivial".
  static FiniteGroup builtin(std::string_view name);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const Perm& element(GroupElement g) const { return elements_[g]; }
  const std::vector<Perm>& generators() const { return generators_; }
  /// Throws NotPermutation when p is not in the group.
  GroupElement id_of(const Perm& p) const;
  bool contains(const Perm& p) const { return ids_.contains(p); }

  GroupElement identity() const { return 0; }
  GroupElement multiply(GroupElement a, GroupElement b) const;
  GroupElement inverse(GroupElement a) const { return inverse_[a]; }
  GroupElement conjugate(GroupElement g, GroupElement x) const;  // g x g^-1
  GroupElement power(GroupElement a, long long k) const;
  int element_order(GroupElement a) const;
  int exponent() const;

  /// Classes ordered by size, then by representative.
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(GroupElement g) const { return class_of_[g]; }
  std::size_t centralizer_order(GroupElement g) const { return order() / classes_[class_of(g)].members.size(); }

  FiniteGroup centralizer(GroupElement x) const;

  /// Identity, inverses and (for small groups) associativity of the table.
  bool verify_axioms() const;

  std::string format(GroupElement g) const { return format_cycles(elements_[g]); }

 private:
  FiniteGroup() = default;
  void finish();

  int degree_ = 1;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, GroupElement, PermHash> ids_;
  std::vector<GroupElement> inverse_;
  std::vector<GroupElement> table_;  // row-major, when small enough
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

}  // namespace coxlab
