#pragma once

#include <vector>

#include "coxlab/cyclotomic.hpp"
#include "coxlab/finite_group.hpp"

namespace coxlab {

struct CharacterTable {
  /// Column k belongs to group.classes()[k].
  std::vector<GroupElement> representatives;
  std::vector<std::size_t> class_sizes;
  /// rows[i][k] = chi_i(representatives[k]), values in Q(zeta_e), e the
  /// exponent of the group. Rows sorted by degree, then by values in
  /// descending lexicographic order, so the trivial character comes first.
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<long> degrees;
  int exponent = 1;
};

/// Exact character table. Eigenvectors of the class multiplication
/// coefficients are found modulo a prime p = 1 mod e, and every value is
/// recovered exactly from eigenvalue multiplicities of rho(g). The result is
/// checked against the orthogonality relations before it is returned.
/// TooLarge beyond kMaxCharacterTableGroup elements.
CharacterTable character_table(const FiniteGroup& group);

/// Exact row and column orthogonality.
bool check_orthogonality(const FiniteGroup& group, const CharacterTable& table);

}  // namespace coxlab
