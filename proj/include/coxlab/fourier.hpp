#pragma once

// The set M(G) of pairs (x, sigma), x a class representative and sigma an
// irreducible character of its centralizer Z(x), and the pairing matrix
//
//   {(x,s),(y,t)} = 1/(|Z(x)||Z(y)|) sum_{g : x.gyg^-1 = gyg^-1.x}
//                     t(g^-1 x^-1 g) s(g y g^-1).

#include <string>
#include <vector>

#include "coxlab/character_table.hpp"
#include "coxlab/finite_group.hpp"

namespace coxlab {

struct MPair {
  std::size_t class_index;  // into group.classes()
  std::size_t character;    // row of the centralizer's character table
};

using CyclotomicMatrix = std::vector<std::vector<Cyclotomic>>;

class FourierData {
 public:
  explicit FourierData(FiniteGroup group);

  const FiniteGroup& group() const { return group_; }
  /// Classes in group order; within a class, characters in table order.
  const std::vector<MPair>& pairs() const { return pairs_; }
  const FiniteGroup& centralizer(std::size_t class_index) const { return centralizers_[class_index]; }
  const CharacterTable& centralizer_table(std::size_t class_index) const { return tables_[class_index]; }

  /// InvalidPair for indices outside M(G).
  Cyclotomic entry(const MPair& a, const MPair& b) const;
  CyclotomicMatrix matrix() const;

  /// "(x=(1,2), deg 1 #0)".
  std::string describe(const MPair& pair) const;

 private:
  // counts[b][c] for the class pair (a, b): keyed by centralizer classes.
  struct BlockCounts {
    std::vector<std::vector<long>> counts;  // [class in Z(x)][class in Z(y)]
  };
  const BlockCounts& block(std::size_t cx, std::size_t cy) const;
  void check(const MPair& p) const;

  FiniteGroup group_;
  std::vector<FiniteGroup> centralizers_;
  std::vector<CharacterTable> tables_;
  std::vector<MPair> pairs_;
  std::vector<std::vector<BlockCounts>> blocks_;
};

CyclotomicMatrix multiply(const CyclotomicMatrix& a, const CyclotomicMatrix& b);
CyclotomicMatrix conjugate_transpose(const CyclotomicMatrix& a);
bool is_identity(const CyclotomicMatrix& a);

/// (|Ca||Cb||Cc| / |G|) sum_chi chi(a) chi(b) chi(c) / chi(1). NotAClass for
/// out-of-range class indices.
Rational burnside_triple_count(const FiniteGroup& group, const CharacterTable& table, std::size_t ca,
                               std::size_t cb, std::size_t cc);
/// #{(a,b,c) in Ca x Cb x Cc : abc = 1}, by direct enumeration.
BigInt brute_force_triple_count(const FiniteGroup& group, std::size_t ca, std::size_t cb, std::size_t cc);

}  // namespace coxlab
