#pragma once

// Iwahori-Hecke algebra of a finite Weyl group over Z[v, v^-1] in the
// T-basis, with quadratic relation (T_s + 1)(T_s - v^2) = 0, the bar
// involution, and the Kazhdan-Lusztig basis C'_w = v^-l(w) sum_y P_{y,w}(v^2) T_y.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxlab/laurent.hpp"
#include "coxlab/weyl_enum.hpp"

namespace coxlab {

class HeckeAlgebra;

class HeckeElement {
 public:
  explicit HeckeElement(const HeckeAlgebra* algebra) : algebra_(algebra) {}

  const HeckeAlgebra& algebra() const { return *algebra_; }
  const std::map<ElementId, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coefficient(ElementId w) const;
  bool is_zero() const { return terms_.empty(); }

  void add(ElementId w, const LaurentPoly& c);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& a);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
  }

  /// "(v^-1)*T[e] + (v^-1)*T[s1]".
  std::string to_string() const;

 private:
  const HeckeAlgebra* algebra_;
  std::map<ElementId, LaurentPoly> terms_;
};

class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(std::shared_ptr<const EnumeratedGroup> group) : group_(std::move(group)) {}

  const EnumeratedGroup& group() const { return *group_; }
  std::shared_ptr<const EnumeratedGroup> group_ptr() const { return group_; }

  HeckeElement zero() const { return HeckeElement(this); }
  HeckeElement basis(ElementId w, const LaurentPoly& c = 1) const;
  HeckeElement one() const { return basis(group_->identity()); }

  /// a * T_s.
  HeckeElement multiply_generator(const HeckeElement& a, int s) const;
  /// MixedGroups when either factor belongs to another algebra.
  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement bar(const HeckeElement& a) const;

 private:
  const HeckeElement& bar_basis(ElementId w) const;

  std::shared_ptr<const EnumeratedGroup> group_;
  mutable std::mutex bar_mutex_;
  mutable std::unordered_map<ElementId, std::shared_ptr<const HeckeElement>> bar_cache_;
};

HeckeElement t_multiply(const HeckeElement& a, const HeckeElement& b);
HeckeElement bar(const HeckeElement& a);

/// Kazhdan-Lusztig polynomials, computed column by column (one column per w)
/// and cached. With `verify` set, every new column is checked against the
/// defining properties (bar invariance of C'_w, P_{w,w} = 1, degree bound)
/// and std::logic_error is thrown on a violation.
class KLTable {
 public:
  explicit KLTable(std::shared_ptr<const HeckeAlgebra> algebra, bool verify = false);

  const HeckeAlgebra& algebra() const { return *algebra_; }
  const EnumeratedGroup& group() const { return algebra_->group(); }

  /// P_{y,w} as coefficients in q; empty unless y <= w.
  QPoly polynomial(ElementId y, ElementId w) const;
  /// Coefficient of q^{(l(w)-l(y)-1)/2} in P_{y,w}; 0 when l(w)-l(y) is even.
  BigInt mu(ElementId y, ElementId w) const;
  HeckeElement cprime(ElementId w) const;
  /// All P_{y,w} for y <= w.
  const std::map<ElementId, QPoly>& column(ElementId w) const;

 private:
  using Column = std::map<ElementId, QPoly>;
  const Column* cached(ElementId w) const;
  std::shared_ptr<const Column> compute(ElementId w) const;
  void check_column(ElementId w, const Column& col) const;

  std::shared_ptr<const HeckeAlgebra> algebra_;
  bool verify_;
  mutable std::mutex mutex_;
  mutable std::vector<std::shared_ptr<const Column>> columns_;
};

/// Coefficients of `h` in the C'-basis.
std::map<ElementId, LaurentPoly> expand_in_cprime(const KLTable& table, const HeckeElement& h);

enum class CellKind { Left, Right, TwoSided };

std::string_view to_string(CellKind kind);

struct CellPartition {
  CellKind kind;
  /// Each block sorted by id; blocks ordered by their smallest id.
  std::vector<std::vector<ElementId>> blocks;
};

/// Cells as strongly connected components of the preorder generated by
/// "x occurs in C'_s C'_w" (left), "x occurs in C'_w C'_s" (right), or both.
CellPartition cells(const KLTable& table, CellKind kind);

/// Directed edges of the generating relation, w -> x for each x occurring in
/// the relevant products with C'_w (self-loops omitted).
std::vector<std::vector<ElementId>> cell_edges(const KLTable& table, CellKind kind);

struct PalindromeResult {
  /// sum_{y <= w} X^{l(y)} P_{y,w}(X).
  QPoly polynomial;
  int length = 0;
  bool palindromic = false;
};

PalindromeResult palindrome_check(const KLTable& table, ElementId w);

}  // namespace coxlab
