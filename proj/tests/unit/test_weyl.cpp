#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "../oracles.hpp"
#include "coxlab/intpoly.hpp"
#include "coxlab/weyl.hpp"
#include "coxlab/weyl_enum.hpp"
#include "support.hpp"

using namespace coxlab;

namespace {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

TEST_CASE("type names parse and reject bad input") {
  CHECK(CoxeterSpec::parse("E6").name() == "E6");
  CHECK(CoxeterSpec::parse("b3").name() == "B3");
  CHECK(error_kind([] { CoxeterSpec::parse("H3"); }) == ErrorKind::UnsupportedSpec);
  CHECK(error_kind([] { WeylGroup::build(CoxeterSpec::parse("E9")); }) == ErrorKind::UnsupportedSpec);
  CHECK(error_kind([] { WeylGroup::build(CoxeterSpec::parse("D3")); }) == ErrorKind::UnsupportedSpec);
  CHECK(error_kind([] { WeylGroup::build(CoxeterSpec::parse("G3")); }) == ErrorKind::UnsupportedSpec);
}

TEST_CASE("enumerated order agrees with the order formula") {
  for (const char* name : {"A1", "A3", "A4", "B2", "B3", "C3", "D4", "D5", "G2", "F4", "E6"}) {
    const auto spec = CoxeterSpec::parse(name);
    const auto g = EnumeratedGroup::build(spec);
    CAPTURE(name);
    CHECK(BigInt(static_cast<unsigned long>(g->size())) == weyl_group_order(spec));
  }
  for (int n = 1; n <= 7; ++n) CHECK(weyl_group_order(CoxeterSpec::parse("A" + std::to_string(n))) == factorial(n + 1));
}

TEST_CASE("type A elements match permutations of reduced words") {
  const auto g = EnumeratedGroup::build(CoxeterSpec::parse("A3"));
  std::set<oracle::OneLine> seen;
  for (ElementId x = 0; x < g->size(); ++x) {
    const auto word = g->word(x);
    const auto perm = oracle::type_a_permutation(4, word);
    CHECK(to_big_permutation(g->element(x)).images == perm);
    CHECK(g->length(x) == oracle::inversions(perm));
    CHECK(static_cast<int>(word.size()) == g->length(x));
    seen.insert(perm);
  }
  CHECK(seen.size() == 24);
}

TEST_CASE("reduced words are ShortLex minimal and round-trip") {
  const auto w = WeylGroup::build(CoxeterSpec::parse("B3"));
  const auto x = w->parse_word("s3 s2 s3 s2");
  CHECK(length(x) == 4);
  CHECK(w->from_word(w->reduced_word(x)) == x);
  CHECK(w->format(w->parse_word("s1 s1")) == "e");
  CHECK(length(w->longest_element()) == w->num_positive());
  CHECK(length(w->longest_element()) == 9);
}

TEST_CASE("Bruhat intervals equal subword products in S_4") {
  const auto g = EnumeratedGroup::build(CoxeterSpec::parse("A3"));
  for (ElementId w = 0; w < g->size(); ++w) {
    const auto expected = oracle::subword_products(4, g->word(w));
    std::set<oracle::OneLine> actual;
    for (ElementId y : g->lower_interval(w)) actual.insert(oracle::type_a_permutation(4, g->word(y)));
    CAPTURE(g->format(w));
    CHECK(actual == expected);
    for (ElementId y = 0; y < g->size(); ++y)
      CHECK(g->bruhat_leq(y, w) == expected.contains(oracle::type_a_permutation(4, g->word(y))));
  }
}

TEST_CASE("elliptic determinant test agrees with the parabolic definition") {
  for (const char* name : {"A3", "B3", "G2", "D4"}) {
    const auto g = EnumeratedGroup::build(CoxeterSpec::parse(name));
    CAPTURE(name);
    for (ElementId x = 0; x < g->size(); ++x) CHECK(is_elliptic(g->element(x)) == oracle::parabolic_elliptic(*g, x));
  }
}

TEST_CASE("characteristic polynomials on the reflection representation") {
  // A 4-cycle on the permutation module has x^4 - 1; removing the trivial
  // summand leaves x^3 + x^2 + x + 1.
  const auto a3 = WeylGroup::build(CoxeterSpec::parse("A3"));
  const auto cox = char_poly_reflection(a3->coxeter_element());
  CHECK(cox.coefficients == IntPoly{1, 1, 1, 1});
  REQUIRE(cox.cyclotomic_factors);
  CHECK(format_cyclotomic_factors(*cox.cyclotomic_factors) == "Phi4 Phi2");
  CHECK(char_poly_reflection(a3->identity()).coefficients == IntPoly{-1, 3, -3, 1});

  const auto e6 = WeylGroup::build(CoxeterSpec::parse("E6"));
  const auto e6cox = char_poly_reflection(e6->coxeter_element());
  REQUIRE(e6cox.cyclotomic_factors);
  CHECK(format_cyclotomic_factors(*e6cox.cyclotomic_factors) == "Phi12 Phi3");
}

TEST_CASE("conjugacy classes by generator BFS") {
  const auto g = EnumeratedGroup::build(CoxeterSpec::parse("B3"));
  std::size_t total = 0;
  for (const auto& cls : g->classes()) {
    const auto expected = oracle::class_by_generators(*g, cls.front());
    CHECK(std::set<ElementId>(cls.begin(), cls.end()) == expected);
    total += cls.size();
    const auto members = conjugacy_class(g->element(cls.front()));
    CHECK(members.size() == cls.size());
    int min_len = 1 << 20;
    for (auto x : cls) min_len = std::min(min_len, g->length(x));
    CHECK(min_length_in_class(members) == min_len);
  }
  CHECK(total == g->size());
  CHECK(error_kind([&] { conjugacy_class(g->element(g->parse("s1")), 2); }) == ErrorKind::TooLarge);
}

TEST_CASE("big permutations of B, C and D commute with the central involution") {
  for (const char* name : {"B2", "B3", "C3", "D4"}) {
    const auto g = EnumeratedGroup::build(CoxeterSpec::parse(name));
    for (ElementId x = 0; x < g->size(); ++x) {
      const auto p = to_big_permutation(g->element(x));
      CHECK(p.commutes_with_involution());
      CHECK(to_big_permutation(g->element(g->inverse(x))) == p.inverse());
    }
  }
  const auto c2 = WeylGroup::build(CoxeterSpec::parse("C2"));
  CHECK(to_big_permutation(c2->generator(1)).one_line() == "[1,3,2,4]");
  const auto d4 = WeylGroup::build(CoxeterSpec::parse("D4"));
  CHECK(to_big_permutation(d4->generator(3)).one_line() == "[1,2,5,6,3,4,7,8]");
}

TEST_CASE("cycle types and W-classes for small classical types") {
  // Cuspidal cycle types {4} (B2/C2), {2,6} (D4) and {4,8} (B6/C6) each pin
  // one class; the cycle type {2,2} of B2 is shared by two classes.
  const auto b2 = oracle::classes_per_cycle_type(CoxeterSpec::parse("B2"));
  CHECK(b2.at({4}) == 1);
  CHECK(b2.at({2, 2}) == 2);
  CHECK(oracle::classes_per_cycle_type(CoxeterSpec::parse("C2")).at({4}) == 1);
  CHECK(oracle::classes_per_cycle_type(CoxeterSpec::parse("D4")).at({2, 6}) == 1);
  for (const char* name : {"B2", "B3", "B4", "C3", "C4", "D4"}) {
    const auto spec = CoxeterSpec::parse(name);
    const auto counts = oracle::classes_per_cycle_type(spec);
    std::size_t classes = 0;
    for (const auto& [type, n] : counts) classes += static_cast<std::size_t>(n);
    CHECK(classes == EnumeratedGroup::build(spec)->classes().size());
  }
}

TEST_CASE("size limits") {
  CHECK(error_kind([] { EnumeratedGroup::build(CoxeterSpec::parse("E8")); }) == ErrorKind::TooLarge);
  CHECK(error_kind([] { EnumeratedGroup::build(CoxeterSpec::parse("A5"), 100); }) == ErrorKind::TooLarge);
}
