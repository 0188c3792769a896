#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "../oracles.hpp"
#include "coxlab/character_table.hpp"
#include "coxlab/cyclotomic.hpp"
#include "coxlab/fourier.hpp"
#include "support.hpp"

using namespace coxlab;

namespace {

// |M(G)| as the sum over classes of the class number of the centralizer.
std::size_t pair_count(const FiniteGroup& g) {
  std::size_t n = 0;
  for (const auto& cls : g.classes()) n += g.centralizer(cls.representative).classes().size();
  return n;
}

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  const auto z3 = Cyclotomic::root_of_unity(3, 1);
  CHECK(z3 + z3 * z3 == Cyclotomic(-1));
  CHECK(z3 * z3 * z3 == Cyclotomic(1));
  const auto i = Cyclotomic::root_of_unity(4, 1);
  CHECK(i * i == Cyclotomic(-1));
  CHECK(i.conj() == -i);
  CHECK(Cyclotomic::root_of_unity(6, 1) == -(z3 * z3));
  const auto z5 = Cyclotomic::root_of_unity(5, 1);
  CHECK((z5 + z5.galois(4)).conductor() == 5);
  CHECK(Cyclotomic::root_of_unity(10, 5) == Cyclotomic(-1));
  CHECK((z3 + z3.conj()).is_rational());
  CHECK(Cyclotomic(Rational(1, 2)).to_string() == "1/2");
  const auto half = (z3 * z3 * z3).divided_by(2).embedded(12);
  CHECK(half.conductor() == 12);
  CHECK(half.reduced().conductor() == 1);
  const auto sqrt_minus3 = z3 - z3.conj();
  CHECK(sqrt_minus3.embedded(12).reduced().conductor() == 3);
  CHECK(sqrt_minus3.embedded(12).reduced() == sqrt_minus3);
  const auto i12 = Cyclotomic::root_of_unity(12, 3);
  CHECK(i12.reduced().conductor() == 4);
}

TEST_CASE("permutation groups") {
  const auto s4 = FiniteGroup::builtin("S4");
  CHECK(s4.order() == 24);
  CHECK(s4.classes().size() == 5);
  CHECK(s4.verify_axioms());
  CHECK(FiniteGroup::builtin("A5").order() == 60);
  CHECK(FiniteGroup::builtin("F2^3").order() == 8);
  CHECK(parse_cycles("(1,2)(3,4)", 4) == Perm{1, 0, 3, 2});
  CHECK(error_kind([] { parse_cycles("(1,1)", 3); }) == ErrorKind::NotPermutation);
  CHECK(error_kind([] { FiniteGroup::builtin("Q8"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("character tables satisfy orthogonality") {
  for (const char* name : {"S3", "S4", "S5", "A4", "A5", "Z4", "F2^2"}) {
    const auto g = FiniteGroup::builtin(name);
    const auto t = character_table(g);
    CAPTURE(name);
    CHECK(check_orthogonality(g, t));
    CHECK(t.rows.size() == g.classes().size());
    long squares = 0;
    for (long d : t.degrees) squares += d * d;
    CHECK(squares == static_cast<long>(g.order()));
  }
  const auto a5 = character_table(FiniteGroup::builtin("A5"));
  CHECK(a5.degrees == std::vector<long>{1, 3, 3, 4, 5});
}

TEST_CASE("M(G) sizes match centralizer class numbers") {
  for (const char* name : {"Z2", "S3", "S4", "A4", "F2^2"}) {
    const auto g = FiniteGroup::builtin(name);
    CAPTURE(name);
    CHECK(FourierData(g).pairs().size() == pair_count(g));
  }
  CHECK(pair_count(FiniteGroup::builtin("S3")) == 8);
  CHECK(pair_count(FiniteGroup::builtin("S4")) == 21);
}

TEST_CASE("Fourier matrix is unitary, involutive and hermitian") {
  for (const char* name : {"Z2", "Z3", "S3", "A4", "F2^2"}) {
    const FourierData data(FiniteGroup::builtin(name));
    const auto m = data.matrix();
    CAPTURE(name);
    CHECK(is_identity(multiply(m, m)));
    CHECK(is_identity(multiply(m, conjugate_transpose(m))));
  }
  const FourierData s3(FiniteGroup::builtin("S3"));
  CHECK(s3.entry(s3.pairs()[0], s3.pairs()[0]) == Cyclotomic(Rational(1, 6)));
  CHECK(error_kind([&] { s3.entry(MPair{7, 0}, s3.pairs()[0]); }) == ErrorKind::InvalidPair);
}

TEST_CASE("Burnside counts equal direct enumeration") {
  for (const char* name : {"S3", "S4", "A4"}) {
    const auto g = FiniteGroup::builtin(name);
    const auto t = character_table(g);
    const std::size_t k = g.classes().size();
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < k; ++c) {
          const Rational value = burnside_triple_count(g, t, a, b, c);
          CHECK(value.get_den() == 1);
          CHECK(value == Rational(static_cast<unsigned long>(oracle::triple_count(g, a, b, c))));
        }
  }
  const auto s3 = FiniteGroup::builtin("S3");
  CHECK(error_kind([&] { burnside_triple_count(s3, character_table(s3), 0, 0, 9); }) == ErrorKind::NotAClass);
}
