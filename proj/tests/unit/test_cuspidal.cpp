#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../oracles.hpp"
#include "coxlab/cuspidal.hpp"
#include "coxlab/intpoly.hpp"
#include "support.hpp"

using namespace coxlab;

namespace {

std::size_t table_size(const char* name) { return cuspidal_data(CoxeterSpec::parse(name)).size(); }

const Check* find_check(const ValidationReport& r, const std::string& fragment) {
  for (const auto& c : r.checks)
    if (c.name.find(fragment) != std::string::npos) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("table cardinalities") {
  CHECK(table_size("E6") == 2);
  CHECK(table_size("E7") == 2);
  CHECK(table_size("E8") == 13);
  CHECK(table_size("F4") == 7);
  CHECK(table_size("G2") == 4);
  for (int n = 1; n <= 12; ++n) CHECK(table_size(("A" + std::to_string(n)).c_str()) == 0);
  for (int n = 2; n <= 30; ++n) {
    const bool bc = n == 2 || n == 6 || n == 12 || n == 20 || n == 30;
    CHECK(table_size(("B" + std::to_string(n)).c_str()) == (bc ? 1u : 0u));
    CHECK(table_size(("C" + std::to_string(n)).c_str()) == (bc ? 1u : 0u));
  }
  for (int n = 4; n <= 40; ++n) {
    const bool d = n == 4 || n == 16 || n == 36;
    CHECK(table_size(("D" + std::to_string(n)).c_str()) == (d ? 1u : 0u));
  }
}

TEST_CASE("classical entries") {
  const auto b2 = cuspidal_data(CoxeterSpec::parse("B2"));
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].cls == ClassSpec::cycle_type({4}));
  CHECK(b2[0].eigenvalue.to_string() == "-q^2");
  const auto c6 = cuspidal_data(CoxeterSpec::parse("C6"));
  REQUIRE(c6.size() == 1);
  CHECK(c6[0].cls == ClassSpec::cycle_type({4, 8}));
  CHECK(c6[0].eigenvalue.to_string() == "-q^10");
  const auto c12 = cuspidal_data(CoxeterSpec::parse("C12"));
  CHECK(c12[0].cls == ClassSpec::cycle_type({4, 8, 12}));
  CHECK(c12[0].eigenvalue.to_string() == "q^28");
  const auto d4 = cuspidal_data(CoxeterSpec::parse("D4"));
  REQUIRE(d4.size() == 1);
  CHECK(d4[0].cls == ClassSpec::cycle_type({2, 6}));
  CHECK(d4[0].eigenvalue.to_string() == "-q^4");
  const auto d16 = cuspidal_data(CoxeterSpec::parse("D16"));
  CHECK(d16[0].cls == ClassSpec::cycle_type({2, 6, 10, 14}));
  CHECK(d16[0].eigenvalue.to_string() == "q^40");
  CHECK(has_cuspidal(CoxeterSpec::parse("B20")).k == 4);
  CHECK(error_kind([] { has_cuspidal(CoxeterSpec::parse("E6")); }) == ErrorKind::UnsupportedFamily);
}

TEST_CASE("exceptional entries") {
  const auto g2 = cuspidal_data(CoxeterSpec::parse("G2"));
  REQUIRE(g2.size() == 4);
  CHECK(g2[0].eigenvalue.to_string() == "z3 q");
  CHECK(g2[1].eigenvalue.to_string() == "z3^2 q");
  CHECK(g2[2].eigenvalue.to_string() == "-q");
  CHECK(g2[3].eigenvalue.to_string() == "q^2");
  CHECK(g2[0].cls.to_string() == "Phi6");
  CHECK(g2[3].cls.to_string() == "Phi3");
  const auto e7 = cuspidal_data(CoxeterSpec::parse("E7"));
  CHECK(e7[0].eigenvalue.to_string() == "z4 q^(7/2)");
  CHECK(e7[1].eigenvalue.to_string() == "z4^3 q^(7/2)");
  const auto e8 = cuspidal_data(CoxeterSpec::parse("E8"));
  CHECK(e8[0].eigenvalue.root == TurnFraction::make(5, 6));
  CHECK(e8[11].cls.to_string() == "Phi12 Phi6^2");
  CHECK(e8[11].eigenvalue.to_string() == "-q^11");
  for (const char* name : {"G2", "F4", "E6", "E7", "E8"}) {
    const auto spec = CoxeterSpec::parse(name);
    for (const auto& d : cuspidal_data(spec)) {
      int degree = 0;
      for (auto [k, mult] : d.cls.factors) {
        CHECK(k != 1);
        degree += static_cast<int>(euler_phi(k)) * mult;
      }
      CHECK(degree == spec.rank);
    }
  }
}

TEST_CASE("specialization at q = 1") {
  const auto b6 = specialize_q1(cuspidal_data(CoxeterSpec::parse("B6")));
  REQUIRE(b6.size() == 1);
  CHECK(b6[0].root.to_string() == "-1");
  const auto c2 = specialize_q1(cuspidal_data(CoxeterSpec::parse("C2")));
  CHECK(c2[0].root.to_string() == "-1");
  const auto b12 = specialize_q1(cuspidal_data(CoxeterSpec::parse("B12")));
  CHECK(b12[0].root.to_string() == "1");
  CHECK(specialize_q1(cuspidal_data(CoxeterSpec::parse("A5"))).empty());
  const auto e7 = specialize_q1(cuspidal_data(CoxeterSpec::parse("E7")));
  CHECK(e7[0].half_integer_exponent);
  CHECK(!specialize_q1(cuspidal_data(CoxeterSpec::parse("E6")))[0].half_integer_exponent);
}

TEST_CASE("class matching") {
  const auto b2 = match_classes(CoxeterSpec::parse("B2"), ClassSpec::cycle_type({4}));
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].elliptic);
  CHECK(b2[0].size == 2);
  const auto ambiguous = match_classes(CoxeterSpec::parse("B2"), ClassSpec::cycle_type({2, 2}));
  CHECK(ambiguous.size() == oracle::classes_per_cycle_type(CoxeterSpec::parse("B2")).at({2, 2}));
  const auto g2 = match_classes(CoxeterSpec::parse("G2"), ClassSpec::char_poly({{6, 1}}));
  REQUIRE(g2.size() == 1);
  CHECK(g2[0].min_length == 2);
  CHECK(error_kind([] { match_classes(CoxeterSpec::parse("E7"), ClassSpec::char_poly({{18, 1}, {2, 1}}), 1000); }) ==
        ErrorKind::TooLarge);
}

TEST_CASE("validation reports") {
  for (const char* name : {"G2", "F4", "E6", "B2", "C6", "D4", "A3"}) {
    const auto r = validate(CoxeterSpec::parse(name));
    CAPTURE(name);
    CHECK(r.ok());
  }
  const auto e6 = validate(CoxeterSpec::parse("E6"));
  const Check* length = find_check(e6, "min length / 2");
  REQUIRE(length);
  CHECK(length->required);
  CHECK(length->status == CheckStatus::Pass);

  // Classical types: the exponent equals the minimal length rather than half
  // of it, so the diagnostic fails and is marked informational.
  const auto b2 = validate(CoxeterSpec::parse("B2"));
  const Check* b2_length = find_check(b2, "min length / 2");
  REQUIRE(b2_length);
  CHECK(!b2_length->required);
  CHECK(b2_length->status == CheckStatus::Fail);

  const auto e8 = validate(CoxeterSpec::parse("E8"));
  CHECK(e8.ok());
  bool skipped = false;
  for (const auto& c : e8.checks) skipped = skipped || c.status == CheckStatus::Skipped;
  CHECK(skipped);
}
