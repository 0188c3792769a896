#include "coxlab/cuspidal.hpp"

#include <algorithm>
#include <numeric>

#include "coxlab/error.hpp"
#include "coxlab/intpoly.hpp"
#include "coxlab/weyl_enum.hpp"

namespace coxlab {

namespace {

using Factors = std::map<int, int>;

CuspidalDatum exceptional(const CoxeterSpec& spec, const char* label, Factors factors, int a, int b,
                          int half_exponent) {
  return {spec, label, ClassSpec::char_poly(std::move(factors)), {TurnFraction::make(a, b), half_exponent}};
}

std::vector<CuspidalDatum> exceptional_table(const CoxeterSpec& spec) {
  const Factors c6_g2{{6, 1}}, c3_g2{{3, 1}};
  const Factors c12_f4{{12, 1}}, c8_f4{{8, 1}}, c6_f4{{6, 2}}, c4_f4{{4, 2}};
  const Factors c_e6{{12, 1}, {3, 1}};
  const Factors c_e7{{18, 1}, {2, 1}};
  const Factors c30{{30, 1}}, c24{{24, 1}}, c18{{18, 1}, {6, 1}}, c12{{12, 2}}, c12p{{12, 1}, {6, 2}},
      c6_e8{{6, 4}};
  switch (spec.family) {
    case Family::G:
      return {
          exceptional(spec, "C6", c6_g2, 1, 3, 2),  // theta q
          exceptional(spec, "C6", c6_g2, 2, 3, 2),  // theta^2 q
          exceptional(spec, "C6", c6_g2, 1, 2, 2),  // -q
          exceptional(spec, "C3", c3_g2, 0, 1, 4),  // q^2
      };
    case Family::F:
      return {
          exceptional(spec, "C12", c12_f4, 1, 4, 4),  // sqrt(-1) q^2
          exceptional(spec, "C12", c12_f4, 3, 4, 4),  // -sqrt(-1) q^2
          exceptional(spec, "C12", c12_f4, 1, 3, 4),  // theta q^2
          exceptional(spec, "C12", c12_f4, 2, 3, 4),  // theta^2 q^2
          exceptional(spec, "C8", c8_f4, 1, 2, 6),    // -q^3
          exceptional(spec, "C6", c6_f4, 0, 1, 8),    // q^4
          exceptional(spec, "C4", c4_f4, 0, 1, 12),   // q^6
      };
    case Family::E:
      if (spec.rank == 6)
        return {
            exceptional(spec, "C", c_e6, 1, 3, 6),  // theta q^3
            exceptional(spec, "C", c_e6, 2, 3, 6),  // theta^2 q^3
        };
      if (spec.rank == 7)
        return {
            exceptional(spec, "C", c_e7, 1, 4, 7),  // sqrt(-1) q^{7/2}
            exceptional(spec, "C", c_e7, 3, 4, 7),  // -sqrt(-1) q^{7/2}
        };
      return {
          exceptional(spec, "C30", c30, 5, 6, 8),     // -theta q^4
          exceptional(spec, "C30", c30, 1, 6, 8),     // -theta^2 q^4
          exceptional(spec, "C30", c30, 1, 5, 8),     // zeta q^4
          exceptional(spec, "C30", c30, 2, 5, 8),     // zeta^2 q^4
          exceptional(spec, "C30", c30, 3, 5, 8),     // zeta^3 q^4
          exceptional(spec, "C30", c30, 4, 5, 8),     // zeta^4 q^4
          exceptional(spec, "C24", c24, 1, 4, 10),    // sqrt(-1) q^5
          exceptional(spec, "C24", c24, 3, 4, 10),    // -sqrt(-1) q^5
          exceptional(spec, "C18", c18, 1, 3, 14),    // theta q^7
          exceptional(spec, "C18", c18, 2, 3, 14),    // theta^2 q^7
          exceptional(spec, "C12", c12, 0, 1, 20),    // q^10
          exceptional(spec, "C'12", c12p, 1, 2, 22),  // -q^11
          exceptional(spec, "C6", c6_e8, 0, 1, 40),   // q^20
      };
    default:
      return {};
  }
}

std::size_t expected_cardinality(const CoxeterSpec& spec) {
  switch (spec.family) {
    case Family::A:
      return 0;
    case Family::B:
    case Family::C:
    case Family::D:
      return has_cuspidal(spec).exists ? 1 : 0;
    case Family::E:
      return spec.rank == 8 ? 13 : 2;
    case Family::F:
      return 7;
    case Family::G:
      return 4;
  }
  return 0;
}

struct ClassSignature {
  std::vector<int> cycles;
  Factors factors;
};

bool matches(const ClassSpec& cls, const ClassSignature& sig) {
  if (cls.kind == ClassSpec::Kind::CycleType) return cls.cycles == sig.cycles;
  return cls.factors == sig.factors;
}

// One entry per conjugacy class of W, computed once per group.
struct ClassCatalogue {
  std::vector<MatchedClass> classes;
  std::vector<ClassSignature> signatures;
};

ClassCatalogue catalogue(const CoxeterSpec& spec, std::size_t max_size) {
  check_spec(spec);
  if (weyl_group_order(spec) > BigInt(static_cast<unsigned long>(max_size)))
    fail(ErrorKind::TooLarge, spec.name() + " has more than " + std::to_string(max_size) + " elements");
  const auto group = EnumeratedGroup::build(spec, max_size);
  ClassCatalogue out;
  for (const auto& members : group->classes()) {
    const ElementId first = members.front();
    const WeylElement w = group->element(first);
    ClassSignature sig;
    if (spec.is_classical()) {
      sig.cycles = cycle_type(to_big_permutation(w));
      std::sort(sig.cycles.begin(), sig.cycles.end());
    }
    if (auto factors = char_poly_reflection(w).cyclotomic_factors) sig.factors = *factors;
    out.classes.push_back({group->word(first), members.size(), group->length(first), is_elliptic(w)});
    out.signatures.push_back(std::move(sig));
  }
  return out;
}

std::vector<MatchedClass> select(const ClassCatalogue& cat, const ClassSpec& cls) {
  std::vector<MatchedClass> out;
  for (std::size_t i = 0; i < cat.classes.size(); ++i)
    if (matches(cls, cat.signatures[i])) out.push_back(cat.classes[i]);
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

}  // namespace

TurnFraction TurnFraction::make(int a, int b) {
  if (b < 1) fail(ErrorKind::InvalidArgument, "turn denominator must be positive");
  a %= b;
  if (a < 0) a += b;
  const int g = std::gcd(a, b);
  return {a / g, b / g};
}

std::string TurnFraction::to_string() const {
  if (numerator == 0) return "1";
  if (denominator == 2) return "-1";
  std::string s = "z" + std::to_string(denominator);
  if (numerator != 1) s += "^" + std::to_string(numerator);
  return s;
}

std::string EigenvalueSpec::exponent_string() const {
  if (integral_exponent()) return std::to_string(half_exponent / 2);
  return std::to_string(half_exponent) + "/2";
}

std::string EigenvalueSpec::to_string() const {
  std::string power;
  if (half_exponent != 0) {
    power = "q";
    if (half_exponent != 2) power += integral_exponent() ? "^" + exponent_string() : "^(" + exponent_string() + ")";
  }
  if (power.empty()) return root.to_string();
  if (root.numerator == 0) return power;
  if (root.denominator == 2) return "-" + power;
  return root.to_string() + " " + power;
}

ClassSpec ClassSpec::cycle_type(std::vector<int> lengths) {
  std::sort(lengths.begin(), lengths.end());
  ClassSpec c;
  c.kind = Kind::CycleType;
  c.cycles = std::move(lengths);
  return c;
}

ClassSpec ClassSpec::char_poly(std::map<int, int> factors) {
  ClassSpec c;
  c.kind = Kind::CharPoly;
  c.factors = std::move(factors);
  return c;
}

std::string ClassSpec::to_string() const {
  if (kind == Kind::CycleType) return "cycles " + join(cycles);
  return format_cyclotomic_factors(factors);
}

CuspidalCondition has_cuspidal(const CoxeterSpec& spec) {
  check_spec(spec);
  const int n = spec.rank;
  switch (spec.family) {
    case Family::A:
      return {};
    case Family::B:
    case Family::C:
      for (int k = 1; k * k + k <= n; ++k)
        if (k * k + k == n) return {true, k};
      return {};
    case Family::D:
      for (int k = 2; k * k <= n; k += 2)
        if (k * k == n) return {true, k};
      return {};
    default:
      fail(ErrorKind::UnsupportedFamily, spec.name() + " is not a classical type");
  }
}

std::vector<CuspidalDatum> cuspidal_data(const CoxeterSpec& spec) {
  check_spec(spec);
  if (!spec.is_classical()) return exceptional_table(spec);
  const CuspidalCondition cond = has_cuspidal(spec);
  if (!cond.exists) return {};
  const int n = spec.rank, k = cond.k;
  std::vector<int> cycles;
  if (spec.family == Family::D) {
    for (int j = 1; j <= k; ++j) cycles.push_back(4 * j - 2);
    // (-1)^{n/4} q^{2k(k^2-1)/3}
    return {{spec, "C", ClassSpec::cycle_type(cycles), {TurnFraction::make((n / 4) % 2, 2), 4 * k * (k * k - 1) / 3}}};
  }
  for (int j = 1; j <= k; ++j) cycles.push_back(4 * j);
  // (-1)^{n/2} q^{k(k+1)(2k+1)/3}
  return {{spec, "C", ClassSpec::cycle_type(cycles), {TurnFraction::make((n / 2) % 2, 2), 2 * k * (k + 1) * (2 * k + 1) / 3}}};
}

std::vector<SpecializedDatum> specialize_q1(const std::vector<CuspidalDatum>& data) {
  std::vector<SpecializedDatum> out;
  for (const auto& d : data) out.push_back({d.cls, d.eigenvalue.root, !d.eigenvalue.integral_exponent()});
  return out;
}

std::vector<MatchedClass> match_classes(const CoxeterSpec& spec, const ClassSpec& cls, std::size_t max_size) {
  if ((cls.kind == ClassSpec::Kind::CycleType) != spec.is_classical())
    fail(ErrorKind::UnsupportedFamily, "cycle types apply to classical types, characteristic polynomials to the others");
  return select(catalogue(spec, max_size), cls);
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "?";
}

bool ValidationReport::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.required && c.status == CheckStatus::Fail; });
}

ValidationReport validate(const CoxeterSpec& spec, std::size_t max_size) {
  check_spec(spec);
  ValidationReport report;
  report.spec = spec;
  auto add = [&](std::string name, bool passed, std::string detail, bool required = true) {
    report.checks.push_back({std::move(name), passed ? CheckStatus::Pass : CheckStatus::Fail, required, std::move(detail)});
  };
  auto skip = [&](std::string name, std::string detail, bool required = true) {
    report.checks.push_back({std::move(name), CheckStatus::Skipped, required, std::move(detail)});
  };

  const auto data = cuspidal_data(spec);
  const std::size_t expected = expected_cardinality(spec);
  add("cardinality", data.size() == expected,
      std::to_string(data.size()) + " data, expected " + std::to_string(expected));

  const int n = spec.rank;
  if (spec.is_classical() && spec.family != Family::A) {
    const CuspidalCondition cond = has_cuspidal(spec);
    if (cond.exists) {
      const int k = cond.k;
      if (spec.family == Family::D) {
        add("sign exponent n/4 integral", n % 4 == 0, "n = " + std::to_string(n));
        add("q-exponent 2k(k^2-1)/3 integral", (2 * k * (k * k - 1)) % 3 == 0,
            "k = " + std::to_string(k) + ", exponent " + std::to_string(2 * k * (k * k - 1) / 3));
      } else {
        add("sign exponent n/2 integral", n % 2 == 0, "n = " + std::to_string(n));
        add("q-exponent k(k+1)(2k+1)/3 integral", (k * (k + 1) * (2 * k + 1)) % 3 == 0,
            "k = " + std::to_string(k) + ", exponent " + std::to_string(k * (k + 1) * (2 * k + 1) / 3));
      }
    }
  }

  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& d = data[i];
    const std::string tag = "datum " + std::to_string(i + 1) + " (" + d.cls.to_string() + ", " +
                            d.eigenvalue.to_string() + ")";
    const TurnFraction& r = d.eigenvalue.root;
    add(tag + ": root of unity", r.numerator >= 0 && r.numerator < r.denominator && std::gcd(r.numerator, r.denominator) == 1 &&
                                     r.denominator >= 1 && r.denominator <= 6,
        r.to_string());
    if (d.cls.kind == ClassSpec::Kind::CycleType) {
      const int sum = std::accumulate(d.cls.cycles.begin(), d.cls.cycles.end(), 0);
      const bool no_fixed = std::all_of(d.cls.cycles.begin(), d.cls.cycles.end(), [](int c) { return c >= 2; });
      add(tag + ": cycle lengths sum to 2n", sum == 2 * n, std::to_string(sum) + " vs " + std::to_string(2 * n));
      add(tag + ": no fixed points", no_fixed, d.cls.to_string());
    } else {
      int degree = 0;
      for (const auto& [dd, mult] : d.cls.factors) degree += euler_phi(dd) * mult;
      add(tag + ": degree equals rank", degree == n, std::to_string(degree) + " vs " + std::to_string(n));
      add(tag + ": no Phi1 factor", !d.cls.factors.contains(1), d.cls.to_string());
    }
  }

  if (data.empty()) return report;
  std::optional<ClassCatalogue> cat;
  try {
    cat = catalogue(spec, max_size);
  } catch (const DomainError& e) {
    if (e.kind() != ErrorKind::TooLarge) throw;
  }
  const bool classical = spec.is_classical();
  std::vector<ClassSpec> seen;
  for (const auto& d : data) {
    const std::string tag = d.label + " (" + d.cls.to_string() + ")";
    const bool first_time = std::find(seen.begin(), seen.end(), d.cls) == seen.end();
    if (first_time) seen.push_back(d.cls);
    if (!cat) {
      if (first_time) skip(tag + ": class match", "|W| exceeds " + std::to_string(max_size));
      skip(tag + " " + d.eigenvalue.to_string() + ": exponent = min length / 2",
           "|W| exceeds " + std::to_string(max_size), !classical);
      continue;
    }
    const auto found = select(*cat, d.cls);
    if (first_time) {
      add(tag + ": class match", !found.empty(), std::to_string(found.size()) + " matching class(es)");
      add(tag + ": unique class", found.size() == 1,
          found.size() == 1 ? "1 class" : "ambiguous: " + std::to_string(found.size()) + " classes", false);
      const bool elliptic = !found.empty() && std::all_of(found.begin(), found.end(),
                                                          [](const MatchedClass& c) { return c.elliptic; });
      add(tag + ": elliptic", elliptic, elliptic ? "det(w - 1) != 0" : "not elliptic");
    }
    std::string lengths;
    bool agree = !found.empty();
    for (const auto& c : found) {
      lengths += (lengths.empty() ? "" : ",") + std::to_string(c.min_length);
      if (c.min_length != d.eigenvalue.half_exponent) agree = false;
    }
    add(tag + " " + d.eigenvalue.to_string() + ": exponent = min length / 2", agree,
        "exponent " + d.eigenvalue.exponent_string() + ", min length " + (lengths.empty() ? "-" : lengths), !classical);
  }
  return report;
}

}  // namespace coxlab
