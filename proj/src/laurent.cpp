#include "coxlab/laurent.hpp"

namespace coxlab {

LaurentPoly LaurentPoly::monomial(int exponent, const BigInt& coefficient) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPoly LaurentPoly::from_q_coefficients(const std::vector<BigInt>& coefficients) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coefficients.size(); ++i) p.add_term(2 * static_cast<int>(i), coefficients[i]);
  return p;
}

BigInt LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + by, c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

namespace {

std::string format_terms(const std::map<int, BigInt>& terms, const std::string& var) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms) {
    BigInt mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      s += mag.get_str();
      continue;
    }
    if (mag != 1) s += mag.get_str() + "*";
    s += var;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string LaurentPoly::to_string() const { return format_terms(terms_, "v"); }

std::string format_qpoly(const QPoly& p, const std::string& var) {
  std::map<int, BigInt> terms;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) terms.emplace(static_cast<int>(i), p[i]);
  return format_terms(terms, var);
}

}  // namespace coxlab
