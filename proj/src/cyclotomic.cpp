#include "coxlab/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

#include "coxlab/error.hpp"
#include "coxlab/intpoly.hpp"

namespace coxlab {

namespace {

// Rows x^k mod Phi_N for 0 <= k < N, each of length phi(N).
struct ReductionTable {
  int phi = 0;
  std::vector<std::vector<long long>> rows;
};

const ReductionTable& reduction_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const ReductionTable>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto table = std::make_shared<ReductionTable>();
  const IntPoly& phi_n = cyclotomic_polynomial(n);
  const int phi = static_cast<int>(phi_n.size()) - 1;
  table->phi = phi;
  table->rows.assign(n, std::vector<long long>(phi, 0));
  for (int k = 0; k < std::min(n, phi); ++k) table->rows[k][k] = 1;
  for (int k = phi; k < n; ++k) {
    // x * (x^{k-1} mod Phi) with x^phi replaced by -(Phi - x^phi).
    const auto& prev = table->rows[k - 1];
    auto& row = table->rows[k];
    const long long top = prev[phi - 1];
    for (int j = phi - 1; j >= 1; --j) row[j] = prev[j - 1];
    row[0] = 0;
    for (int j = 0; j < phi; ++j) row[j] -= top * phi_n[j];
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, table);
  return *it->second;
}

constexpr int kTableLimit = 1024;

// Reduces a vector indexed by exponents mod n.
std::vector<BigInt> reduce(int n, std::vector<BigInt> by_exponent) {
  if (n > kTableLimit) {
    // Long division by the monic Phi_n, for conductors too large to tabulate.
    const IntPoly& phi_n = cyclotomic_polynomial(n);
    const int phi = static_cast<int>(phi_n.size()) - 1;
    std::vector<std::pair<int, long long>> lower;
    for (int j = 0; j < phi; ++j)
      if (phi_n[j] != 0) lower.emplace_back(j, phi_n[j]);
    for (int k = n - 1; k >= phi; --k) {
      if (by_exponent[k] == 0) continue;
      const BigInt c = by_exponent[k];
      for (const auto& [j, a] : lower) by_exponent[k - phi + j] -= c * static_cast<long>(a);
      by_exponent[k] = 0;
    }
    by_exponent.resize(phi);
    return by_exponent;
  }
  const ReductionTable& t = reduction_table(n);
  std::vector<BigInt> out(t.phi, 0);
  for (int k = 0; k < n; ++k) {
    const BigInt& c = by_exponent[k];
    if (c == 0) continue;
    if (k < t.phi) {
      out[k] += c;
      continue;
    }
    const auto& row = t.rows[k];
    for (int j = 0; j < t.phi; ++j)
      if (row[j] != 0) out[j] += c * static_cast<long>(row[j]);
  }
  return out;
}

int phi_of(int n) { return n > kTableLimit ? euler_phi(n) : reduction_table(n).phi; }

int lcm_int(int a, int b) { return std::lcm(a, b); }

}  // namespace

Cyclotomic::Cyclotomic() : num_{0} {}

Cyclotomic::Cyclotomic(long value) : num_{BigInt(value)} {}

Cyclotomic::Cyclotomic(const Rational& value) : num_{value.get_num()}, den_(value.get_den()) {}

Cyclotomic Cyclotomic::root_of_unity(int conductor, long long k) {
  if (conductor < 1) fail(ErrorKind::InvalidArgument, "conductor must be positive");
  std::vector<BigInt> by_exponent(conductor, 0);
  long long e = k % conductor;
  if (e < 0) e += conductor;
  by_exponent[e] = 1;
  Cyclotomic c;
  c.conductor_ = conductor;
  c.num_ = reduce(conductor, by_exponent);
  c.den_ = 1;
  return c;
}

Cyclotomic Cyclotomic::from_coordinates(int conductor, std::vector<BigInt> numerators, BigInt denominator) {
  const int phi = phi_of(conductor);
  if (static_cast<int>(numerators.size()) != phi)
    fail(ErrorKind::InvalidArgument, "expected " + std::to_string(phi) + " coordinates");
  if (denominator == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  Cyclotomic c;
  c.conductor_ = conductor;
  c.num_ = std::move(numerators);
  c.den_ = std::move(denominator);
  c.normalize();
  return c;
}

void Cyclotomic::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  BigInt g = den_;
  for (const auto& x : num_) {
    if (g == 1) break;
    if (x != 0) g = gcd(g, x);
  }
  if (g != 1) {
    den_ /= g;
    for (auto& x : num_) x /= g;
  }
  if (is_zero()) den_ = 1;
}

std::vector<Rational> Cyclotomic::coordinates() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& x : num_) out.push_back(make_rational(x, den_));
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : num_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const { return make_rational(num_[0], den_); }

Cyclotomic Cyclotomic::embedded(int m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0) fail(ErrorKind::InvalidArgument, "conductor does not divide target");
  const int step = m / conductor_;
  std::vector<BigInt> by_exponent(m, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) by_exponent[i * step] = num_[i];
  Cyclotomic c;
  c.conductor_ = m;
  c.num_ = reduce(m, by_exponent);
  c.den_ = den_;
  c.normalize();
  return c;
}

Cyclotomic Cyclotomic::reduced() const {
  if (is_rational()) return Cyclotomic(rational_value());
  const std::size_t target = num_.size();
  for (int d = 2; d < conductor_; ++d) {
    if (conductor_ % d != 0) continue;
    // Columns: images of 1, zeta_d, ..., zeta_d^{phi(d)-1}; last column: this.
    const int phi = phi_of(d);
    std::vector<std::vector<Rational>> rows(target, std::vector<Rational>(phi + 1));
    for (int j = 0; j < phi; ++j) {
      const Cyclotomic basis = root_of_unity(d, j).embedded(conductor_);
      for (std::size_t i = 0; i < target; ++i) rows[i][j] = basis.num_[i];
    }
    for (std::size_t i = 0; i < target; ++i) rows[i][phi] = make_rational(num_[i], den_);
    std::vector<int> pivot_col;
    std::size_t r = 0;
    bool consistent = true;
    for (int c = 0; c <= phi && r < target; ++c) {
      std::size_t p = r;
      while (p < target && rows[p][c] == 0) ++p;
      if (p == target) continue;
      if (c == phi) {
        consistent = false;
        break;
      }
      std::swap(rows[p], rows[r]);
      const Rational inv = 1 / rows[r][c];
      for (auto& x : rows[r]) x *= inv;
      for (std::size_t i = 0; i < target; ++i) {
        if (i == r || rows[i][c] == 0) continue;
        const Rational u = rows[i][c];
        for (int k = c; k <= phi; ++k) rows[i][k] -= u * rows[r][k];
      }
      pivot_col.push_back(c);
      ++r;
    }
    if (!consistent) continue;
    std::vector<Rational> coords(phi, 0);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) coords[pivot_col[i]] = rows[i][phi];
    BigInt common = 1;
    for (const auto& x : coords) common = lcm(common, BigInt(x.get_den()));
    std::vector<BigInt> numerators;
    for (const auto& x : coords) numerators.push_back(BigInt(x * common));
    return from_coordinates(d, std::move(numerators), common);
  }
  return *this;
}

Cyclotomic Cyclotomic::galois(long long k) const {
  const int n = conductor_;
  long long kk = k % n;
  if (kk < 0) kk += n;
  if (std::gcd(static_cast<long long>(n), kk) != 1 && n > 1)
    fail(ErrorKind::InvalidArgument, "Galois exponent not coprime to conductor");
  std::vector<BigInt> by_exponent(n, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) by_exponent[(i * kk) % n] += num_[i];
  Cyclotomic c;
  c.conductor_ = n;
  c.num_ = reduce(n, by_exponent);
  c.den_ = den_;
  c.normalize();
  return c;
}

Cyclotomic Cyclotomic::conj() const { return galois(conductor_ - 1 == 0 ? 1 : conductor_ - 1); }

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const int m = lcm_int(conductor_, o.conductor_);
  Cyclotomic a = embedded(m);
  const Cyclotomic b = o.embedded(m);
  for (std::size_t i = 0; i < a.num_.size(); ++i) a.num_[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
  a.den_ *= b.den_;
  a.normalize();
  return *this = std::move(a);
}

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic out = a;
  for (auto& x : out.num_) x = -x;
  return out;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  const int m = lcm_int(conductor_, o.conductor_);
  const Cyclotomic a = embedded(m);
  const Cyclotomic b = o.embedded(m);
  std::vector<BigInt> by_exponent(m, 0);
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j) {
      if (b.num_[j] == 0) continue;
      by_exponent[(i + j) % m] += a.num_[i] * b.num_[j];
    }
  }
  Cyclotomic c;
  c.conductor_ = m;
  c.num_ = reduce(m, by_exponent);
  c.den_ = a.den_ * b.den_;
  c.normalize();
  return *this = std::move(c);
}

Cyclotomic Cyclotomic::divided_by(const Rational& r) const {
  if (r == 0) fail(ErrorKind::InvalidArgument, "division by zero");
  Cyclotomic c = *this;
  for (auto& x : c.num_) x *= r.get_den();
  c.den_ *= r.get_num();
  c.normalize();
  return c;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.den_ == b.den_ && a.num_ == b.num_;
  const int m = std::lcm(a.conductor_, b.conductor_);
  const Cyclotomic x = a.embedded(m), y = b.embedded(m);
  return x.den_ == y.den_ && x.num_ == y.num_;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  const double d = den_.get_d();
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    const double angle = 2 * std::numbers::pi * static_cast<double>(i) / conductor_;
    z += num_[i].get_d() / d * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  const std::string z = "z" + std::to_string(conductor_);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    Rational c = make_rational(num_[i], den_);
    const bool negative = c < 0;
    if (negative) c = -c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (i == 0) {
      s += c.get_str();
      continue;
    }
    if (c != 1) s += c.get_str() + "*";
    s += z;
    if (i != 1) s += "^" + std::to_string(i);
  }
  return s;
}

}  // namespace coxlab
