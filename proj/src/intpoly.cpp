#include "coxlab/intpoly.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace coxlab {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& den) {
  if (den.empty() || den.back() != 1)
    throw std::invalid_argument("divide_exact: divisor must be monic");
  IntPoly rem = num;
  trim(rem);
  if (rem.size() < den.size()) {
    if (rem.empty()) return IntPoly{};
    return std::nullopt;
  }
  IntPoly quot(rem.size() - den.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    long long c = rem[k + den.size() - 1];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= c * den[j];
  }
  trim(rem);
  if (!rem.empty()) return std::nullopt;
  trim(quot);
  return quot;
}

long long evaluate(const IntPoly& p, long long x) {
  long long acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

int euler_phi(int n) {
  int result = n;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const IntPoly& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^n - 1 = prod_{d | n} Phi_d
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto it = cache.find(d);
    IntPoly phi_d;
    if (it != cache.end()) {
      phi_d = it->second;
    } else {
      // Recursion would re-enter the lock; compute the divisor chain bottom up.
      IntPoly q(d + 1, 0);
      q[0] = -1;
      q[d] = 1;
      for (int e = 1; e < d; ++e)
        if (d % e == 0) q = *divide_exact(q, cache.at(e));
      cache.emplace(d, q);
      phi_d = q;
    }
    p = *divide_exact(p, phi_d);
  }
  return cache.emplace(n, p).first->second;
}

std::optional<std::map<int, int>> cyclotomic_factorization(const IntPoly& poly) {
  IntPoly p = poly;
  trim(p);
  if (p.empty() || p.back() != 1) return std::nullopt;
  std::map<int, int> factors;
  int degree = static_cast<int>(p.size()) - 1;
  // phi(d) <= degree forces d <= 2 * degree^2 for every degree >= 1.
  int bound = std::max(2, 2 * degree * degree + 2);
  for (int d = 1; d <= bound && p.size() > 1; ++d) {
    const IntPoly& phi = cyclotomic_polynomial(d);
    if (static_cast<int>(phi.size()) - 1 > static_cast<int>(p.size()) - 1) continue;
    while (auto q = divide_exact(p, phi)) {
      ++factors[d];
      p = std::move(*q);
      if (p.size() <= 1) break;
    }
  }
  if (p.size() != 1 || p[0] != 1) return std::nullopt;
  return factors;
}

IntPoly characteristic_polynomial(const std::vector<std::vector<long long>>& m) {
  // Faddeev-LeVerrier; the divisions by k are exact over the integers.
  const std::size_t n = m.size();
  IntPoly coeff(n + 1, 0);
  coeff[n] = 1;
  std::vector<std::vector<long long>> acc(n, std::vector<long long>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // acc <- m * acc + coeff[n-k+1] * I
    std::vector<std::vector<long long>> next(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (m[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += m[i][l] * acc[l][j];
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] += coeff[n - k + 1];
    acc = std::move(next);
    long long trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += m[i][l] * acc[l][i];
    coeff[n - k] = -trace / static_cast<long long>(k);
  }
  return coeff;
}

std::string format_poly(const IntPoly& p, char var) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    long long c = p[k];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    long long a = c < 0 ? -c : c;
    if (a != 1 || k == 0) out << a;
    if (k >= 1) out << var;
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return out.str();
}

}  // namespace coxlab
