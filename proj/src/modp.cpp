#include "coxlab/modp.hpp"

#include <stdexcept>
#include <utility>

namespace coxlab::modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> charpoly(Matrix a, std::uint64_t p) {
  const std::size_t n = a.size();
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 <= n; ++j) {
    std::size_t pivot = j + 1;
    while (pivot < n && a[pivot][j] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != j + 1) {
      std::swap(a[pivot], a[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(a[r][pivot], a[r][j + 1]);
    }
    const std::uint64_t h = inv(a[j + 1][j], p);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (a[i][j] == 0) continue;
      const std::uint64_t u = mul(a[i][j], h, p);
      // row_i -= u row_{j+1}; col_{j+1} += u col_i
      for (std::size_t c = 0; c < n; ++c) a[i][c] = (a[i][c] + p - mul(u, a[j + 1][c], p)) % p;
      for (std::size_t r = 0; r < n; ++r) a[r][j + 1] = (a[r][j + 1] + mul(u, a[r][i], p)) % p;
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{k=i+1}^{m} h_{k,k-1}) p_{i-1}
  std::vector<std::vector<std::uint64_t>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    auto& cur = polys[m];
    cur.assign(m + 1, 0);
    const auto& prev = polys[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] = (cur[k + 1] + prev[k]) % p;
      cur[k] = (cur[k] + p - mul(a[m - 1][m - 1], prev[k], p)) % p;
    }
    std::uint64_t t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = mul(t, a[i][i - 1], p);
      const std::uint64_t coef = mul(a[i - 1][m - 1], t, p);
      if (coef == 0) continue;
      const auto& q = polys[i - 1];
      for (std::size_t k = 0; k < q.size(); ++k) cur[k] = (cur[k] + p - mul(coef, q[k], p)) % p;
    }
  }
  return polys[n];
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] % p == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    const std::uint64_t h = inv(a[r][c], p);
    for (auto& x : a[r]) x = mul(x, h, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t u = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] = (a[i][k] + p - mul(u, a[r][k], p)) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> nullspace(Matrix a, std::uint64_t p) {
  if (a.empty()) return {};
  const std::size_t cols = a[0].size();
  const auto pivots = rref(a, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - a[r][free] % p) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(Matrix a, std::uint64_t p) { return rref(a, p).size(); }

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    factors.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto f : factors)
      if (pow(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::domain_error("no primitive root");
}

}  // namespace coxlab::modp
