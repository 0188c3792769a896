#include "coxlab/gf.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "coxlab/error.hpp"
#include "coxlab/modp.hpp"

namespace coxlab {

namespace {

constexpr std::uint32_t kAddTableLimit = 1024;

std::vector<int> digits(std::uint32_t x, int p, int s) {
  std::vector<int> d(s);
  for (int i = 0; i < s; ++i) {
    d[i] = static_cast<int>(x % p);
    x /= p;
  }
  return d;
}

std::uint32_t encode(const std::vector<int>& d, int p) {
  std::uint32_t x = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) x = x * p + static_cast<std::uint32_t>(*it);
  return x;
}

// Powers of x modulo the monic polynomial `poly`; empty unless x has
// multiplicative order exactly p^s - 1.
std::vector<FieldElem> powers_if_primitive(const std::vector<int>& poly, int p, int s, std::uint32_t q) {
  std::vector<FieldElem> exp(q - 1);
  std::vector<int> cur(s, 0);
  cur[0] = 1;
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    const std::uint32_t e = encode(cur, p);
    if (i > 0 && e == 1) return {};
    exp[i] = e;
    // cur *= x mod poly
    const int top = cur[s - 1];
    for (int j = s - 1; j >= 1; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    for (int j = 0; j < s; ++j) cur[j] = ((cur[j] - top * poly[j]) % p + p) % p;
  }
  if (encode(cur, p) != 1) return {};
  return exp;
}

}  // namespace

std::shared_ptr<const Field> Field::make(int p, int s) {
  if (p < 2 || !modp::is_prime(static_cast<std::uint64_t>(p)))
    fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (s < 1) fail(ErrorKind::InvalidArgument, "extension degree must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < s; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxFieldSize)
      fail(ErrorKind::TooLarge, "GF(" + std::to_string(p) + "^" + std::to_string(s) + ") exceeds 2^16 elements");
  }
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const Field>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({p, s}); it != cache.end()) return it->second;
  }
  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->s_ = s;
  f->q_ = static_cast<std::uint32_t>(q);
  for (std::uint32_t low = 0; low < f->q_; ++low) {
    std::vector<int> poly = digits(low, p, s);
    poly.push_back(1);
    if (poly[0] == 0) continue;
    auto exp = powers_if_primitive(poly, p, s, f->q_);
    if (exp.empty()) continue;
    f->poly_ = std::move(poly);
    f->exp_ = std::move(exp);
    break;
  }
  f->log_.assign(f->q_, 0);
  for (std::uint32_t i = 0; i < f->q_ - 1; ++i) f->log_[f->exp_[i]] = i;
  if (p != 2 && s > 1 && f->q_ <= kAddTableLimit) {
    f->add_table_.resize(static_cast<std::size_t>(f->q_) * f->q_);
    for (std::uint32_t a = 0; a < f->q_; ++a) {
      const auto da = digits(a, p, s);
      for (std::uint32_t b = 0; b < f->q_; ++b) {
        auto db = digits(b, p, s);
        for (int i = 0; i < s; ++i) db[i] = (db[i] + da[i]) % p;
        f->add_table_[a * f->q_ + b] = static_cast<std::uint16_t>(encode(db, p));
      }
    }
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(std::make_pair(p, s), f);
  return it->second;
}

FieldElem Field::from_int(long long k) const {
  long long r = k % p_;
  if (r < 0) r += p_;
  return static_cast<FieldElem>(r);
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
  if (p_ == 2) return a ^ b;
  if (s_ == 1) return (a + b) % static_cast<std::uint32_t>(p_);
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  std::uint32_t out = 0, scale = 1;
  const auto P = static_cast<std::uint32_t>(p_);
  while (a || b) {
    out += ((a % P + b % P) % P) * scale;
    a /= P;
    b /= P;
    scale *= P;
  }
  return out;
}

FieldElem Field::neg(FieldElem a) const {
  if (p_ == 2) return a;
  const auto P = static_cast<std::uint32_t>(p_);
  if (s_ == 1) return (P - a) % P;
  std::uint32_t out = 0, scale = 1;
  while (a) {
    out += ((P - a % P) % P) * scale;
    a /= P;
    scale *= P;
  }
  return out;
}

FieldElem Field::inv(FieldElem a) const {
  if (a == 0) fail(ErrorKind::InvalidArgument, "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FieldElem Field::exp(long long k) const {
  const long long n = q_ - 1;
  long long r = k % n;
  if (r < 0) r += n;
  return exp_[r];
}

FieldElem Field::pow(FieldElem a, long long k) const {
  if (a == 0) {
    if (k == 0) return 1;
    if (k < 0) fail(ErrorKind::InvalidArgument, "negative power of zero");
    return 0;
  }
  const long long n = q_ - 1;
  long long e = (static_cast<long long>(log_[a]) * (k % n)) % n;
  return exp(e);
}

FieldElem Field::frobenius(FieldElem x, long long times) const {
  long long t = times % s_;
  if (t < 0) t += s_;
  if (x == 0 || t == 0) return x;
  long long k = 1;
  for (long long i = 0; i < t; ++i) k *= p_;
  return pow(x, k);
}

std::string Field::to_string(FieldElem x) const {
  if (s_ == 1) return std::to_string(x);
  if (x == 0) return "0";
  const auto d = digits(x, p_, s_);
  std::string out;
  for (int i = s_ - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]) + "*";
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Linear algebra

std::vector<int> rref(const Field& f, FieldMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    const FieldElem h = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, h);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const FieldElem u = f.neg(m[i][c]);
      for (std::size_t k = c; k < cols; ++k)
        if (m[r][k] != 0) m[i][k] = f.add(m[i][k], f.mul(u, m[r][k]));
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);
  return pivots;
}

std::size_t rank(const Field& f, FieldMatrix m) { return rref(f, m).size(); }

std::vector<FieldVector> nullspace(const Field& f, FieldMatrix m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  const auto pivots = rref(f, m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<FieldVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    FieldVector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

FieldMatrix multiply(const Field& f, const FieldMatrix& a, const FieldMatrix& b) {
  const std::size_t n = a.size(), inner = b.size(), m = b.empty() ? 0 : b[0].size();
  FieldMatrix out(n, FieldVector(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (b[k][j] != 0) out[i][j] = f.add(out[i][j], f.mul(a[i][k], b[k][j]));
    }
  return out;
}

FieldMatrix inverse(const Field& f, const FieldMatrix& m) {
  const std::size_t n = m.size();
  FieldMatrix aug(n, FieldVector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) fail(ErrorKind::DimensionMismatch, "matrix is not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  const auto pivots = rref(f, aug);
  if (pivots.size() < n || pivots[n - 1] != static_cast<int>(n - 1)) return {};
  FieldMatrix out(n, FieldVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

std::vector<FieldElem> charpoly(const Field& f, FieldMatrix a) {
  const std::size_t n = a.size();
  for (std::size_t j = 0; j + 2 <= n; ++j) {
    std::size_t pivot = j + 1;
    while (pivot < n && a[pivot][j] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != j + 1) {
      std::swap(a[pivot], a[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(a[r][pivot], a[r][j + 1]);
    }
    const FieldElem h = f.inv(a[j + 1][j]);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (a[i][j] == 0) continue;
      const FieldElem u = f.mul(a[i][j], h);
      for (std::size_t c = 0; c < n; ++c) a[i][c] = f.sub(a[i][c], f.mul(u, a[j + 1][c]));
      for (std::size_t r = 0; r < n; ++r) a[r][j + 1] = f.add(a[r][j + 1], f.mul(u, a[r][i]));
    }
  }
  std::vector<std::vector<FieldElem>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    auto& cur = polys[m];
    cur.assign(m + 1, 0);
    const auto& prev = polys[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] = f.add(cur[k + 1], prev[k]);
      cur[k] = f.sub(cur[k], f.mul(a[m - 1][m - 1], prev[k]));
    }
    FieldElem t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = f.mul(t, a[i][i - 1]);
      const FieldElem coef = f.mul(a[i - 1][m - 1], t);
      if (coef == 0) continue;
      const auto& q = polys[i - 1];
      for (std::size_t k = 0; k < q.size(); ++k) cur[k] = f.sub(cur[k], f.mul(coef, q[k]));
    }
  }
  return polys[n];
}

}  // namespace coxlab
