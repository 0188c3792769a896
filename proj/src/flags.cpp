#include "coxlab/flags.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "coxlab/error.hpp"
#include "coxlab/weyl_enum.hpp"

namespace coxlab {

namespace {

FieldMatrix stack(const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

FieldMatrix echelon(const Field& f, FieldMatrix m) {
  rref(f, m);
  return m;
}

std::vector<int> pivot_columns(const FieldMatrix& m) {
  std::vector<int> pivots;
  for (const auto& row : m) {
    const auto it = std::find_if(row.begin(), row.end(), [](FieldElem x) { return x != 0; });
    pivots.push_back(static_cast<int>(it - row.begin()));
  }
  return pivots;
}

FieldMatrix transpose(const FieldMatrix& m) {
  if (m.empty()) return {};
  FieldMatrix out(m[0].size(), FieldVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

// g v for a column vector v.
FieldVector apply(const Field& f, const FieldMatrix& g, const FieldVector& v) {
  FieldVector out(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (g[i][j] != 0 && v[j] != 0) out[i] = f.add(out[i], f.mul(g[i][j], v[j]));
  return out;
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Representatives of the lines of V / W whose entries vanish on the pivot
// columns of W and whose first nonzero entry is 1.
template <typename Visit>
void for_each_quotient_line(const Field& f, int n, const FieldMatrix& w, Visit&& visit) {
  std::vector<bool> pivot(n, false);
  for (int c : pivot_columns(w)) pivot[c] = true;
  std::vector<int> free;
  for (int c = 0; c < n; ++c)
    if (!pivot[c]) free.push_back(c);
  const std::uint32_t q = f.size();
  for (std::size_t lead = 0; lead < free.size(); ++lead) {
    const std::size_t tail = free.size() - lead - 1;
    std::vector<std::uint32_t> digits(tail, 0);
    for (;;) {
      FieldVector v(n, 0);
      v[free[lead]] = 1;
      for (std::size_t k = 0; k < tail; ++k) v[free[lead + 1 + k]] = digits[k];
      visit(v);
      std::size_t k = 0;
      while (k < tail && ++digits[k] == q) digits[k++] = 0;
      if (k == tail) break;
    }
  }
}

void extend(const Field& f, int n, const SymplecticForm* form, std::vector<FieldMatrix>& chain,
            std::vector<Flag>& out) {
  const int i = static_cast<int>(chain.size());
  const int stop = form ? n / 2 : n - 1;
  if (i == stop) {
    Flag flag{n, chain};
    if (form) {
      const int half = n / 2;
      for (int j = 1; j < half; ++j) flag.subspaces.push_back(form->perp(f, chain[half - j - 1]));
    }
    out.push_back(std::move(flag));
    return;
  }
  const FieldMatrix last = i == 0 ? FieldMatrix{} : chain.back();
  for_each_quotient_line(f, n, last, [&](const FieldVector& v) {
    if (form) {
      for (const auto& row : last)
        if (form->pair(f, row, v) != 0) return;
    }
    FieldMatrix next = last;
    next.push_back(v);
    chain.push_back(echelon(f, std::move(next)));
    extend(f, n, form, chain, out);
    chain.pop_back();
  });
}

// Exact rank and kernel over Q of a small integer matrix.
struct RationalKernel {
  std::size_t rank = 0;
  std::vector<std::vector<Rational>> basis;
};

RationalKernel rational_kernel(std::vector<std::vector<Rational>> m, std::size_t cols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational h = 1 / m[r][c];
    for (auto& x : m[r]) x *= h;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational u = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= u * m[r][k];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  RationalKernel out;
  out.rank = r;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
    out.basis.push_back(std::move(v));
  }
  return out;
}

FieldMatrix random_invertible(const Field& f, int n, std::mt19937_64& rng) {
  for (;;) {
    FieldMatrix g(n, FieldVector(n));
    for (auto& row : g)
      for (auto& x : row) x = static_cast<FieldElem>(rng() % f.size());
    if (rank(f, g) == static_cast<std::size_t>(n)) return g;
  }
}

}  // namespace

FieldMatrix Flag::subspace(int i) const {
  if (i < 0 || i > dimension) throw std::out_of_range("flag index");
  if (i == 0) return {};
  if (i == dimension) {
    FieldMatrix id(dimension, FieldVector(dimension, 0));
    for (int k = 0; k < dimension; ++k) id[k][k] = 1;
    return id;
  }
  return subspaces[i - 1];
}

SymplecticForm::SymplecticForm(int half_dimension) : half_(half_dimension) {
  if (half_dimension < 1) fail(ErrorKind::InvalidArgument, "symplectic space needs positive dimension");
}

int SymplecticForm::gram(int i, int j) const {
  const int m = dimension();
  if (j != m - 1 - i) return 0;
  return i < half_ ? 1 : -1;
}

FieldElem SymplecticForm::pair(const Field& f, const FieldVector& x, const FieldVector& y) const {
  const int m = dimension();
  FieldElem s = 0;
  for (int i = 0; i < m; ++i) {
    const FieldElem t = f.mul(x[i], y[m - 1 - i]);
    s = i < half_ ? f.add(s, t) : f.sub(s, t);
  }
  return s;
}

FieldMatrix SymplecticForm::perp(const Field& f, const FieldMatrix& basis) const {
  const int m = dimension();
  if (basis.empty()) return Flag{m, {}}.subspace(m);
  FieldMatrix conditions(basis.size(), FieldVector(m, 0));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (int i = 0; i < m; ++i)
      conditions[k][m - 1 - i] = i < half_ ? basis[k][i] : f.neg(basis[k][i]);
  return echelon(f, nullspace(f, conditions));
}

bool SymplecticForm::is_compatible(const Field& f, const Flag& flag) const {
  const int m = dimension();
  if (flag.dimension != m) return false;
  for (int i = 1; i < m; ++i)
    if (flag.subspace(i) != perp(f, flag.subspace(m - i))) return false;
  return true;
}

BigInt flag_count(std::uint64_t q, int n, bool symplectic) {
  BigInt total = 1;
  const BigInt bq(static_cast<unsigned long>(q));
  const int terms = symplectic ? n / 2 : n;
  for (int i = 1; i <= terms; ++i) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), bq.get_mpz_t(), static_cast<unsigned long>(symplectic ? 2 * i : i));
    total *= (power - 1) / (bq - 1);
  }
  return total;
}

std::vector<Flag> enumerate_flags(const Field& f, int n, const SymplecticForm* form, std::size_t max_count) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "dimension must be positive");
  if (form && form->dimension() != n) fail(ErrorKind::DimensionMismatch, "form and space differ in dimension");
  const BigInt expected = flag_count(f.size(), n, form != nullptr);
  if (expected > BigInt(static_cast<unsigned long>(max_count)))
    fail(ErrorKind::TooLarge, expected.get_str() + " flags exceed the bound " + std::to_string(max_count));
  std::vector<Flag> out;
  out.reserve(expected.get_ui());
  std::vector<FieldMatrix> chain;
  extend(f, n, form, chain, out);
  if (BigInt(static_cast<unsigned long>(out.size())) != expected)
    throw std::logic_error("flag enumeration produced the wrong count");
  std::sort(out.begin(), out.end());
  return out;
}

Flag flag_from_basis(const Field& f, const FieldMatrix& basis) {
  const int n = static_cast<int>(basis.size());
  if (rank(f, basis) != basis.size()) fail(ErrorKind::InvalidArgument, "basis is not invertible");
  Flag flag{n, {}};
  for (int i = 1; i < n; ++i) flag.subspaces.push_back(echelon(f, FieldMatrix(basis.begin(), basis.begin() + i)));
  return flag;
}

Flag transform(const Field& f, const FieldMatrix& g, const Flag& flag) {
  if (static_cast<int>(g.size()) != flag.dimension) fail(ErrorKind::DimensionMismatch, "matrix size");
  const FieldMatrix gt = transpose(g);
  Flag out{flag.dimension, {}};
  for (const auto& v : flag.subspaces) out.subspaces.push_back(echelon(f, multiply(f, v, gt)));
  return out;
}

Flag frobenius(const Field& f, const Flag& flag, long long times) {
  Flag out = flag;
  for (auto& v : out.subspaces)
    for (auto& row : v)
      for (auto& x : row) x = f.frobenius(x, times);
  return out;
}

std::vector<std::vector<int>> intersection_dimensions(const Field& f, const Flag& a, const Flag& b) {
  if (a.dimension != b.dimension) fail(ErrorKind::DimensionMismatch, "flags live in different spaces");
  const int n = a.dimension;
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == 0 || j == 0) continue;
      if (i == n || j == n) {
        d[i][j] = std::min(i, j);
        continue;
      }
      d[i][j] = i + j - static_cast<int>(rank(f, stack(a.subspace(i), b.subspace(j))));
    }
  return d;
}

BigPermutation relative_position(const Field& f, const Flag& a, const Flag& b, const SymplecticForm* form) {
  if (a.dimension != b.dimension) fail(ErrorKind::DimensionMismatch, "flags live in different spaces");
  if (form) {
    if (form->dimension() != a.dimension) fail(ErrorKind::DimensionMismatch, "form and flags differ in dimension");
    if (!form->is_compatible(f, a) || !form->is_compatible(f, b))
      fail(ErrorKind::NotSymplectic, "flag is not self-dual for the symplectic form");
  }
  const int n = a.dimension;
  const auto d = intersection_dimensions(f, a, b);
  BigPermutation w{std::vector<int>(n, 0)};
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      if (d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1] == 1) w.images[j - 1] = i;
  return w;
}

std::optional<std::pair<int, int>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int s = 0;
  while (q % p == 0) {
    q /= p;
    ++s;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<int>(p), s);
}

std::string to_string(GroupType type) { return type == GroupType::GL ? "GL" : "Sp"; }

CoxeterSpec weyl_type(GroupType type, int n) {
  if (type == GroupType::GL) {
    if (n < 2) fail(ErrorKind::UnsupportedSpec, "GL_n needs n >= 2");
    return {Family::A, n - 1};
  }
  if (n < 1) fail(ErrorKind::UnsupportedSpec, "Sp_2n needs n >= 1");
  return n == 1 ? CoxeterSpec{Family::A, 1} : CoxeterSpec{Family::C, n};
}

namespace {

struct FlagSetup {
  std::shared_ptr<const Field> field;
  int frobenius_steps = 0;  // F = x -> x^q = frobenius by s
  int ambient = 0;
  std::optional<SymplecticForm> form;
  std::vector<Flag> flags;
};

FlagSetup setup(GroupType type, int n, std::uint64_t q, int m, std::size_t max_flags) {
  const auto pp = prime_power(q);
  if (!pp) fail(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  if (m < 1) fail(ErrorKind::InvalidArgument, "m must be positive");
  FlagSetup s;
  s.ambient = type == GroupType::GL ? n : 2 * n;
  if (type == GroupType::Sp) s.form.emplace(n);
  BigInt big_q = 1;
  for (int i = 0; i < m; ++i) big_q *= static_cast<unsigned long>(q);
  if (big_q > kMaxFieldSize) fail(ErrorKind::TooLarge, "GF(q^m) exceeds 2^16 elements");
  const BigInt count = flag_count(big_q.get_ui(), s.ambient, type == GroupType::Sp);
  if (count > BigInt(static_cast<unsigned long>(max_flags)))
    fail(ErrorKind::TooLarge, count.get_str() + " flags exceed the bound " + std::to_string(max_flags));
  s.field = Field::make(pp->first, pp->second * m);
  s.frobenius_steps = pp->second;
  s.flags = enumerate_flags(*s.field, s.ambient, s.form ? &*s.form : nullptr, max_flags);
  return s;
}

}  // namespace

DLCountReport dl_piece_counts(GroupType type, int n, std::uint64_t q, int m, std::size_t max_flags) {
  const CoxeterSpec spec = weyl_type(type, n);
  const FlagSetup s = setup(type, n, q, m, max_flags);
  const auto group = EnumeratedGroup::build(spec);

  DLCountReport report;
  report.type = type;
  report.n = n;
  report.q = q;
  report.m = m;
  report.total = s.flags.size();
  std::map<BigPermutation, std::size_t> index;
  for (ElementId x = 0; x < group->size(); ++x) {
    PieceCount row;
    row.element = to_big_permutation(group->element(x));
    row.word = group->word(x);
    row.length = group->length(x);
    report.rows.push_back(std::move(row));
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const PieceCount& a, const PieceCount& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.element < b.element;
  });
  for (std::size_t i = 0; i < report.rows.size(); ++i) index.emplace(report.rows[i].element, i);

  for (const Flag& b : s.flags) {
    const BigPermutation w = relative_position(*s.field, b, frobenius(*s.field, b, s.frobenius_steps));
    auto it = index.find(w);
    if (it == index.end()) throw std::logic_error("relative position outside the Weyl group: " + w.one_line());
    ++report.rows[it->second].count;
  }
  std::uint64_t sum = 0;
  for (const auto& row : report.rows) sum += row.count;
  if (sum != report.total) throw std::logic_error("piece counts do not add up to the flag count");
  return report;
}

CoxeterConditionReport coxeter_condition_check(int n, std::uint64_t q, int m, std::size_t max_flags) {
  const CoxeterSpec spec = weyl_type(GroupType::GL, n);
  const BigPermutation coxeter = to_big_permutation(WeylGroup::build(spec)->coxeter_element());
  const FlagSetup s = setup(GroupType::GL, n, q, m, max_flags);
  const Field& f = *s.field;
  CoxeterConditionReport report;
  for (const Flag& b : s.flags) {
    const Flag fb = frobenius(f, b, s.frobenius_steps);
    bool chain = true;
    for (int i = 1; i < n && chain; ++i) {
      if (fb.subspace(i) == b.subspace(i)) chain = false;
      else if (rank(f, stack(b.subspace(i + 1), fb.subspace(i))) != static_cast<std::size_t>(i + 1)) chain = false;
    }
    const bool position = relative_position(f, b, fb) == coxeter;
    report.chain_condition += chain;
    report.coxeter_position += position;
    report.both += chain && position;
  }
  report.equal = report.both == report.chain_condition && report.both == report.coxeter_position;
  return report;
}

DrinfeldReport drinfeld_count(std::uint64_t q, int m, std::uint64_t seed, int sl2_samples) {
  const auto pp = prime_power(q);
  if (!pp) fail(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  if (m < 1) fail(ErrorKind::InvalidArgument, "m must be positive");
  BigInt big_q = 1;
  for (int i = 0; i < m; ++i) big_q *= static_cast<unsigned long>(q);
  if (big_q > kMaxFieldSize) fail(ErrorKind::TooLarge, "GF(q^m) exceeds 2^16 elements");
  const auto field = Field::make(pp->first, pp->second * m);
  const Field& f = *field;
  const int steps = pp->second;
  const std::uint32_t size = f.size();

  // With y = x t the equation becomes t - t^q = x^{-(q+1)}.
  std::vector<std::vector<FieldElem>> preimages(size);
  for (FieldElem t = 0; t < size; ++t) preimages[f.sub(t, f.frobenius(t, steps))].push_back(t);
  std::vector<std::pair<FieldElem, FieldElem>> points;
  for (FieldElem x = 1; x < size; ++x) {
    const FieldElem c = f.inv(f.pow(x, static_cast<long long>(q + 1)));
    for (FieldElem t : preimages[c]) points.emplace_back(x, f.mul(x, t));
  }
  std::sort(points.begin(), points.end());
  auto contains = [&](FieldElem x, FieldElem y) {
    return std::binary_search(points.begin(), points.end(), std::make_pair(x, y));
  };

  DrinfeldReport report;
  report.q = q;
  report.m = m;
  report.count = points.size();
  report.divisible = report.count % (q + 1) == 0;
  report.torus_in_field = (size - 1) % (q + 1) == 0;
  if (report.torus_in_field) {
    std::vector<FieldElem> torus;
    for (std::uint64_t k = 0; k <= q; ++k)
      torus.push_back(f.exp(static_cast<long long>(k * ((size - 1) / (q + 1)))));
    std::vector<bool> seen(points.size(), false);
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; ++i) {
      if (seen[i]) continue;
      std::vector<std::pair<FieldElem, FieldElem>> orbit;
      for (FieldElem lambda : torus) {
        const auto image = std::make_pair(f.mul(lambda, points[i].first), f.mul(lambda, points[i].second));
        const auto it = std::lower_bound(points.begin(), points.end(), image);
        if (it == points.end() || *it != image) {
          ok = false;
          break;
        }
        seen[it - points.begin()] = true;
        orbit.push_back(image);
      }
      std::sort(orbit.begin(), orbit.end());
      if (std::unique(orbit.begin(), orbit.end()) - orbit.begin() != static_cast<long>(q + 1)) ok = false;
    }
    report.torus_free = ok;
  }

  std::vector<FieldElem> base;
  for (FieldElem x = 0; x < size; ++x)
    if (f.frobenius(x, steps) == x) base.push_back(x);
  std::mt19937_64 rng(seed);
  auto pick = [&] { return base[rng() % base.size()]; };
  report.sl2_samples = sl2_samples;
  report.sl2_invariant = true;
  for (int k = 0; k < sl2_samples; ++k) {
    FieldElem a, b, c, d;
    do {
      a = pick();
      b = pick();
      c = pick();
      d = pick();
    } while (f.sub(f.mul(a, d), f.mul(b, c)) != 1);
    for (const auto& [x, y] : points)
      if (!contains(f.add(f.mul(a, x), f.mul(b, y)), f.add(f.mul(c, x), f.mul(d, y)))) {
        report.sl2_invariant = false;
        break;
      }
  }
  return report;
}

std::string to_string(FlagFunctionMode mode) { return mode == FlagFunctionMode::Modular ? "modular" : "rational"; }

FlagFunctionReport brauer_space_dim(int n, int p, FlagFunctionMode mode, std::uint64_t seed, std::size_t max_flags) {
  const auto field = Field::make(p, 1);
  const Field& f = *field;
  const std::vector<Flag> flags = enumerate_flags(f, n, nullptr, max_flags);
  const std::size_t count = flags.size();
  auto index_of = [&](const Flag& b) {
    return static_cast<std::size_t>(std::lower_bound(flags.begin(), flags.end(), b) - flags.begin());
  };

  // Completions of each almost complete flag (V_i removed).
  std::map<std::pair<int, std::vector<FieldMatrix>>, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < count; ++k)
    for (int i = 1; i < n; ++i) {
      auto rest = flags[k].subspaces;
      rest.erase(rest.begin() + (i - 1));
      groups[{i, std::move(rest)}].push_back(k);
    }

  // The value on a flag is a multiple of the echelon vector of its line.
  auto line = [&](std::size_t k) -> const FieldVector& { return flags[k].subspaces[0][0]; };

  FlagFunctionReport report;
  report.n = n;
  report.p = p;
  report.mode = mode;
  report.flags = count;
  if (mode == FlagFunctionMode::Modular) {
    report.expected = 1;
    for (int i = 1; i < n; ++i) report.expected *= BigInt(static_cast<unsigned long>(ipow(p, i) - 1));
  } else {
    report.expected = BigInt(static_cast<unsigned long>(ipow(p, n * (n - 1) / 2)));
  }
  if (n == 1) {
    report.dimension = 1;
    report.stable = true;
    return report;
  }

  std::mt19937_64 rng(seed);
  constexpr int kGroupSamples = 20, kVectorSamples = 5;
  report.stability_samples = kGroupSamples * kVectorSamples;
  report.stable = true;

  // g^{-1} B for each flag, and for the modular case the scalar lambda with
  // g v_{g^{-1} B} = lambda v_B.
  struct Action {
    std::vector<std::size_t> source;
    std::vector<FieldElem> scale;
  };
  auto action = [&](const FieldMatrix& g) {
    const FieldMatrix g_inv = inverse(f, g);
    Action a;
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t src = index_of(transform(f, g_inv, flags[k]));
      a.source.push_back(src);
      const FieldVector image = apply(f, g, line(src));
      const auto lead = std::find(line(k).begin(), line(k).end(), FieldElem{1}) - line(k).begin();
      a.scale.push_back(image[lead]);
    }
    return a;
  };

  if (mode == FlagFunctionMode::Modular) {
    FieldMatrix equations;
    for (const auto& [key, members] : groups)
      for (int c = 0; c < n; ++c) {
        FieldVector row(count, 0);
        for (std::size_t k : members) row[k] = line(k)[c];
        equations.push_back(std::move(row));
      }
    report.equations = equations.size();
    const auto kernel = nullspace(f, equations);
    report.dimension = kernel.size();
    if (kernel.empty()) return report;
    for (int gs = 0; gs < kGroupSamples && report.stable; ++gs) {
      const Action a = action(random_invertible(f, n, rng));
      for (int vs = 0; vs < kVectorSamples && report.stable; ++vs) {
        FieldVector c(count, 0);
        for (const auto& b : kernel) {
          const FieldElem coef = static_cast<FieldElem>(rng() % f.size());
          for (std::size_t k = 0; k < count; ++k) c[k] = f.add(c[k], f.mul(coef, b[k]));
        }
        FieldVector moved(count);
        for (std::size_t k = 0; k < count; ++k) moved[k] = f.mul(a.scale[k], c[a.source[k]]);
        for (const auto& row : equations) {
          FieldElem s = 0;
          for (std::size_t k = 0; k < count; ++k) s = f.add(s, f.mul(row[k], moved[k]));
          if (s != 0) {
            report.stable = false;
            break;
          }
        }
      }
    }
    return report;
  }

  std::vector<std::vector<Rational>> equations;
  for (const auto& [key, members] : groups) {
    std::vector<Rational> row(count, 0);
    for (std::size_t k : members) row[k] = 1;
    equations.push_back(std::move(row));
  }
  report.equations = equations.size();
  const RationalKernel kernel = rational_kernel(equations, count);
  report.dimension = kernel.basis.size();
  if (kernel.basis.empty()) return report;
  for (int gs = 0; gs < kGroupSamples && report.stable; ++gs) {
    const Action a = action(random_invertible(f, n, rng));
    for (int vs = 0; vs < kVectorSamples && report.stable; ++vs) {
      std::vector<Rational> c(count, 0);
      for (const auto& b : kernel.basis) {
        const long coef = static_cast<long>(rng() % 19) - 9;
        for (std::size_t k = 0; k < count; ++k) c[k] += coef * b[k];
      }
      for (const auto& row : equations) {
        Rational s = 0;
        for (std::size_t k = 0; k < count; ++k) s += row[k] * c[a.source[k]];
        if (s != 0) {
          report.stable = false;
          break;
        }
      }
    }
  }
  return report;
}

BrauerCharacterReport brauer_character(const Field& f, const FieldMatrix& g) {
  const std::size_t n = g.size();
  for (const auto& row : g)
    if (row.size() != n) fail(ErrorKind::DimensionMismatch, "matrix is not square");
  for (const auto& row : g)
    for (FieldElem x : row)
      if (x >= f.size()) fail(ErrorKind::InvalidArgument, "entry outside the field");
  BrauerCharacterReport report;
  if (n == 0) return report;
  if (inverse(f, g).empty()) fail(ErrorKind::InvalidArgument, "matrix is singular");
  const std::vector<FieldElem> cp = charpoly(f, g);
  const int p = f.characteristic(), s = f.degree();

  for (int k = 1;; ++k) {
    std::uint64_t size = 1;
    for (int i = 0; i < s * k; ++i) {
      size *= static_cast<std::uint64_t>(p);
      if (size > kMaxFieldSize)
        fail(ErrorKind::SplittingFieldTooLarge, "eigenvalues need a field larger than 2^16 elements");
    }
    const auto big_ptr = Field::make(p, s * k);
    const Field& big = *big_ptr;
    // Image of the generator of the base field: the root of its defining
    // polynomial with the smallest logarithm.
    FieldElem root = 0;
    if (s > 1) {
      const auto& poly = f.defining_polynomial();
      for (std::uint32_t e = 0; e + 1 < big.size(); ++e) {
        const FieldElem x = big.exp(e);
        FieldElem v = 0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = big.add(big.mul(v, x), big.from_int(*it));
        if (v == 0) {
          root = x;
          break;
        }
      }
    }
    auto embed = [&](FieldElem x) {
      if (s == 1) return big.from_int(x);
      FieldElem out = 0, power = 1;
      for (int i = 0; i < s; ++i) {
        out = big.add(out, big.mul(big.from_int(x % p), power));
        x /= p;
        power = big.mul(power, root);
      }
      return out;
    };
    std::vector<FieldElem> poly;
    for (FieldElem c : cp) poly.push_back(embed(c));

    std::vector<std::uint32_t> logs;
    for (std::uint32_t e = 0; e + 1 < big.size() && poly.size() > 1; ++e) {
      const FieldElem lambda = big.exp(e);
      for (;;) {
        // Synthetic division by (x - lambda).
        std::vector<FieldElem> quotient(poly.size() - 1);
        FieldElem carry = 0;
        for (std::size_t i = poly.size(); i-- > 1;) {
          carry = big.add(poly[i], big.mul(carry, lambda));
          quotient[i - 1] = carry;
        }
        const FieldElem remainder = big.add(poly[0], big.mul(carry, lambda));
        if (remainder != 0) break;
        poly = std::move(quotient);
        logs.push_back(e);
        if (poly.size() == 1) break;
      }
    }
    if (logs.size() != n) continue;

    const std::uint64_t order = big.size() - 1;
    std::uint64_t conductor = 1;
    for (std::uint32_t e : logs) conductor = std::lcm(conductor, order / std::gcd<std::uint64_t>(order, e));
    Cyclotomic value;
    for (std::uint32_t e : logs)
      value += Cyclotomic::root_of_unity(static_cast<int>(conductor),
                                         static_cast<long long>(e * conductor / order));
    report.splitting_degree = k;
    report.eigenvalues = std::move(logs);
    report.value = std::move(value);
    return report;
  }
}

}  // namespace coxlab
