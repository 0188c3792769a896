#include "coxlab/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "coxlab/error.hpp"
#include "coxlab/modp.hpp"

namespace coxlab {

namespace {

using u64 = std::uint64_t;

// p = 1 mod e, large enough that degrees are recovered from their squares and
// that a random combination of class matrices separates the characters.
u64 choose_prime(std::size_t order, int exponent, std::size_t classes) {
  const double bound = std::max(2.0 * std::sqrt(static_cast<double>(order)), 2.0 * classes * classes);
  for (u64 k = 1;; ++k) {
    const u64 p = k * static_cast<u64>(exponent) + 1;
    if (p > bound && p > 2 && modp::is_prime(p)) return p;
  }
}

// Simultaneous eigenvectors (omega_k) of the class multiplication matrices,
// normalized so that the identity-class entry is 1.
std::vector<std::vector<u64>> central_characters(const std::vector<std::vector<std::vector<u64>>>& a,
                                                 u64 p) {
  const std::size_t r = a.size();
  std::mt19937_64 rng(0x5eed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    modp::Matrix m(r, std::vector<u64>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
      const u64 c = rng() % p;
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) m[j][k] = (m[j][k] + modp::mul(c, a[i][j][k], p)) % p;
    }
    const auto cp = modp::charpoly(m, p);
    std::vector<u64> roots;
    for (u64 x = 0; x < p && roots.size() < r; ++x) {
      u64 v = 0;
      for (auto it = cp.rbegin(); it != cp.rend(); ++it) v = (modp::mul(v, x, p) + *it) % p;
      if (v == 0) roots.push_back(x);
    }
    if (roots.size() != r) continue;
    std::vector<std::vector<u64>> out;
    bool ok = true;
    for (u64 lambda : roots) {
      modp::Matrix shifted = m;
      for (std::size_t j = 0; j < r; ++j) shifted[j][j] = (shifted[j][j] + p - lambda) % p;
      auto kernel = modp::nullspace(shifted, p);
      if (kernel.size() != 1 || kernel[0][0] == 0) {
        ok = false;
        break;
      }
      const u64 scale = modp::inv(kernel[0][0], p);
      for (auto& x : kernel[0]) x = modp::mul(x, scale, p);
      out.push_back(std::move(kernel[0]));
    }
    if (ok) return out;
  }
  throw std::logic_error("could not separate the central characters");
}

int compare_values(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto ca = a[k].coordinates(), cb = b[k].coordinates();
    for (std::size_t i = 0; i < ca.size(); ++i) {
      if (ca[i] != cb[i]) return ca[i] < cb[i] ? -1 : 1;
    }
  }
  return 0;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& group) {
  const std::size_t n = group.order();
  if (n > kMaxCharacterTableGroup)
    fail(ErrorKind::TooLarge, "character tables are limited to groups of order " +
                                  std::to_string(kMaxCharacterTableGroup));
  const auto& classes = group.classes();
  const std::size_t r = classes.size();
  CharacterTable table;
  table.exponent = group.exponent();
  for (const auto& c : classes) {
    table.representatives.push_back(c.representative);
    table.class_sizes.push_back(c.members.size());
  }
  const int e = table.exponent;
  const u64 p = choose_prime(n, e, r);

  // a[i][j][k] = #{x in C_i : x^-1 g_k in C_j}.
  std::vector<std::vector<std::vector<u64>>> a(r, std::vector<std::vector<u64>>(r, std::vector<u64>(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    const GroupElement g = table.representatives[k];
    for (GroupElement x = 0; x < n; ++x)
      ++a[group.class_of(x)][group.class_of(group.multiply(group.inverse(x), g))][k];
  }
  const auto omegas = central_characters(a, p);

  std::vector<std::size_t> inverse_class(r);
  for (std::size_t k = 0; k < r; ++k) inverse_class[k] = group.class_of(group.inverse(table.representatives[k]));

  // Power maps and orders of the representatives.
  std::vector<int> orders(r);
  std::vector<std::vector<std::size_t>> power_classes(r);
  for (std::size_t k = 0; k < r; ++k) {
    const GroupElement g = table.representatives[k];
    orders[k] = group.element_order(g);
    GroupElement x = group.identity();
    for (int l = 0; l < orders[k]; ++l) {
      power_classes[k].push_back(group.class_of(x));
      x = group.multiply(x, g);
    }
  }
  const u64 z = modp::pow(modp::primitive_root(p), (p - 1) / static_cast<u64>(e), p);

  struct Row {
    long degree;
    std::vector<Cyclotomic> values;
  };
  std::vector<Row> rows;
  for (const auto& omega : omegas) {
    u64 s = 0;
    for (std::size_t k = 0; k < r; ++k)
      s = (s + modp::mul(modp::mul(omega[k], omega[inverse_class[k]], p),
                         modp::inv(table.class_sizes[k] % p, p), p)) % p;
    const u64 d2 = modp::mul(n % p, modp::inv(s, p), p);
    long degree = 0;
    for (long d = 1; static_cast<std::size_t>(d * d) <= n; ++d)
      if (static_cast<u64>(d * d) % p == d2) {
        degree = d;
        break;
      }
    if (degree == 0) throw std::logic_error("degree not recovered");
    std::vector<u64> chi(r);
    for (std::size_t k = 0; k < r; ++k)
      chi[k] = modp::mul(modp::mul(static_cast<u64>(degree), omega[k], p),
                         modp::inv(table.class_sizes[k] % p, p), p);

    Row row{degree, {}};
    for (std::size_t k = 0; k < r; ++k) {
      // Eigenvalue zeta_o^j of rho(g) occurs m_j = (1/o) sum_l chi(g^l) zeta_o^{-jl} times.
      const int o = orders[k];
      const u64 zo = modp::pow(z, static_cast<u64>(e / o), p);
      const u64 inv_o = modp::inv(static_cast<u64>(o) % p, p);
      Cyclotomic value;
      std::vector<BigInt> by_root(o, 0);
      for (int j = 0; j < o; ++j) {
        u64 m = 0;
        const u64 step = modp::pow(zo, static_cast<u64>((o - j) % o), p);
        u64 w = 1;
        for (int l = 0; l < o; ++l) {
          m = (m + modp::mul(chi[power_classes[k][l]], w, p)) % p;
          w = modp::mul(w, step, p);
        }
        m = modp::mul(m, inv_o, p);
        if (m > static_cast<u64>(degree)) throw std::logic_error("eigenvalue multiplicity out of range");
        if (m) value += Cyclotomic(static_cast<long>(m)) * Cyclotomic::root_of_unity(o, j);
      }
      row.values.push_back(value.embedded(e));
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return compare_values(x.values, y.values) > 0;
  });
  for (auto& row : rows) {
    table.degrees.push_back(row.degree);
    table.rows.push_back(std::move(row.values));
  }
  if (!check_orthogonality(group, table)) throw std::logic_error("character table failed orthogonality");
  return table;
}

bool check_orthogonality(const FiniteGroup& group, const CharacterTable& table) {
  const std::size_t r = table.rows.size();
  if (r != group.classes().size()) return false;
  const Cyclotomic order(static_cast<long>(group.order()));
  std::vector<std::vector<Cyclotomic>> conj(r);
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& v : table.rows[i]) conj[i].push_back(v.conj());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      Cyclotomic s;
      for (std::size_t k = 0; k < r; ++k)
        s += Cyclotomic(static_cast<long>(table.class_sizes[k])) * table.rows[i][k] * conj[j][k];
      if (s != (i == j ? order : Cyclotomic(0))) return false;
    }
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = k; l < r; ++l) {
      Cyclotomic s;
      for (std::size_t i = 0; i < r; ++i) s += table.rows[i][k] * conj[i][l];
      const Cyclotomic expected =
          k == l ? Cyclotomic(static_cast<long>(group.order() / table.class_sizes[k])) : Cyclotomic(0);
      if (s != expected) return false;
    }
  return true;
}

}  // namespace coxlab
