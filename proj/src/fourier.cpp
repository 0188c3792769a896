#include "coxlab/fourier.hpp"

#include <stdexcept>

#include "coxlab/error.hpp"

namespace coxlab {

FourierData::FourierData(FiniteGroup group) : group_(std::move(group)) {
  const auto& classes = group_.classes();
  const std::size_t r = classes.size();
  const std::size_t n = group_.order();
  constexpr std::size_t kOutside = SIZE_MAX;
  // local_class[c][g]: class of g inside Z(x_c), or kOutside.
  std::vector<std::vector<std::size_t>> local_class(r, std::vector<std::size_t>(n, kOutside));
  for (std::size_t c = 0; c < r; ++c) {
    centralizers_.push_back(group_.centralizer(classes[c].representative));
    const FiniteGroup& z = centralizers_.back();
    tables_.push_back(character_table(z));
    for (GroupElement g = 0; g < n; ++g)
      if (z.contains(group_.element(g))) local_class[c][g] = z.class_of(z.id_of(group_.element(g)));
    for (std::size_t s = 0; s < tables_.back().rows.size(); ++s) pairs_.push_back({c, s});
  }
  blocks_.assign(r, std::vector<BlockCounts>(r));
  for (std::size_t cx = 0; cx < r; ++cx) {
    const GroupElement x = classes[cx].representative;
    const GroupElement x_inv = group_.inverse(x);
    for (std::size_t cy = 0; cy < r; ++cy) {
      const GroupElement y = classes[cy].representative;
      auto& counts = blocks_[cx][cy].counts;
      counts.assign(centralizers_[cx].classes().size(), std::vector<long>(centralizers_[cy].classes().size(), 0));
      for (GroupElement g = 0; g < n; ++g) {
        const GroupElement u = group_.conjugate(g, y);
        if (group_.multiply(x, u) != group_.multiply(u, x)) continue;
        const GroupElement a = group_.conjugate(group_.inverse(g), x_inv);
        ++counts[local_class[cx][u]][local_class[cy][a]];
      }
    }
  }
}

void FourierData::check(const MPair& p) const {
  if (p.class_index >= tables_.size() || p.character >= tables_[p.class_index].rows.size())
    fail(ErrorKind::InvalidPair, "pair is not in M(G)");
}

const FourierData::BlockCounts& FourierData::block(std::size_t cx, std::size_t cy) const {
  return blocks_[cx][cy];
}

Cyclotomic FourierData::entry(const MPair& a, const MPair& b) const {
  check(a);
  check(b);
  const auto& counts = block(a.class_index, b.class_index).counts;
  const auto& sigma = tables_[a.class_index].rows[a.character];
  const auto& tau = tables_[b.class_index].rows[b.character];
  Cyclotomic sum;
  for (std::size_t i = 0; i < counts.size(); ++i)
    for (std::size_t j = 0; j < counts[i].size(); ++j)
      if (counts[i][j] != 0) sum += Cyclotomic(counts[i][j]) * sigma[i] * tau[j];
  const long denom = static_cast<long>(centralizers_[a.class_index].order() * centralizers_[b.class_index].order());
  return sum.divided_by(Rational(denom));
}

CyclotomicMatrix FourierData::matrix() const {
  CyclotomicMatrix m(pairs_.size(), std::vector<Cyclotomic>(pairs_.size()));
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    for (std::size_t j = 0; j < pairs_.size(); ++j) m[i][j] = entry(pairs_[i], pairs_[j]);
  return m;
}

std::string FourierData::describe(const MPair& pair) const {
  check(pair);
  return "(x=" + group_.format(group_.classes()[pair.class_index].representative) + ", deg " +
         std::to_string(tables_[pair.class_index].degrees[pair.character]) + " #" +
         std::to_string(pair.character) + ")";
}

CyclotomicMatrix multiply(const CyclotomicMatrix& a, const CyclotomicMatrix& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
  CyclotomicMatrix out(n, std::vector<Cyclotomic>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

CyclotomicMatrix conjugate_transpose(const CyclotomicMatrix& a) {
  const std::size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
  CyclotomicMatrix out(m, std::vector<Cyclotomic>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out[j][i] = a[i][j].conj();
  return out;
}

bool is_identity(const CyclotomicMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != Cyclotomic(i == j ? 1 : 0)) return false;
  }
  return true;
}

Rational burnside_triple_count(const FiniteGroup& group, const CharacterTable& table, std::size_t ca,
                               std::size_t cb, std::size_t cc) {
  const std::size_t r = group.classes().size();
  if (ca >= r || cb >= r || cc >= r) fail(ErrorKind::NotAClass, "class index out of range");
  Cyclotomic sum;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    sum += (row[ca] * row[cb] * row[cc]).divided_by(Rational(table.degrees[i]));
  }
  if (!sum.is_rational()) throw std::logic_error("character sum is not rational");
  const Rational factor(BigInt(static_cast<unsigned long>(table.class_sizes[ca] * table.class_sizes[cb])) *
                            static_cast<unsigned long>(table.class_sizes[cc]),
                        BigInt(static_cast<unsigned long>(group.order())));
  Rational result = factor * sum.rational_value();
  result.canonicalize();
  return result;
}

BigInt brute_force_triple_count(const FiniteGroup& group, std::size_t ca, std::size_t cb, std::size_t cc) {
  const auto& classes = group.classes();
  if (ca >= classes.size() || cb >= classes.size() || cc >= classes.size())
    fail(ErrorKind::NotAClass, "class index out of range");
  BigInt count = 0;
  for (GroupElement a : classes[ca].members)
    for (GroupElement b : classes[cb].members)
      for (GroupElement c : classes[cc].members)
        if (group.multiply(group.multiply(a, b), c) == group.identity()) ++count;
  return count;
}

}  // namespace coxlab
