#include "coxlab/hecke.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "coxlab/error.hpp"

namespace coxlab {

namespace {

const LaurentPoly& v_squared() {
  static const LaurentPoly p = LaurentPoly::monomial(2);
  return p;
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void add_shifted(QPoly& acc, const QPoly& p, int shift, const BigInt& factor) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += factor * p[i];
}

}  // namespace

// ---------------------------------------------------------------------------
// HeckeElement

LaurentPoly HeckeElement::coefficient(ElementId w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(ElementId w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (o.algebra_ != algebra_) fail(ErrorKind::MixedGroups, "Hecke elements of different algebras");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  if (o.algebra_ != algebra_) fail(ErrorKind::MixedGroups, "Hecke elements of different algebras");
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

HeckeElement operator*(const LaurentPoly& c, const HeckeElement& a) {
  HeckeElement out(a.algebra_);
  for (const auto& [w, x] : a.terms_) out.add(w, c * x);
  return out;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*T[" + algebra_->group().format(w) + "]";
  }
  return s;
}

// ---------------------------------------------------------------------------
// HeckeAlgebra

HeckeElement HeckeAlgebra::basis(ElementId w, const LaurentPoly& c) const {
  HeckeElement h(this);
  h.add(w, c);
  return h;
}

HeckeElement HeckeAlgebra::multiply_generator(const HeckeElement& a, int s) const {
  HeckeElement out(this);
  for (const auto& [x, c] : a.terms()) {
    const ElementId xs = group_->right(x, s);
    if (xs > x) {
      out.add(xs, c);
    } else {
      out.add(x, c * (v_squared() - LaurentPoly(1)));
      out.add(xs, c * v_squared());
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& a, const HeckeElement& b) const {
  if (&a.algebra() != this || &b.algebra() != this)
    fail(ErrorKind::MixedGroups, "Hecke elements of different algebras");
  HeckeElement out(this);
  for (const auto& [y, c] : b.terms()) {
    HeckeElement partial = a;
    for (int s : group_->word(y)) partial = multiply_generator(partial, s);
    out += c * partial;
  }
  return out;
}

const HeckeElement& HeckeAlgebra::bar_basis(ElementId w) const {
  {
    std::lock_guard lock(bar_mutex_);
    if (auto it = bar_cache_.find(w); it != bar_cache_.end()) return *it->second;
  }
  HeckeElement value(this);
  if (w == group_->identity()) {
    value = one();
  } else {
    // bar(T_w) = bar(T_{ws}) bar(T_s) with bar(T_s) = v^-2 T_s + (v^-2 - 1) T_1.
    const auto word = group_->word(w);
    const int s = word.back();
    const HeckeElement& prefix = bar_basis(group_->right(w, s));
    value = LaurentPoly::monomial(-2) * multiply_generator(prefix, s);
    value += (LaurentPoly::monomial(-2) - LaurentPoly(1)) * prefix;
  }
  std::lock_guard lock(bar_mutex_);
  auto [it, inserted] = bar_cache_.emplace(w, std::make_shared<const HeckeElement>(std::move(value)));
  return *it->second;
}

HeckeElement HeckeAlgebra::bar(const HeckeElement& a) const {
  HeckeElement out(this);
  for (const auto& [w, c] : a.terms()) out += c.bar() * bar_basis(w);
  return out;
}

HeckeElement t_multiply(const HeckeElement& a, const HeckeElement& b) {
  if (&a.algebra() != &b.algebra()) fail(ErrorKind::MixedGroups, "Hecke elements of different algebras");
  return a.algebra().multiply(a, b);
}

HeckeElement bar(const HeckeElement& a) { return a.algebra().bar(a); }

// ---------------------------------------------------------------------------
// KLTable

KLTable::KLTable(std::shared_ptr<const HeckeAlgebra> algebra, bool verify)
    : algebra_(std::move(algebra)), verify_(verify), columns_(algebra_->group().size()) {}

const KLTable::Column* KLTable::cached(ElementId w) const {
  std::lock_guard lock(mutex_);
  return columns_[w].get();
}

const std::map<ElementId, QPoly>& KLTable::column(ElementId w) const {
  if (const Column* c = cached(w)) return *c;
  auto computed = compute(w);
  if (verify_) check_column(w, *computed);
  std::lock_guard lock(mutex_);
  if (!columns_[w]) columns_[w] = std::move(computed);
  return *columns_[w];
}

std::shared_ptr<const KLTable::Column> KLTable::compute(ElementId w) const {
  const EnumeratedGroup& g = group();
  auto col = std::make_shared<Column>();
  if (w == g.identity()) {
    (*col)[w] = QPoly{1};
    return col;
  }
  // With s the first letter of w and v = sw:
  //   P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v}
  //             - sum_{z < v, sz < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z},
  // where c = 1 if sx < x and 0 otherwise.
  const int s = g.first_letter(w);
  const ElementId v = g.left(s, w);
  const Column& below = column(v);
  struct Correction {
    ElementId z;
    BigInt mu;
    int shift;
  };
  std::vector<Correction> corrections;
  for (const auto& [z, p] : below) {
    if (z == v || !g.is_left_descent(s, z)) continue;
    BigInt m = mu(z, v);
    if (m != 0) corrections.push_back({z, m, (g.length(w) - g.length(z)) / 2});
  }
  for (const auto& c : corrections) column(c.z);

  auto get = [&](const Column& c, ElementId x) -> const QPoly* {
    auto it = c.find(x);
    return it == c.end() ? nullptr : &it->second;
  };
  for (ElementId x : g.lower_interval(w)) {
    const ElementId sx = g.left(s, x);
    const int c = sx < x ? 1 : 0;
    QPoly p;
    if (const QPoly* a = get(below, sx)) add_shifted(p, *a, 1 - c, 1);
    if (const QPoly* b = get(below, x)) add_shifted(p, *b, c, 1);
    for (const auto& corr : corrections) {
      if (const QPoly* pz = get(column(corr.z), x)) add_shifted(p, *pz, corr.shift, -corr.mu);
    }
    trim(p);
    (*col)[x] = std::move(p);
  }
  return col;
}

void KLTable::check_column(ElementId w, const Column& col) const {
  const EnumeratedGroup& g = group();
  const std::string where = " for w = " + g.format(w);
  auto it = col.find(w);
  if (it == col.end() || it->second != QPoly{1}) throw std::logic_error("P_{w,w} != 1" + where);
  HeckeElement c(algebra_.get());
  for (const auto& [y, p] : col) {
    if (y != w) {
      const int bound = g.length(w) - g.length(y) - 1;
      if (p.empty() || 2 * (static_cast<int>(p.size()) - 1) > bound)
        throw std::logic_error("degree bound violated at y = " + g.format(y) + where);
    }
    c.add(y, LaurentPoly::from_q_coefficients(p).shifted(-g.length(w)));
  }
  if (algebra_->bar(c) != c) throw std::logic_error("C'_w is not bar invariant" + where);
}

QPoly KLTable::polynomial(ElementId y, ElementId w) const {
  if (!group().bruhat_leq(y, w)) return {};
  return column(w).at(y);
}

BigInt KLTable::mu(ElementId y, ElementId w) const {
  const int d = group().length(w) - group().length(y);
  if (d <= 0 || d % 2 == 0) return 0;
  const QPoly p = polynomial(y, w);
  const std::size_t k = static_cast<std::size_t>((d - 1) / 2);
  return k < p.size() ? p[k] : BigInt(0);
}

HeckeElement KLTable::cprime(ElementId w) const {
  HeckeElement c(algebra_.get());
  const int l = group().length(w);
  for (const auto& [y, p] : column(w)) c.add(y, LaurentPoly::from_q_coefficients(p).shifted(-l));
  return c;
}

std::map<ElementId, LaurentPoly> expand_in_cprime(const KLTable& table, const HeckeElement& h) {
  // C'_y = v^-l(y) T_y + (terms of smaller id), so peel from the top.
  std::map<ElementId, LaurentPoly> out;
  HeckeElement rest = h;
  while (!rest.is_zero()) {
    const auto& [y, c] = *rest.terms().rbegin();
    const ElementId top = y;
    const LaurentPoly a = c.shifted(table.group().length(top));
    out[top] = a;
    rest -= a * table.cprime(top);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cells

std::string_view to_string(CellKind kind) {
  switch (kind) {
    case CellKind::Left: return "left";
    case CellKind::Right: return "right";
    case CellKind::TwoSided: return "two-sided";
  }
  return "?";
}

std::vector<std::vector<ElementId>> cell_edges(const KLTable& table, CellKind kind) {
  const EnumeratedGroup& g = table.group();
  const int r = g.rank();
  std::vector<std::vector<ElementId>> edges(g.size());
  const bool left = kind != CellKind::Right;
  const bool right = kind != CellKind::Left;
  for (ElementId w = 0; w < g.size(); ++w) {
    std::vector<ElementId> targets;
    std::vector<ElementId> mu_below;
    for (const auto& [z, p] : table.column(w))
      if (z != w && table.mu(z, w) != 0) mu_below.push_back(z);
    for (int s = 0; s < r; ++s) {
      // C'_s C'_w = C'_{sw} + sum_{z < w, sz < z} mu(z,w) C'_z when sw > w,
      // and (v + v^-1) C'_w otherwise; symmetrically on the right.
      if (left && !g.is_left_descent(s, w)) {
        targets.push_back(g.left(s, w));
        for (ElementId z : mu_below)
          if (g.is_left_descent(s, z)) targets.push_back(z);
      }
      if (right && !g.is_right_descent(w, s)) {
        targets.push_back(g.right(w, s));
        for (ElementId z : mu_below)
          if (g.is_right_descent(z, s)) targets.push_back(z);
      }
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    edges[w] = std::move(targets);
  }
  return edges;
}

CellPartition cells(const KLTable& table, CellKind kind) {
  const auto edges = cell_edges(table, kind);
  const std::size_t n = edges.size();
  // Tarjan's algorithm, iterative.
  constexpr std::uint32_t kUnvisited = UINT32_MAX;
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<ElementId> stack;
  std::vector<std::vector<ElementId>> blocks;
  std::uint32_t counter = 0;
  for (ElementId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<std::pair<ElementId, std::size_t>> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [x, next] = frames.back();
      if (next < edges[x].size()) {
        const ElementId y = edges[x][next++];
        if (index[y] == kUnvisited) {
          index[y] = low[y] = counter++;
          stack.push_back(y);
          on_stack[y] = true;
          frames.emplace_back(y, 0);
        } else if (on_stack[y]) {
          low[x] = std::min(low[x], index[y]);
        }
        continue;
      }
      const ElementId done = x;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<ElementId> block;
        ElementId y;
        do {
          y = stack.back();
          stack.pop_back();
          on_stack[y] = false;
          block.push_back(y);
        } while (y != done);
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return CellPartition{kind, std::move(blocks)};
}

PalindromeResult palindrome_check(const KLTable& table, ElementId w) {
  PalindromeResult r;
  r.length = table.group().length(w);
  for (const auto& [y, p] : table.column(w)) add_shifted(r.polynomial, p, table.group().length(y), 1);
  trim(r.polynomial);
  QPoly reversed(static_cast<std::size_t>(r.length) + 1, 0);
  bool fits = r.polynomial.size() <= reversed.size();
  if (fits)
    for (std::size_t i = 0; i < r.polynomial.size(); ++i) reversed[r.length - i] = r.polynomial[i];
  trim(reversed);
  r.palindromic = fits && reversed == r.polynomial;
  return r;
}

}  // namespace coxlab
