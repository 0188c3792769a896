#include "coxlab/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "coxlab/error.hpp"

namespace coxlab {

namespace {

constexpr std::size_t kTableLimit = 2048;

}  // namespace

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : p) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm invert(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint16_t>(i);
  return out;
}

Perm identity_perm(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

int max_point(std::string_view text) {
  int best = 0, current = 0;
  bool in_number = false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      current = current * 10 + (c - '0');
      in_number = true;
    } else {
      if (in_number) best = std::max(best, current);
      current = 0;
      in_number = false;
    }
  }
  if (in_number) best = std::max(best, current);
  return best;
}

Perm parse_cycles(std::string_view text, int degree) {
  Perm p = identity_perm(degree);
  std::vector<bool> used(degree, false);
  auto bad = [&](const std::string& why) {
    fail(ErrorKind::NotPermutation, "'" + std::string(text) + "': " + why);
  };
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') bad("expected '('");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) bad("expected a point");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i++] - '0');
        if (v > 65535) bad("point too large");
      }
      if (v < 1 || v > degree) bad("point " + std::to_string(v) + " out of range");
      if (used[v - 1]) bad("point " + std::to_string(v) + " repeated");
      used[v - 1] = true;
      cycle.push_back(v - 1);
      skip_space();
      if (i < text.size() && text[i] == ',') ++i;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p[cycle[k]] = static_cast<std::uint16_t>(cycle[(k + 1) % cycle.size()]);
    skip_space();
  }
  return p;
}

std::string format_cycles(const Perm& p) {
  std::string s;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    s += "(";
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) s += ",";
      s += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

FiniteGroup FiniteGroup::generated_by(int degree, const std::vector<Perm>& generators, std::size_t max_size) {
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree) fail(ErrorKind::NotPermutation, "generator of wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto x : g) {
      if (x >= degree || hit[x]) fail(ErrorKind::NotPermutation, "generator is not a bijection");
      hit[x] = true;
    }
  }
  std::vector<Perm> elements{identity_perm(degree)};
  std::unordered_map<Perm, GroupElement, PermHash> seen{{elements[0], 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Perm y = compose(g, elements[head]);
      if (seen.emplace(y, 0).second) {
        elements.push_back(std::move(y));
        if (elements.size() > max_size)
          fail(ErrorKind::TooLarge, "group order exceeds " + std::to_string(max_size));
      }
    }
  }
  FiniteGroup G;
  G.degree_ = degree;
  G.generators_ = generators;
  G.elements_ = std::move(elements);
  G.finish();
  return G;
}

FiniteGroup FiniteGroup::from_elements(int degree, std::vector<Perm> elements) {
  FiniteGroup G;
  G.degree_ = degree;
  G.elements_ = std::move(elements);
  std::sort(G.elements_.begin(), G.elements_.end());
  // Pick generators greedily: each new one is the smallest element outside the
  // subgroup generated so far.
  std::unordered_map<Perm, GroupElement, PermHash> span;
  std::vector<Perm> span_list;
  for (const auto& x : G.elements_) {
    if (!span_list.empty() && span.contains(x)) continue;
    if (x != identity_perm(degree)) G.generators_.push_back(x);
    span = {{identity_perm(degree), 0}};
    span_list = {identity_perm(degree)};
    for (std::size_t head = 0; head < span_list.size(); ++head) {
      for (const auto& g : G.generators_) {
        Perm y = compose(g, span_list[head]);
        if (span.emplace(y, 0).second) span_list.push_back(std::move(y));
      }
    }
  }
  if (span_list.size() != G.elements_.size()) fail(ErrorKind::InvalidArgument, "element set is not a group");
  G.finish();
  return G;
}

void FiniteGroup::finish() {
  std::sort(elements_.begin(), elements_.end());
  const std::size_t n = elements_.size();
  ids_.clear();
  ids_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids_.emplace(elements_[i], static_cast<GroupElement>(i));
  inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) inverse_[i] = ids_.at(invert(elements_[i]));
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = ids_.at(compose(elements_[a], elements_[b]));
  }

  std::vector<GroupElement> gens;
  for (const auto& g : generators_) gens.push_back(ids_.at(g));
  constexpr std::size_t kUnseen = SIZE_MAX;
  class_of_.assign(n, kUnseen);
  std::vector<ConjugacyClass> found;
  for (GroupElement x = 0; x < n; ++x) {
    if (class_of_[x] != kUnseen) continue;
    ConjugacyClass cls{x, {x}};
    class_of_[x] = found.size();
    for (std::size_t head = 0; head < cls.members.size(); ++head) {
      for (GroupElement g : gens) {
        const GroupElement y = conjugate(g, cls.members[head]);
        if (class_of_[y] == kUnseen) {
          class_of_[y] = found.size();
          cls.members.push_back(y);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    found.push_back(std::move(cls));
  }
  std::stable_sort(found.begin(), found.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.representative < b.representative;
  });
  classes_ = std::move(found);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (GroupElement x : classes_[c].members) class_of_[x] = c;
}

GroupElement FiniteGroup::id_of(const Perm& p) const {
  auto it = ids_.find(p);
  if (it == ids_.end()) fail(ErrorKind::NotPermutation, format_cycles(p) + " is not in the group");
  return it->second;
}

GroupElement FiniteGroup::multiply(GroupElement a, GroupElement b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
  return ids_.at(compose(elements_[a], elements_[b]));
}

GroupElement FiniteGroup::conjugate(GroupElement g, GroupElement x) const {
  return multiply(multiply(g, x), inverse_[g]);
}

GroupElement FiniteGroup::power(GroupElement a, long long k) const {
  if (k < 0) {
    a = inverse_[a];
    k = -k;
  }
  GroupElement result = identity(), base = a;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

int FiniteGroup::element_order(GroupElement a) const {
  int k = 1;
  for (GroupElement x = a; x != identity(); x = multiply(x, a)) ++k;
  return k;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (const auto& cls : classes_) e = std::lcm(e, element_order(cls.representative));
  return e;
}

FiniteGroup FiniteGroup::centralizer(GroupElement x) const {
  std::vector<Perm> members;
  for (GroupElement g = 0; g < order(); ++g)
    if (multiply(g, x) == multiply(x, g)) members.push_back(elements_[g]);
  return from_elements(degree_, std::move(members));
}

bool FiniteGroup::verify_axioms() const {
  const std::size_t n = order();
  if (elements_[0] != identity_perm(degree_)) return false;
  for (GroupElement a = 0; a < n; ++a) {
    if (multiply(a, identity()) != a || multiply(identity(), a) != a) return false;
    if (multiply(a, inverse_[a]) != identity()) return false;
  }
  if (n <= 64) {
    for (GroupElement a = 0; a < n; ++a)
      for (GroupElement b = 0; b < n; ++b)
        for (GroupElement c = 0; c < n; ++c)
          if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) return false;
  }
  return true;
}

FiniteGroup FiniteGroup::builtin(std::string_view name) {
  auto number = [&](std::string_view digits) {
    if (digits.empty() || digits.size() > 3) fail(ErrorKind::InvalidArgument, "unknown group '" + std::string(name) + "'");
    int v = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(ErrorKind::InvalidArgument, "unknown group '" + std::string(name) + "'");
      v = v * 10 + (c - '0');
    }
    return v;
  };
  auto cycle = [](int degree, int from, int to) {
    Perm p = identity_perm(degree);
    for (int i = from; i < to; ++i) p[i] = static_cast<std::uint16_t>(i + 1);
    p[to] = static_cast<std::uint16_t>(from);
    return p;
  };
  if (name == "trivial" || name == "1") return generated_by(1, {});
  if (name.starts_with("F2^")) {
    const int n = number(name.substr(3));
    if (n < 1 || n > 16) fail(ErrorKind::InvalidArgument, "F2^n needs 1 <= n <= 16");
    std::vector<Perm> gens;
    for (int i = 0; i < n; ++i) gens.push_back(cycle(2 * n, 2 * i, 2 * i + 1));
    return generated_by(2 * n, gens);
  }
  const char kind = name.empty() ? '?' : name[0];
  const int n = number(name.substr(std::min<std::size_t>(1, name.size())));
  switch (kind) {
    case 'S':
      if (n < 1) break;
      if (n == 1) return generated_by(1, {});
      return generated_by(n, {cycle(n, 0, 1), cycle(n, 0, n - 1)});
    case 'A':
      if (n < 1) break;
      if (n <= 2) return generated_by(n, {});
      if (n == 3) return generated_by(3, {cycle(3, 0, 2)});
      return generated_by(n, {cycle(n, 0, 2), n % 2 == 1 ? cycle(n, 0, n - 1) : cycle(n, 1, n - 1)});
    case 'Z':
      if (n < 1) break;
      if (n == 1) return generated_by(1, {});
      return generated_by(n, {cycle(n, 0, n - 1)});
    default:
      break;
  }
  fail(ErrorKind::InvalidArgument, "unknown group '" + std::string(name) + "'");
}

}  // namespace coxlab
