#include "coxlab/weyl_enum.hpp"

#include <algorithm>
#include <bit>

#include "coxlab/error.hpp"

namespace coxlab {

std::shared_ptr<const EnumeratedGroup> EnumeratedGroup::build(const CoxeterSpec& spec, std::size_t max_size) {
  return build(WeylGroup::build(spec), max_size);
}

std::shared_ptr<const EnumeratedGroup> EnumeratedGroup::build(std::shared_ptr<const WeylGroup> weyl,
                                                              std::size_t max_size) {
  if (weyl->order() > BigInt(static_cast<unsigned long>(max_size)))
    fail(ErrorKind::TooLarge, "|W(" + weyl->spec().name() + ")| = " + to_string(weyl->order()) +
                                  " exceeds the enumeration bound " + std::to_string(max_size));
  std::shared_ptr<EnumeratedGroup> g(new EnumeratedGroup());
  g->weyl_ = weyl;
  const WeylGroup& W = *weyl;
  const int r = W.rank();
  const std::size_t n = weyl->order().get_ui();
  g->elements_.reserve(n);
  g->ids_.reserve(n);
  g->length_.reserve(n);
  g->first_.reserve(n);

  g->elements_.push_back(W.identity().images());
  g->ids_.emplace(g->elements_[0], 0);
  g->length_.push_back(0);
  g->first_.push_back(-1);

  // Level k+1 in ShortLex order: the first time s*x is new, s is its smallest
  // left descent and x its unique ShortLex suffix.
  std::size_t level_begin = 0, level_end = 1;
  for (int len = 1; level_begin < level_end; ++len) {
    for (int s = 0; s < r; ++s) {
      for (std::size_t x = level_begin; x < level_end; ++x) {
        Images y = W.left_multiply(s, W.from_images(g->elements_[x])).images();
        auto [it, inserted] = g->ids_.emplace(y, static_cast<ElementId>(g->elements_.size()));
        if (!inserted) continue;
        g->elements_.push_back(y);
        g->length_.push_back(len);
        g->first_.push_back(s);
      }
    }
    level_begin = level_end;
    level_end = g->elements_.size();
  }

  g->left_.assign(r, std::vector<ElementId>(n));
  g->right_.assign(r, std::vector<ElementId>(n));
  for (std::size_t x = 0; x < n; ++x) {
    const WeylElement wx = W.from_images(g->elements_[x]);
    for (int s = 0; s < r; ++s) {
      g->left_[s][x] = g->ids_.at(W.left_multiply(s, wx).images());
      g->right_[s][x] = g->ids_.at(W.right_multiply(wx, s).images());
    }
  }
  g->inverse_.assign(n, 0);
  for (std::size_t x = 1; x < n; ++x) {
    const int s = g->first_[x];
    g->inverse_[x] = g->right_[s][g->inverse_[g->left_[s][x]]];
  }
  return g;
}

ElementId EnumeratedGroup::multiply(ElementId a, ElementId b) const {
  ElementId out = a;
  for (int s : word(b)) out = right_[s][out];
  return out;
}

std::vector<int> EnumeratedGroup::word(ElementId x) const {
  std::vector<int> w;
  while (x != 0) {
    const int s = first_[x];
    w.push_back(s);
    x = left_[s][x];
  }
  return w;
}

ElementId EnumeratedGroup::id_of(const WeylElement& w) const {
  if (w.group_ptr() != weyl_.get()) fail(ErrorKind::MixedGroups, "element belongs to another group");
  return ids_.at(w.images());
}

const std::vector<std::uint64_t>& EnumeratedGroup::interval_bits(ElementId w) const {
  std::lock_guard lock(interval_mutex_);
  if (auto it = intervals_.find(w); it != intervals_.end()) return *it->second;
  // Walk down the ShortLex suffix chain to the nearest cached interval, then
  // rebuild upwards: [e, s*x] = [e, x] union s*[e, x] when s*x > x.
  std::vector<ElementId> chain;
  ElementId x = w;
  while (!intervals_.contains(x)) {
    chain.push_back(x);
    if (x == 0) break;
    x = left_[first_[x]][x];
  }
  const std::size_t words = (size() + 63) / 64;
  if (!intervals_.contains(0)) {
    auto base = std::make_shared<std::vector<std::uint64_t>>(words, 0);
    (*base)[0] = 1;
    intervals_.emplace(0, base);
    if (!chain.empty() && chain.back() == 0) chain.pop_back();
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const ElementId y = *it;
    const int s = first_[y];
    const auto& below = *intervals_.at(left_[s][y]);
    auto bits = std::make_shared<std::vector<std::uint64_t>>(below);
    for (std::size_t word = 0; word < words; ++word) {
      std::uint64_t m = below[word];
      while (m) {
        const int b = std::countr_zero(m);
        m &= m - 1;
        const ElementId z = left_[s][word * 64 + b];
        (*bits)[z / 64] |= std::uint64_t{1} << (z % 64);
      }
    }
    intervals_.emplace(y, bits);
  }
  return *intervals_.at(w);
}

bool EnumeratedGroup::bruhat_leq(ElementId y, ElementId w) const {
  if (y == w) return true;
  if (length_[y] >= length_[w]) return false;
  const auto& bits = interval_bits(w);
  return (bits[y / 64] >> (y % 64)) & 1;
}

std::vector<ElementId> EnumeratedGroup::lower_interval(ElementId w) const {
  const auto& bits = interval_bits(w);
  std::vector<ElementId> out;
  for (std::size_t word = 0; word < bits.size(); ++word) {
    std::uint64_t m = bits[word];
    while (m) {
      out.push_back(static_cast<ElementId>(word * 64 + std::countr_zero(m)));
      m &= m - 1;
    }
  }
  return out;
}

const std::vector<std::vector<ElementId>>& EnumeratedGroup::classes() const {
  std::call_once(classes_once_, [this] {
    constexpr std::uint32_t kUnseen = UINT32_MAX;
    class_index_.assign(size(), kUnseen);
    for (ElementId start = 0; start < size(); ++start) {
      if (class_index_[start] != kUnseen) continue;
      const auto index = static_cast<std::uint32_t>(classes_.size());
      std::vector<ElementId> members{start};
      class_index_[start] = index;
      for (std::size_t head = 0; head < members.size(); ++head) {
        for (int s = 0; s < rank(); ++s) {
          const ElementId c = right_[s][left_[s][members[head]]];
          if (class_index_[c] == kUnseen) {
            class_index_[c] = index;
            members.push_back(c);
          }
        }
      }
      std::sort(members.begin(), members.end());
      classes_.push_back(std::move(members));
    }
  });
  return classes_;
}

std::size_t EnumeratedGroup::class_of(ElementId x) const {
  classes();
  return class_index_[x];
}

}  // namespace coxlab
