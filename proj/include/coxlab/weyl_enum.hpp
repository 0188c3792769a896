#pragma once

// Fully enumerated Weyl groups with integer element ids.
//
// Ids follow ShortLex order of reduced words: the identity is 0, elements of
// length k precede those of length k+1, and the longest element comes last.

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "coxlab/weyl.hpp"

namespace coxlab {

using ElementId = std::uint32_t;

class EnumeratedGroup {
 public:
  /// TooLarge when |W| exceeds `max_size`.
  static std::shared_ptr<const EnumeratedGroup> build(std::shared_ptr<const WeylGroup> weyl,
                                                      std::size_t max_size = kDefaultMaxGroupSize);
  static std::shared_ptr<const EnumeratedGroup> build(const CoxeterSpec& spec,
                                                      std::size_t max_size = kDefaultMaxGroupSize);

  const WeylGroup& weyl() const { return *weyl_; }
  std::shared_ptr<const WeylGroup> weyl_ptr() const { return weyl_; }
  int rank() const { return weyl_->rank(); }
  std::size_t size() const { return elements_.size(); }

  ElementId identity() const { return 0; }
  ElementId longest() const { return static_cast<ElementId>(size() - 1); }

  ElementId left(int s, ElementId x) const { return left_[s][x]; }
  ElementId right(ElementId x, int s) const { return right_[s][x]; }
  ElementId inverse(ElementId x) const { return inverse_[x]; }
  int length(ElementId x) const { return length_[x]; }
  bool is_left_descent(int s, ElementId x) const { return left_[s][x] < x; }
  bool is_right_descent(ElementId x, int s) const { return right_[s][x] < x; }
  /// Smallest left descent, -1 for the identity.
  int first_letter(ElementId x) const { return first_[x]; }

  ElementId multiply(ElementId a, ElementId b) const;
  std::vector<int> word(ElementId x) const;
  std::string format(ElementId x) const { return weyl_->format_word(word(x)); }

  WeylElement element(ElementId x) const { return weyl_->from_images(elements_[x]); }
  /// Throws InvalidArgument when the element belongs to another group.
  ElementId id_of(const WeylElement& w) const;
  ElementId parse(std::string_view word) const { return id_of(weyl_->parse_word(word)); }

  /// Bruhat order through cached lower intervals.
  bool bruhat_leq(ElementId y, ElementId w) const;
  /// Ids y <= w in increasing order.
  std::vector<ElementId> lower_interval(ElementId w) const;

  /// Conjugacy classes, each sorted by id; classes ordered by their smallest id.
  const std::vector<std::vector<ElementId>>& classes() const;
  std::size_t class_of(ElementId x) const;

 private:
  EnumeratedGroup() = default;
  const std::vector<std::uint64_t>& interval_bits(ElementId w) const;

  std::shared_ptr<const WeylGroup> weyl_;
  std::vector<Images> elements_;
  std::unordered_map<Images, ElementId, ImagesHash> ids_;
  std::vector<std::vector<ElementId>> left_, right_;
  std::vector<ElementId> inverse_;
  std::vector<int> length_;
  std::vector<int> first_;

  mutable std::mutex interval_mutex_;
  mutable std::unordered_map<ElementId, std::shared_ptr<const std::vector<std::uint64_t>>> intervals_;

  mutable std::once_flag classes_once_;
  mutable std::vector<std::vector<ElementId>> classes_;
  mutable std::vector<std::uint32_t> class_index_;
};

}  // namespace coxlab
