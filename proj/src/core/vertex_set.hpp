#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace aoforge {

// Set of 1-based vertex labels stored as a bit mask (vertex v is bit v-1).
class VertexSet {
public:
  using Mask = std::uint64_t;
  static constexpr int kCapacity = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask mask) : mask_(mask) {}
  VertexSet(std::initializer_list<int> vertices);

  static VertexSet range(int n);
  static VertexSet single(int v) { return VertexSet(Mask{1} << (v - 1)); }
  static VertexSet from(const std::vector<int>& vertices);

  constexpr Mask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }
  bool contains(int v) const { return (mask_ >> (v - 1)) & 1U; }
  bool is_subset_of(VertexSet other) const { return (mask_ & ~other.mask_) == 0; }
  bool intersects(VertexSet other) const { return (mask_ & other.mask_) != 0; }

  // Smallest element; undefined on the empty set.
  int min() const { return std::countr_zero(mask_) + 1; }
  int max() const { return kCapacity - std::countl_zero(mask_); }

  void insert(int v) { mask_ |= Mask{1} << (v - 1); }
  void erase(int v) { mask_ &= ~(Mask{1} << (v - 1)); }

  std::vector<int> elements() const;
  std::string to_string() const;

  template <class F>
  void for_each(F&& f) const {
    for (Mask m = mask_; m != 0; m &= m - 1) f(std::countr_zero(m) + 1);
  }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask_ | b.mask_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & b.mask_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

private:
  Mask mask_ = 0;
};

}  // namespace aoforge
