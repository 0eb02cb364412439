#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace bier {

/// A subset of the labels 1..32, stored as a single machine word.
///
/// Label `i` lives in bit `i - 1`. Primed labels of a doubled ground set
/// [m] ⊔ [m'] are the labels m+1..2m, so i' is simply `i + m`.
class VertexSet {
 public:
  using Mask = std::uint32_t;
  static constexpr int kMaxLabel = 32;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(Mask rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> labels) {
    for (int v : labels) bits_ |= bit(v);
  }

  /// Labels first..last inclusive; empty when last < first.
  static constexpr VertexSet range(int first, int last) {
    VertexSet s;
    for (int v = first; v <= last; ++v) s.bits_ |= bit(v);
    return s;
  }
  static constexpr VertexSet ground(int m) { return range(1, m); }
  static constexpr VertexSet singleton(int v) { return VertexSet(bit(v)); }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return v >= 1 && v <= kMaxLabel && (bits_ & bit(v)) != 0; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(VertexSet o) const { return subset_of(o) && bits_ != o.bits_; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr int min_label() const { return empty() ? 0 : std::countr_zero(bits_) + 1; }
  constexpr int max_label() const { return empty() ? 0 : kMaxLabel - std::countl_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }

  /// Every label moved by `offset` (labels must stay within 1..32).
  constexpr VertexSet shifted(int offset) const {
    return offset >= 0 ? VertexSet(bits_ << offset) : VertexSet(bits_ >> -offset);
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> labels() const { return {begin(), end()}; }
  std::string to_string() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

 private:
  static constexpr Mask bit(int v) { return Mask{1} << (v - 1); }

  Mask bits_ = 0;
};

/// Canonical order: by cardinality, then lexicographically on the sorted labels.
constexpr bool canonical_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return false;
}

struct CanonicalLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const { return canonical_less(a, b); }
};

}  // namespace bier

template <>
struct std::hash<bier::VertexSet> {
  std::size_t operator()(bier::VertexSet s) const noexcept { return std::hash<std::uint32_t>{}(s.bits()); }
};
