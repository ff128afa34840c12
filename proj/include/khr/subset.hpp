#ifndef KHR_SUBSET_HPP
#define KHR_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace khr {

/// Index of a carrier element. Carriers are always {0, ..., order-1}.
using Element = int;

/// Largest carrier a table may have; subsets are single 64-bit words.
inline constexpr int kMaxOrder = 64;

/**
 * A subset of a finite carrier stored as a membership mask.
 *
 * The carrier size is not stored; bits at or beyond the owning table's
 * order must stay clear, which every operation here preserves as long as
 * the inputs respect it.
 */
class ElementSubset {
 public:
  constexpr ElementSubset() = default;
  constexpr explicit ElementSubset(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSubset singleton(Element x) { return ElementSubset{std::uint64_t{1} << x}; }

  static constexpr ElementSubset full(int order) {
    return ElementSubset{order >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1};
  }

  static constexpr ElementSubset of(std::initializer_list<Element> xs) {
    ElementSubset s;
    for (Element x : xs) s.insert(x);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Element x) const { return (bits_ >> x) & 1U; }
  constexpr void insert(Element x) { bits_ |= std::uint64_t{1} << x; }
  constexpr void erase(Element x) { bits_ &= ~(std::uint64_t{1} << x); }

  constexpr bool subset_of(ElementSubset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSubset other) const { return (bits_ & other.bits_) != 0; }

  /// Lowest member; undefined on the empty set.
  constexpr Element first() const { return std::countr_zero(bits_); }

  constexpr ElementSubset& operator|=(ElementSubset o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSubset& operator&=(ElementSubset o) { bits_ &= o.bits_; return *this; }
  constexpr ElementSubset& operator-=(ElementSubset o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr ElementSubset operator|(ElementSubset a, ElementSubset b) { return a |= b; }
  friend constexpr ElementSubset operator&(ElementSubset a, ElementSubset b) { return a &= b; }
  friend constexpr ElementSubset operator-(ElementSubset a, ElementSubset b) { return a -= b; }
  friend constexpr bool operator==(ElementSubset, ElementSubset) = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Element operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{}; }

  std::vector<Element> elements() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical ordering used for ideal lists: by size, then by mask value.
inline bool canonical_less(ElementSubset a, ElementSubset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

}  // namespace khr

#endif
