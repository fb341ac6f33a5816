#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace nbrecon {

// Largest vertex universe supported by the single-word bit representation.
inline constexpr int kMaxVertices = 64;

// A subset of {0..universe-1} stored as one 64-bit word. Bits at positions
// >= universe are always zero.
class VertexSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    Iterator() = default;
    explicit Iterator(std::uint64_t rest) : rest_(rest) {}

    int operator*() const { return std::countr_zero(rest_); }
    Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe) {
    assert(universe >= 0 && universe <= kMaxVertices);
  }

  static constexpr std::uint64_t universe_mask(int universe) {
    return universe >= 64 ? ~std::uint64_t{0}
                          : (std::uint64_t{1} << universe) - 1;
  }

  static VertexSet from_bits(int universe, std::uint64_t bits) {
    VertexSet s(universe);
    s.bits_ = bits & universe_mask(universe);
    return s;
  }
  static VertexSet full(int universe) {
    return from_bits(universe, ~std::uint64_t{0});
  }
  static VertexSet single(int universe, int v) {
    VertexSet s(universe);
    s.insert(v);
    return s;
  }
  static VertexSet of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }
  template <typename Range>
  static VertexSet from_range(int universe, const Range& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }

  int universe() const { return universe_; }
  std::uint64_t bits() const { return bits_; }

  bool contains(int v) const {
    return v >= 0 && v < universe_ && ((bits_ >> v) & 1U);
  }
  void insert(int v) {
    assert(v >= 0 && v < universe_);
    bits_ |= std::uint64_t{1} << v;
  }
  void erase(int v) {
    assert(v >= 0 && v < universe_);
    bits_ &= ~(std::uint64_t{1} << v);
  }

  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == universe_mask(universe_); }

  // Lowest member, or -1 when empty.
  int min() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  bool is_subset_of(const VertexSet& other) const {
    assert(universe_ == other.universe_);
    return (bits_ & ~other.bits_) == 0;
  }
  bool intersects(const VertexSet& other) const {
    assert(universe_ == other.universe_);
    return (bits_ & other.bits_) != 0;
  }

  VertexSet complement() const {
    return from_bits(universe_, ~bits_);
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    bits_ &= o.bits_;
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    bits_ &= ~o.bits_;
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet&) const = default;

  Iterator begin() const { return Iterator(bits_); }
  Iterator end() const { return Iterator(0); }

  std::vector<int> members() const { return {begin(), end()}; }

  // "{0,2,5}"
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
  int universe_ = 0;
};

// Canonical order used by every family: by size, then lexicographically on
// the sorted member lists.
bool canonical_less(const VertexSet& a, const VertexSet& b);

struct CanonicalLess {
  bool operator()(const VertexSet& a, const VertexSet& b) const {
    return canonical_less(a, b);
  }
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const {
    std::uint64_t x = s.bits() * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(x ^ (x >> 29) ^ s.universe());
  }
};

}  // namespace nbrecon
