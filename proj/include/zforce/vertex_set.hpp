#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace zforce {

using Vertex = int;

inline constexpr int kMaxVertices = 64;

/// Fixed-width set of vertex ids in [0, 64). All graph algorithms in this
/// library operate on graphs small enough that a vertex set is one word.
class VertexSet {
 public:
  using Word = std::uint64_t;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Word bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  /// The set {0, ..., n-1}.
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~Word{0} : ((Word{1} << n) - 1));
  }
  static constexpr VertexSet singleton(Vertex v) { return VertexSet(Word{1} << v); }

  constexpr Word bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(Vertex v) { bits_ |= Word{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(Word{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_singleton() const { return bits_ != 0 && (bits_ & (bits_ - 1)) == 0; }
  /// Smallest element; undefined on the empty set.
  constexpr Vertex front() const { return std::countr_zero(bits_); }
  constexpr Vertex back() const { return 63 - std::countl_zero(bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(Word rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Word rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  /// "{0,3,5}"
  std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for (Vertex v : *this) {
      if (!first_item) s += ',';
      s += std::to_string(v);
      first_item = false;
    }
    return s + "}";
  }

 private:
  Word bits_ = 0;
};

}  // namespace zforce
