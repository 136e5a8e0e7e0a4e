#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "shadowlab/errors.hpp"

namespace shadowlab {

inline constexpr int kMaxGroundSize = 64;

// Ground set [n] = {1,...,n}, capped so that any subset fits in one word.
struct GroundSpec {
  int n;

  explicit GroundSpec(int n_) : n(n_) {
    if (n < 1 || n > kMaxGroundSize)
      throw DomainError("ground set size must be in [1," +
                        std::to_string(kMaxGroundSize) + "], got " +
                        std::to_string(n));
  }
};

// A subset of [64]; vertex v lives at bit v-1.
//
// Comparing raw masks numerically compares the sets colexicographically
// (the larger set is the one whose maximum differing element is present),
// which is the canonical order everywhere in this project.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet from_mask(std::uint64_t mask) {
    return VertexSet(mask);
  }

  static VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s = s.with(v);
    return s;
  }

  // {1,...,n}
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~0ull : (1ull << n) - 1);
  }

  static VertexSet single(int v) { return VertexSet().with(v); }

  constexpr std::uint64_t mask() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  bool contains(int v) const {
    check_vertex(v);
    return (bits_ >> (v - 1)) & 1;
  }

  VertexSet with(int v) const {
    check_vertex(v);
    return VertexSet(bits_ | (1ull << (v - 1)));
  }

  VertexSet without(int v) const {
    check_vertex(v);
    return VertexSet(bits_ & ~(1ull << (v - 1)));
  }

  // Least and greatest vertex; undefined on the empty set.
  int min() const { return std::countr_zero(bits_) + 1; }
  int max() const { return 64 - std::countl_zero(bits_); }

  constexpr bool subset_of(VertexSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr bool intersects(VertexSet o) const {
    return (bits_ & o.bits_) != 0;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }

  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
  // Numeric on masks == colexicographic on sets.
  friend constexpr bool operator<(VertexSet a, VertexSet b) {
    return a.bits_ < b.bits_;
  }

  // Iterates vertices in increasing order.
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_) + 1; }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator& o) const {
      return rest_ == o.rest_;
    }
    constexpr bool operator!=(const iterator& o) const {
      return rest_ != o.rest_;
    }

   private:
    std::uint64_t rest_ = 0;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}

  static void check_vertex(int v) {
    if (v < 1 || v > kMaxGroundSize)
      throw DomainError("vertex out of range: " + std::to_string(v));
  }

  std::uint64_t bits_ = 0;
};

// "1 2 5"; the empty set renders as "".
std::string to_string(VertexSet s);
// "{1 2 5}" / "{}", for messages.
std::string braces(VertexSet s);

// Calls f on every subset of `universe` in increasing mask order (= colex),
// starting with the empty set and ending with `universe` itself.
template <typename F>
void for_each_subset(VertexSet universe, F&& f) {
  const std::uint64_t u = universe.mask();
  std::uint64_t s = 0;
  while (true) {
    f(VertexSet::from_mask(s));
    if (s == u) break;
    s = (s - u) & u;  // next mask that stays inside u
  }
}

// The k-element subsets of `universe` in colex order. Cost O(C(|U|,k) * k);
// does not walk the full power set.
std::vector<VertexSet> k_subsets(VertexSet universe, int k);

// Subsets of `universe` of size <= cap, sorted by size then colex.
std::vector<VertexSet> subsets_up_to(VertexSet universe, int cap);

}  // namespace shadowlab
