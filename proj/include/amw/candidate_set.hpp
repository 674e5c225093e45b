// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AMW_CANDIDATE_SET_HPP_
#define AMW_CANDIDATE_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace amw {

inline constexpr int kMaxCandidates = 64;

/// A set of candidate indices (0-based roster positions), stored as a bitmask.
class CandidateSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
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
    std::uint64_t rest_ = 0;
  };

  constexpr CandidateSet() = default;
  constexpr explicit CandidateSet(std::uint64_t bits) : bits_(bits) {}
  constexpr CandidateSet(std::initializer_list<int> members) {
    for (int c : members) bits_ |= bit(c);
  }

  static constexpr CandidateSet single(int c) { return CandidateSet(bit(c)); }
  /// {0, ..., m-1}.
  static constexpr CandidateSet first(int m) {
    return CandidateSet(m >= 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << m) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int c) const { return (bits_ & bit(c)) != 0; }
  constexpr bool subset_of(CandidateSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr bool intersects(CandidateSet o) const {
    return (bits_ & o.bits_) != 0;
  }
  constexpr CandidateSet with(int c) const { return CandidateSet(bits_ | bit(c)); }
  constexpr CandidateSet without(int c) const {
    return CandidateSet(bits_ & ~bit(c));
  }
  /// Smallest member; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }
  std::vector<int> members() const { return {begin(), end()}; }

  friend constexpr CandidateSet operator|(CandidateSet a, CandidateSet b) {
    return CandidateSet(a.bits_ | b.bits_);
  }
  friend constexpr CandidateSet operator&(CandidateSet a, CandidateSet b) {
    return CandidateSet(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr CandidateSet operator-(CandidateSet a, CandidateSet b) {
    return CandidateSet(a.bits_ & ~b.bits_);
  }
  friend constexpr CandidateSet operator^(CandidateSet a, CandidateSet b) {
    return CandidateSet(a.bits_ ^ b.bits_);
  }
  constexpr CandidateSet& operator|=(CandidateSet o) {
    bits_ |= o.bits_;
    return *this;
  }

  friend constexpr bool operator==(CandidateSet, CandidateSet) = default;
  /// Numeric order on the bitmask (a total order for containers). Use
  /// lex_less for the canonical committee order.
  friend constexpr auto operator<=>(CandidateSet, CandidateSet) = default;

 private:
  static constexpr std::uint64_t bit(int c) { return std::uint64_t{1} << c; }
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted member indices. For equal-size sets this
/// reduces to: the set holding the smallest element of the symmetric
/// difference comes first. Proper prefixes come first.
constexpr bool lex_less(CandidateSet a, CandidateSet b) {
  const CandidateSet diff = a ^ b;
  if (diff.empty()) return false;
  const int c = diff.min();
  const CandidateSet below = CandidateSet::first(c);
  if (a.contains(c)) {
    // b lacks c: a < b unless b has no members past the common prefix.
    return !(b - below).empty();
  }
  return (a - below).empty();
}

/// Symmetric-difference cardinality.
constexpr int hamming(CandidateSet a, CandidateSet b) { return (a ^ b).size(); }

}  // namespace amw

#endif  // AMW_CANDIDATE_SET_HPP_
