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

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace obext {

/// Largest ambient dimension supported by IndexSet.
inline constexpr int kMaxDimension = 31;

/// A finite subset of [n] = {1, ..., n}, stored as a bitmask (bit i-1 for i).
///
/// Sets are ordered by size first and lexicographically (on their increasing
/// enumeration) within a size, which is the order terms are listed in.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  IndexSet(std::initializer_list<int> indices);
  static IndexSet from_indices(std::span<const int> indices);
  static constexpr IndexSet from_mask(std::uint32_t mask) {
    IndexSet s;
    s.mask_ = mask;
    return s;
  }
  /// {1, ..., n}.
  static IndexSet range(int n);

  std::uint32_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  /// Largest element, 0 for the empty set.
  int max_element() const { return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_); }

  IndexSet with(int i) const { return from_mask(mask_ | (1u << (i - 1))); }
  IndexSet without(int i) const { return from_mask(mask_ & ~(1u << (i - 1))); }
  bool disjoint(IndexSet other) const { return (mask_ & other.mask_) == 0; }
  bool subset_of(IndexSet other) const { return (mask_ & ~other.mask_) == 0; }
  IndexSet operator|(IndexSet o) const { return from_mask(mask_ | o.mask_); }
  IndexSet operator&(IndexSet o) const { return from_mask(mask_ & o.mask_); }
  IndexSet minus(IndexSet o) const { return from_mask(mask_ & ~o.mask_); }

  /// Increasing enumeration.
  std::vector<int> indices() const;
  /// "1,2,4"; the empty set prints as "".
  std::string to_key() const;

  friend bool operator==(IndexSet, IndexSet) = default;
  friend std::strong_ordering operator<=>(IndexSet a, IndexSet b);

 private:
  std::uint32_t mask_ = 0;
};

/// Parses "1,2,4" (whitespace tolerated). Throws Error(kMalformedKey).
IndexSet parse_index_key(const std::string& key);

/// All d-subsets of [n] in lexicographic order.
std::vector<IndexSet> subsets_of_size(int n, int d);

/// Position of `s` in subsets_of_size(n, s.size()).
std::size_t lex_rank(IndexSet s, int n);

std::uint64_t binomial(int n, int k);

}  // namespace obext
