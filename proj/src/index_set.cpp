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

#include "obext/index_set.hpp"

#include <sstream>

#include "obext/error.hpp"

namespace obext {

IndexSet::IndexSet(std::initializer_list<int> indices)
    : IndexSet(from_indices(std::span<const int>(indices.begin(), indices.size()))) {}

IndexSet IndexSet::from_indices(std::span<const int> indices) {
  std::uint32_t mask = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxDimension) {
      throw Error(ErrorCode::kIndexOutOfRange, "index " + std::to_string(i) + " out of range");
    }
    mask |= 1u << (i - 1);
  }
  return from_mask(mask);
}

IndexSet IndexSet::range(int n) {
  if (n < 0 || n > kMaxDimension) {
    throw Error(ErrorCode::kIndexOutOfRange, "dimension " + std::to_string(n) + " unsupported");
  }
  return from_mask(n == 32 ? ~0u : (1u << n) - 1u);
}

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string IndexSet::to_key() const {
  std::string out;
  for (int i : indices()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

std::strong_ordering operator<=>(IndexSet a, IndexSet b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  if (a.mask_ == b.mask_) return std::strong_ordering::equal;
  // Same size, so neither is a prefix of the other: the set holding the
  // smallest differing element comes first.
  std::uint32_t diff = a.mask_ ^ b.mask_;
  std::uint32_t lowest = diff & (~diff + 1);
  return (a.mask_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

IndexSet parse_index_key(const std::string& key) {
  std::vector<int> indices;
  std::stringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(part, &pos);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kMalformedKey, "malformed index key '" + key + "'");
    }
    while (pos < part.size() && part[pos] == ' ') ++pos;
    if (pos != part.size()) throw Error(ErrorCode::kMalformedKey, "malformed index key '" + key + "'");
    if (!indices.empty() && value <= indices.back()) {
      throw Error(ErrorCode::kMalformedKey, "index key '" + key + "' is not strictly increasing");
    }
    indices.push_back(value);
  }
  try {
    return IndexSet::from_indices(indices);
  } catch (const Error&) {
    throw Error(ErrorCode::kMalformedKey, "index out of range in key '" + key + "'");
  }
}

namespace {

void collect(int start, int n, int left, std::uint32_t mask, std::vector<IndexSet>& out) {
  if (left == 0) {
    out.push_back(IndexSet::from_mask(mask));
    return;
  }
  for (int i = start; i <= n - left + 1; ++i) collect(i + 1, n, left - 1, mask | (1u << (i - 1)), out);
}

}  // namespace

std::vector<IndexSet> subsets_of_size(int n, int d) {
  std::vector<IndexSet> out;
  if (d < 0 || d > n) return out;
  out.reserve(binomial(n, d));
  collect(1, n, d, 0, out);
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t lex_rank(IndexSet s, int n) {
  // Count the d-subsets that precede s: at each position, those choosing a
  // smaller element there.
  std::size_t rank = 0;
  int d = s.size();
  int prev = 0;
  int pos = 0;
  for (int x : s.indices()) {
    for (int y = prev + 1; y < x; ++y) rank += binomial(n - y, d - pos - 1);
    prev = x;
    ++pos;
  }
  return rank;
}

}  // namespace obext
