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

#include "obext/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "obext/error.hpp"

namespace obext::oracles {

ClassicalExteriorElement make_classical(const ExactField& ring, int n, std::map<IndexSet, Rational> terms) {
  ClassicalExteriorElement out{ring, n, {}};
  for (auto& [key, value] : terms) {
    Rational v = ring.normalize(value);
    if (v != Rational(0)) out.terms.emplace(key, v);
  }
  return out;
}

namespace {

// Number of pairs (i in I, j in J) with i > j: the transpositions needed to
// move e_J past e_I.
int crossing_count(IndexSet left, IndexSet right) {
  int count = 0;
  for (int i : left.indices()) {
    for (int j : right.indices()) count += (i > j) ? 1 : 0;
  }
  return count;
}

}  // namespace

ClassicalExteriorElement classical_wedge(const ClassicalExteriorElement& x, const ClassicalExteriorElement& y) {
  if (x.n != y.n || x.ring != y.ring) throw Error(ErrorCode::kDimensionMismatch, "classical wedge operand mismatch");
  const ExactField& ring = x.ring;
  std::map<IndexSet, Rational> acc;
  for (const auto& [i, a] : x.terms) {
    for (const auto& [j, b] : y.terms) {
      if (!i.disjoint(j)) continue;
      Rational term = ring.mul(a, b);
      if (crossing_count(i, j) % 2 == 1) term = ring.neg(term);
      auto [it, inserted] = acc.emplace(i | j, term);
      if (!inserted) it->second = ring.add(it->second, term);
    }
  }
  return make_classical(ring, x.n, std::move(acc));
}

TropicalExteriorElement tropical_wedge(const TropicalExteriorElement& x, const TropicalExteriorElement& y) {
  if (x.n != y.n || x.kind != y.kind) throw Error(ErrorCode::kDimensionMismatch, "tropical wedge operand mismatch");
  TropicalExteriorElement out{x.kind, x.n, {}};
  for (const auto& [i, a] : x.terms) {
    for (const auto& [j, b] : y.terms) {
      if (!i.disjoint(j)) continue;
      Rational product = x.kind == TropicalKind::kMaxPlus ? a + b : Rational(1);
      auto [it, inserted] = out.terms.emplace(i | j, product);
      if (!inserted) it->second = std::max(it->second, product);
    }
  }
  return out;
}

bool basis_exchange_check(std::span<const IndexSet> family) {
  std::set<IndexSet> members(family.begin(), family.end());
  for (IndexSet a : members) {
    for (IndexSet b : members) {
      for (int x : a.minus(b).indices()) {
        bool found = false;
        for (int y : b.minus(a).indices()) {
          if (members.count(a.without(x).with(y))) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool tropical_plucker_check(const TropicalExteriorElement& v, int n, int d) {
  auto value = [&](IndexSet s) -> std::optional<Rational> {
    auto it = v.terms.find(s);
    if (it == v.terms.end()) return std::nullopt;
    return it->second;
  };
  auto times = [&](std::optional<Rational> a, std::optional<Rational> b) -> std::optional<Rational> {
    if (!a || !b) return std::nullopt;
    return v.kind == TropicalKind::kMaxPlus ? *a + *b : Rational(1);
  };
  auto plus = [](std::optional<Rational> a, std::optional<Rational> b) -> std::optional<Rational> {
    if (!a) return b;
    if (!b) return a;
    return std::max(*a, *b);
  };
  if (d < 1 || d >= n) return true;  // no pair (A, X) exists
  for (IndexSet a : subsets_of_size(n, d + 1)) {
    for (IndexSet x : subsets_of_size(n, d - 1)) {
      std::vector<int> candidates = a.minus(x).indices();
      std::vector<std::optional<Rational>> terms;
      for (int i : candidates) terms.push_back(times(value(a.without(i)), value(x.with(i))));
      std::optional<Rational> whole;
      for (const auto& t : terms) whole = plus(whole, t);
      for (std::size_t p = 0; p < terms.size(); ++p) {
        std::optional<Rational> rest;
        for (std::size_t q = 0; q < terms.size(); ++q) {
          if (q != p) rest = plus(rest, terms[q]);
        }
        if (rest != whole) return false;
      }
    }
  }
  return true;
}

namespace {

// Leibniz expansion over all permutations, mod p.
std::int64_t leibniz_det(const std::vector<std::vector<std::int64_t>>& m, int p) {
  const int size = static_cast<int>(m.size());
  std::vector<int> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t total = 0;
  do {
    int inversions = 0;
    for (int a = 0; a < size; ++a) {
      for (int b = a + 1; b < size; ++b) inversions += perm[a] > perm[b] ? 1 : 0;
    }
    std::int64_t term = 1;
    for (int r = 0; r < size; ++r) term = term * m[r][perm[r]] % p;
    total += (inversions % 2 == 0) ? term : p - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total % p;
}

}  // namespace

std::set<std::vector<std::int64_t>> subspace_plucker_enumerate(int p, int n, int d, std::uint64_t cap) {
  if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, "subspace enumeration needs a prime field order");
  std::uint64_t work = 1;
  for (int i = 0; i < d * n; ++i) {
    work *= static_cast<std::uint64_t>(p);
    if (work > cap) throw Error(ErrorCode::kCapExceeded, "subspace enumeration exceeds the cap");
  }
  std::set<std::vector<std::int64_t>> out;
  const std::vector<IndexSet> d_subsets = subsets_of_size(n, d);

  for (IndexSet pivots : d_subsets) {
    const std::vector<int> pivot_cols = pivots.indices();
    // Free positions: row r, column c > pivot_r with c not a pivot column.
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < d; ++r) {
      for (int c = pivot_cols[r] + 1; c <= n; ++c) {
        if (!pivots.contains(c)) free.emplace_back(r, c);
      }
    }
    std::vector<std::int64_t> digits(free.size(), 0);
    while (true) {
      std::vector<std::vector<std::int64_t>> matrix(d, std::vector<std::int64_t>(n + 1, 0));
      for (int r = 0; r < d; ++r) matrix[r][pivot_cols[r]] = 1;
      for (std::size_t f = 0; f < free.size(); ++f) matrix[free[f].first][free[f].second] = digits[f];

      std::vector<std::int64_t> minors;
      for (IndexSet cols : d_subsets) {
        std::vector<std::vector<std::int64_t>> sub(d);
        for (int r = 0; r < d; ++r) {
          for (int c : cols.indices()) sub[r].push_back(matrix[r][c]);
        }
        minors.push_back(leibniz_det(sub, p));
      }
      auto first = std::find_if(minors.begin(), minors.end(), [](std::int64_t v) { return v != 0; });
      if (first != minors.end()) {
        std::int64_t scale = mod_inverse(*first, p);
        for (auto& v : minors) v = v * scale % p;
        out.insert(minors);
      }

      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  }
  return out;
}

namespace {

void all_multisets(int size, int max_terms, int start, CodedSum& current, std::vector<CodedSum>& out) {
  out.push_back(current);
  if (static_cast<int>(current.size()) == max_terms) return;
  for (int e = start; e < size; ++e) {
    current.push_back(e);
    all_multisets(size, max_terms, e, current, out);
    current.pop_back();
  }
}

CodedSum merge(const CodedSum& a, const CodedSum& b) {
  CodedSum out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

PreorderSaturation::PreorderSaturation(const FinitePresentation& presentation, int max_terms) {
  CodedSum scratch;
  all_multisets(presentation.size, max_terms, 0, scratch, universe_);
  for (std::size_t i = 0; i < universe_.size(); ++i) position_.emplace(universe_[i], i);
  const std::size_t count = universe_.size();
  reach_.assign(count, std::vector<char>(count, 0));
  for (std::size_t i = 0; i < count; ++i) reach_[i][i] = 1;

  auto scale = [&](int c, const CodedSum& x) {
    CodedSum out;
    for (int e : x) {
      int prod = presentation.mul(c, e);
      if (prod >= 0) out.push_back(prod);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  // Generator instances: single-term (or empty) left sides against every
  // right side in the universe.
  std::vector<std::pair<CodedSum, CodedSum>> generators;
  for (const CodedSum& rhs : universe_) {
    if (presentation.generator(std::nullopt, rhs)) generators.emplace_back(CodedSum{}, rhs);
    for (int b = 0; b < presentation.size; ++b) {
      if (presentation.generator(b, rhs)) generators.emplace_back(CodedSum{b}, rhs);
    }
  }
  for (const auto& [l, r] : generators) {
    for (int c = 0; c < presentation.size; ++c) {
      CodedSum cl = scale(c, l);
      CodedSum cr = scale(c, r);
      for (const CodedSum& z : universe_) {
        if (cl.size() + z.size() > static_cast<std::size_t>(max_terms) ||
            cr.size() + z.size() > static_cast<std::size_t>(max_terms)) {
          continue;
        }
        reach_[position_.at(merge(cl, z))][position_.at(merge(cr, z))] = 1;
      }
    }
  }
  // Transitive closure.
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!reach_[i][k]) continue;
      for (std::size_t j = 0; j < count; ++j) {
        if (reach_[k][j]) reach_[i][j] = 1;
      }
    }
  }
}

bool PreorderSaturation::leq(const CodedSum& lhs, const CodedSum& rhs) const {
  auto a = position_.find(lhs);
  auto b = position_.find(rhs);
  if (a == position_.end() || b == position_.end()) {
    throw Error(ErrorCode::kSizeViolation, "sum outside the saturated universe");
  }
  return reach_[a->second][b->second];
}

}  // namespace obext::oracles
