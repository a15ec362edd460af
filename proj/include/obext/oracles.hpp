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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "obext/index_set.hpp"
#include "obext/numeric.hpp"

// Reference implementations used as ground truth by the tests. Nothing here
// depends on the blueprint layer.
namespace obext::oracles {

/// Element of the classical exterior algebra of R^n, R = GF(p) or Q. Signs are
/// resolved into the coefficients; zero coefficients are omitted.
struct ClassicalExteriorElement {
  ExactField ring;
  int n = 0;
  std::map<IndexSet, Rational> terms;

  friend bool operator==(const ClassicalExteriorElement&, const ClassicalExteriorElement&) = default;
};

/// Drops zero coefficients and reduces the rest into the ring.
ClassicalExteriorElement make_classical(const ExactField& ring, int n, std::map<IndexSet, Rational> terms);

/// Alternating product with integer signs.
ClassicalExteriorElement classical_wedge(const ClassicalExteriorElement& x, const ClassicalExteriorElement& y);

enum class TropicalKind { kBoolean, kMaxPlus };

/// Element of Giansiracusa's tropical Grassmann algebra over the boolean or
/// max-plus semifield. Absent keys are the bottom element. Boolean values are
/// always 1.
struct TropicalExteriorElement {
  TropicalKind kind = TropicalKind::kMaxPlus;
  int n = 0;
  std::map<IndexSet, Rational> terms;

  friend bool operator==(const TropicalExteriorElement&, const TropicalExteriorElement&) = default;
};

/// Symmetric product with e_i ∧ e_i = 0; coefficients add by max and multiply
/// by + (max-plus) or by "and" (boolean).
TropicalExteriorElement tropical_wedge(const TropicalExteriorElement& x, const TropicalExteriorElement& y);

/// Basis exchange axiom: for all A, B and a in A \ B there is b in B \ A with
/// (A - a) + b in the family.
bool basis_exchange_check(std::span<const IndexSet> family);

/// Tropical Plücker relations of a grade-d element: for all A of size d+1, X of
/// size d-1 and p in A \ X, dropping the p-term of
/// sum_{i in A \ X} v_{A-i} v_{X+i} leaves the semifield sum unchanged.
bool tropical_plucker_check(const TropicalExteriorElement& v, int n, int d);

/// Canonical Plücker tables (values on lexicographically ordered d-subsets,
/// scaled so the first nonzero entry is 1) of all d-dimensional subspaces of
/// GF(p)^n, found by enumerating reduced row echelon forms. Throws
/// Error(kCapExceeded) when p^(d*n) exceeds `cap`.
std::set<std::vector<std::int64_t>> subspace_plucker_enumerate(int p, int n, int d,
                                                              std::uint64_t cap = 1ull << 24);

/// Multiset of nonzero elements of a finite commutative monoid, elements coded
/// 0..size-1, kept sorted.
using CodedSum = std::vector<int>;

/// A finite monoid with a generating family of relations b <= a_1 + ... + a_m
/// (b absent means 0 <= ...), both given as callbacks.
struct FinitePresentation {
  int size = 0;
  std::function<int(int, int)> mul;  // product code, -1 for the zero element
  std::function<bool(std::optional<int>, const CodedSum&)> generator;
};

/// The preorder generated by a presentation, computed by brute force on all
/// sums with at most `max_terms` terms: every scaled generator instance with
/// every context, closed under transitivity. For non-shrinking generators this
/// is exact on pairs whose right side fits the bound.
class PreorderSaturation {
 public:
  PreorderSaturation(const FinitePresentation& presentation, int max_terms);

  const std::vector<CodedSum>& universe() const { return universe_; }
  bool leq(const CodedSum& lhs, const CodedSum& rhs) const;

 private:
  std::vector<CodedSum> universe_;
  std::map<CodedSum, std::size_t> position_;
  std::vector<std::vector<char>> reach_;
};

}  // namespace obext::oracles
