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

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "obext/blueprint.hpp"
#include "obext/index_set.hpp"
#include "obext/oracles.hpp"

namespace obext {

/// coeff · e_I with I strictly increasing and coeff nonzero.
struct WedgeMonomial {
  Scalar coeff;
  IndexSet indices;

  friend bool operator==(const WedgeMonomial&, const WedgeMonomial&) = default;
};

enum class Parity { kEven, kOdd };

/// Sorting a sequence of basis indices: the parity of its inversion count, or
/// no result when an index repeats.
struct SignedPermutationResult {
  Parity parity = Parity::kEven;
  std::optional<IndexSet> sorted;  // empty on a repeated index
};

SignedPermutationResult sort_with_parity(std::span<const int> sequence);

/// Rewrites coeff · e_{s_1} ∧ ... ∧ e_{s_k} into normal form: zero when an
/// index repeats, otherwise the sorted monomial with coeff · ε^(inversions).
/// Throws Error(kIndexOutOfRange) for indices outside [1, n].
std::optional<WedgeMonomial> normalize_wedge(std::span<const int> sequence, const Scalar& coeff, int n);

/// An element of Λ B^n in the basis e_I: index set to coefficient in B⁺, with
/// empty coefficients omitted. Grade-0 and grade-1 parts sit on the empty key
/// and on singleton keys.
class ExteriorElement {
 public:
  explicit ExteriorElement(int n = 0);
  ExteriorElement(int n, std::map<IndexSet, FormalSum> terms);

  /// coeff · e_I.
  static ExteriorElement monomial(int n, IndexSet indices, const Scalar& coeff);

  int dimension() const { return n_; }
  const std::map<IndexSet, FormalSum>& terms() const { return terms_; }
  FormalSum coeff(IndexSet indices) const;
  bool is_zero() const { return terms_.empty(); }
  /// The unique grade when every key has the same size; nullopt for zero or
  /// mixed elements.
  std::optional<int> pure_grade() const;

  ExteriorElement& operator+=(const ExteriorElement& other);

  friend bool operator==(const ExteriorElement&, const ExteriorElement&) = default;

 private:
  int n_;
  std::map<IndexSet, FormalSum> terms_;
};

ExteriorElement operator+(const ExteriorElement& x, const ExteriorElement& y);
ExteriorElement operator*(const Scalar& a, const ExteriorElement& x);

/// Product of Λ B^n, expanded bilinearly over term pairs.
ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y);

/// Restriction to keys of size d.
ExteriorElement grade(const ExteriorElement& x, int d);

/// Σ b_I e_I over d-subsets I. Throws Error(kMalformedKey) on keys of another
/// size or outside [n].
ExteriorElement gamma(const Blueprint& bp, int n, int d, const std::map<IndexSet, FormalSum>& coeffs);

/// Membership in H_{d,n}: grade d with every coefficient a single monoid term.
bool in_H(const ExteriorElement& x, int d);
/// Membership in K_{d,n}: in H_{d,n} and no coefficient is a unit.
bool in_K(const Blueprint& bp, const ExteriorElement& x, int d);

/// Basis-componentwise order: x <= y iff x_I <= y_I for every I.
Decision exterior_leq(const Blueprint& bp, const ExteriorElement& x, const ExteriorElement& y);

/// Evaluates every coefficient in the field of a field preset.
oracles::ClassicalExteriorElement hull_realize(const Blueprint& bp, const ExteriorElement& x);

/// Collapses every coefficient into the idempotent semifield.
oracles::TropicalExteriorElement idem_realize(const Blueprint& bp, const ExteriorElement& x);

}  // namespace obext
