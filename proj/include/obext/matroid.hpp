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
#include <optional>
#include <vector>

#include "obext/blueprint.hpp"
#include "obext/exterior.hpp"
#include "obext/index_set.hpp"

namespace obext {

/// A function on all d-subsets of [n] with values in B^•, stored in
/// lexicographic subset order.
class GPFunction {
 public:
  GPFunction() = default;
  /// Throws Error(kDimensionMismatch) unless values has C(n, d) entries.
  GPFunction(Domain domain, int n, int d, std::vector<Scalar> values);
  /// The constant function `value`.
  static GPFunction constant(Domain domain, int n, int d, const Scalar& value);

  Domain domain() const { return domain_; }
  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<Scalar>& values() const { return values_; }
  /// Throws Error(kSizeViolation) unless I is a d-subset of [n].
  const Scalar& at(IndexSet I) const;
  void set(IndexSet I, const Scalar& value);
  /// Support as a family of d-subsets, lexicographic.
  std::vector<IndexSet> support() const;

  friend bool operator==(const GPFunction&, const GPFunction&) = default;
  friend auto operator<=>(const GPFunction& a, const GPFunction& b) {
    if (auto c = std::tie(a.n_, a.d_) <=> std::tie(b.n_, b.d_); c != 0) return c;
    return std::lexicographical_compare_three_way(a.values_.begin(), a.values_.end(), b.values_.begin(),
                                                  b.values_.end());
  }

 private:
  Domain domain_{};
  int n_ = 0;
  int d_ = 0;
  std::vector<Scalar> values_;
};

GPFunction operator*(const Scalar& a, const GPFunction& f);

/// Value of the contraction φ_{X,Y} on e_I ⊗ e_J: ε^(k + a) when I = X ∪ {i_k}
/// and J = Y ∖ {i_k} for the k-th element i_k ∉ X of Y (1-based), where a
/// counts the elements of X above i_k; else 0. Throws Error(kSizeViolation)
/// unless |X| + 1 = |I| = |J| = |Y| - 1.
Scalar phi_xy(const Blueprint& bp, IndexSet X, IndexSet Y, IndexSet I, IndexSet J);

/// Σ_{i_k ∈ Y ∖ X} ε^(k + a) Δ(X ∪ {i_k}) Δ(Y ∖ {i_k}), a as for phi_xy, with
/// zero products dropped.
FormalSum plucker_sum(const Blueprint& bp, const GPFunction& delta, IndexSet X, IndexSet Y);

/// All pairs (X, Y) with |X| = d - 1 and |Y| = d + 1, X-major in
/// lexicographic order. Empty when d = 0 or d = n.
std::vector<std::pair<IndexSet, IndexSet>> plucker_pairs(int n, int d);

enum class Verdict { kValid, kInvalid, kIndeterminate };

std::string_view verdict_name(Verdict v);

struct PluckerWitness {
  IndexSet X;
  IndexSet Y;
  FormalSum sum;

  friend bool operator==(const PluckerWitness&, const PluckerWitness&) = default;
};

struct PluckerReport {
  Verdict verdict = Verdict::kInvalid;
  bool unit_found = false;
  /// Every coefficient a single monoid term (always true for GP functions).
  bool single_terms = true;
  /// Relations that do not hold.
  std::vector<PluckerWitness> witnesses;
  /// Relations the decision procedure could not settle.
  std::vector<PluckerWitness> undecided;

  bool valid() const { return verdict == Verdict::kValid; }
};

enum class ReportMode { kAllWitnesses, kFirstFailure };

/// Unit value somewhere and 0 <= plucker_sum(Δ, X, Y) for every pair.
PluckerReport is_gp_function(const Blueprint& bp, const GPFunction& delta,
                             ReportMode mode = ReportMode::kAllWitnesses);

/// Plücker vector test on a grade-d element: v ∈ H_{d,n} ∖ K_{d,n} and
/// 0 <= φ_{X,Y}(v ⊗ v) for every pair, with v ⊗ v expanded over all term pairs.
/// Throws Error(kNotPureGrade) if v has a key of size other than d.
PluckerReport is_plucker_vector(const Blueprint& bp, const ExteriorElement& v, int d,
                                ReportMode mode = ReportMode::kAllWitnesses);
/// Grade taken from v itself; throws Error(kNotPureGrade) for zero or mixed v.
PluckerReport is_plucker_vector(const Blueprint& bp, const ExteriorElement& v,
                                ReportMode mode = ReportMode::kAllWitnesses);

/// I ↦ v_I. Throws Error(kNotInH) unless v ∈ H_{d,n}.
GPFunction gp_from_vector(const Blueprint& bp, const ExteriorElement& v, int d);
/// Σ Δ(I) e_I.
ExteriorElement vector_from_gp(const GPFunction& delta);

/// Rescales so the value at the lexicographically first unit is 1. Throws
/// Error(kNoUnit) if no value is a unit.
GPFunction canonical_class(const Blueprint& bp, const GPFunction& delta);

struct EnumerateOptions {
  std::uint64_t cap = 1ull << 24;  // candidate tables
  unsigned jobs = 1;
};

/// Canonical forms of all GP functions of rank d on [n] over a finite preset,
/// sorted. Throws Error(kWrongPresetKind) on infinite presets and
/// Error(kCapExceeded) when the candidate count exceeds the cap.
std::vector<GPFunction> enumerate_gp(const Blueprint& bp, int n, int d, const EnumerateOptions& options = {});

/// Maximal minors of a d x n matrix over a field preset, rows given as
/// vectors of field elements. Throws Error(kRankDeficient) if the rank is
/// below d and Error(kWrongPresetKind) on non-field presets.
GPFunction realize_from_matrix(const Blueprint& bp, const std::vector<std::vector<Rational>>& matrix);

}  // namespace obext
