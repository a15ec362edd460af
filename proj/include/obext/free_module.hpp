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

#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "obext/blueprint.hpp"

namespace obext {

/// Element of the ambient module of B^n: basis index (1-based) to coefficient,
/// zero coefficients omitted.
class FreeModuleElement {
 public:
  explicit FreeModuleElement(int n = 0);
  FreeModuleElement(int n, std::map<int, FormalSum> coeffs);

  int dimension() const { return n_; }
  const std::map<int, FormalSum>& coeffs() const { return coeffs_; }
  /// Coefficient at index i (empty sum if absent).
  FormalSum coeff(int i) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Membership in the underlying set (B^n)^•: every coefficient is a single
  /// monoid term.
  bool in_underlying_set() const;

  FreeModuleElement& operator+=(const FreeModuleElement& other);

  friend bool operator==(const FreeModuleElement&, const FreeModuleElement&) = default;

 private:
  int n_;
  std::map<int, FormalSum> coeffs_;
};

FreeModuleElement operator+(const FreeModuleElement& x, const FreeModuleElement& y);
FreeModuleElement operator*(const FormalSum& b, const FreeModuleElement& x);
FreeModuleElement operator*(const Scalar& b, const FreeModuleElement& x);

/// Handle on B^n with its canonical basis and product order.
class FreeModule {
 public:
  FreeModule(BlueprintPtr bp, int n);

  const Blueprint& blueprint() const { return *bp_; }
  const BlueprintPtr& blueprint_ptr() const { return bp_; }
  int rank() const { return n_; }

  /// e_i, 1 <= i <= n.
  FreeModuleElement basis(int i) const;
  FreeModuleElement zero() const { return FreeModuleElement(n_); }
  /// Validates indices and scalars.
  FreeModuleElement element(std::map<int, FormalSum> coeffs) const;

  /// Componentwise order: x <= y iff x_i <= y_i for every i.
  Decision leq(const FreeModuleElement& x, const FreeModuleElement& y) const;

 private:
  BlueprintPtr bp_;
  int n_;
};

inline FreeModule free_module(BlueprintPtr bp, int n) { return FreeModule(std::move(bp), n); }

inline Decision module_leq(const FreeModule& m, const FreeModuleElement& x, const FreeModuleElement& y) {
  return m.leq(x, y);
}

/// Element of B^n ⊗ B^m in basis-pair coordinates.
class TensorElement {
 public:
  TensorElement(int n, int m, std::map<std::pair<int, int>, FormalSum> coeffs = {});

  int left_dimension() const { return n_; }
  int right_dimension() const { return m_; }
  const std::map<std::pair<int, int>, FormalSum>& coeffs() const { return coeffs_; }
  FormalSum coeff(int i, int j) const;

  static TensorElement basis(int n, int m, int i, int j, const Scalar& one);

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  int n_;
  int m_;
  std::map<std::pair<int, int>, FormalSum> coeffs_;
};

/// Bilinear expansion; scalars end up in the pair coefficients, so
/// (b.x) ⊗ y and x ⊗ (b.y) have the same normal form.
TensorElement tensor(const FreeModuleElement& x, const FreeModuleElement& y);

/// Coproduct of free modules: B^{n_1} ⊕ ... ⊕ B^{n_k} = B^{n_1 + ... + n_k}.
class DirectSum {
 public:
  DirectSum(FreeModule module, std::vector<int> offsets);

  const FreeModule& module() const { return module_; }
  std::size_t summands() const { return offsets_.size(); }
  int offset(std::size_t k) const { return offsets_.at(k); }
  /// Image of an element of summand k.
  FreeModuleElement inject(std::size_t k, const FreeModuleElement& x) const;

 private:
  FreeModule module_;
  std::vector<int> offsets_;
  std::vector<int> ranks_;
};

/// Throws Error(kInstanceMismatch) if the modules live over different presets.
DirectSum direct_sum(std::span<const FreeModule> modules);

/// A bilinear map B^n x B^m -> B^k, given by its values on basis pairs,
/// table[i-1][j-1] = phi(e_i, e_j).
struct BilinearTable {
  int n = 0;
  int m = 0;
  int k = 1;
  std::vector<std::vector<FreeModuleElement>> table;

  /// phi(x, y) by bilinear expansion.
  FreeModuleElement apply(const FreeModuleElement& x, const FreeModuleElement& y) const;
};

/// A morphism from B^n ⊗ B^m to B^k given as a black box.
using TensorMorphism = std::function<FreeModuleElement(const TensorElement&)>;

/// The morphism induced on the tensor module by a bilinear table.
TensorMorphism induced_morphism(const BilinearTable& phi);

/// Restriction of a tensor morphism to basis pairs.
BilinearTable restrict_to_basis(const TensorMorphism& zeta, const Scalar& one, int n, int m, int k);

struct BilinearReport {
  std::size_t maps_checked = 0;
  std::size_t distinct_tables = 0;
  std::size_t distinct_morphisms = 0;
  bool injective = false;
  std::size_t morphisms_checked = 0;
  std::size_t morphisms_recovered = 0;
  bool surjective = false;
};

/// Checks that bilinear maps and morphisms on the tensor module correspond:
/// distinct tables induce distinct morphisms, and each sampled morphism is the
/// one induced by its restriction to basis pairs. Morphisms are compared on
/// every basis tensor and on `probes`.
BilinearReport bilinear_correspondence_check(const Blueprint& bp, int n, int m, int k,
                                             std::span<const BilinearTable> sample,
                                             std::span<const TensorMorphism> morphisms,
                                             std::span<const TensorElement> probes);

}  // namespace obext
