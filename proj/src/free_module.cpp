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

#include "obext/free_module.hpp"

#include <set>

#include "obext/error.hpp"

namespace obext {

namespace {

void check_index(int i, int n) {
  if (i < 1 || i > n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "basis index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
  }
}

template <class Key>
void add_coeff(std::map<Key, FormalSum>& coeffs, const Key& key, const FormalSum& c) {
  if (c.empty()) return;
  coeffs[key] += c;
}

}  // namespace

FreeModuleElement::FreeModuleElement(int n) : n_(n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative module rank");
}

FreeModuleElement::FreeModuleElement(int n, std::map<int, FormalSum> coeffs) : FreeModuleElement(n) {
  for (auto& [i, c] : coeffs) {
    check_index(i, n);
    if (!c.empty()) coeffs_.emplace(i, std::move(c));
  }
}

FormalSum FreeModuleElement::coeff(int i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? FormalSum{} : it->second;
}

bool FreeModuleElement::in_underlying_set() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second.size() <= 1; });
}

FreeModuleElement& FreeModuleElement::operator+=(const FreeModuleElement& other) {
  if (other.n_ != n_) throw Error(ErrorCode::kDimensionMismatch, "adding elements of B^n for different n");
  for (const auto& [i, c] : other.coeffs_) add_coeff(coeffs_, i, c);
  return *this;
}

FreeModuleElement operator+(const FreeModuleElement& x, const FreeModuleElement& y) {
  FreeModuleElement out = x;
  out += y;
  return out;
}

FreeModuleElement operator*(const FormalSum& b, const FreeModuleElement& x) {
  std::map<int, FormalSum> coeffs;
  for (const auto& [i, c] : x.coeffs()) coeffs.emplace(i, b * c);
  return FreeModuleElement(x.dimension(), std::move(coeffs));
}

FreeModuleElement operator*(const Scalar& b, const FreeModuleElement& x) { return FormalSum::of(b) * x; }

FreeModule::FreeModule(BlueprintPtr bp, int n) : bp_(std::move(bp)), n_(n) {
  if (!bp_) throw Error(ErrorCode::kInvalidArgument, "free module needs a blueprint");
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative module rank");
}

FreeModuleElement FreeModule::basis(int i) const {
  check_index(i, n_);
  return FreeModuleElement(n_, {{i, FormalSum{bp_->one()}}});
}

FreeModuleElement FreeModule::element(std::map<int, FormalSum> coeffs) const {
  for (const auto& [i, c] : coeffs) bp_->require(c);
  return FreeModuleElement(n_, std::move(coeffs));
}

Decision FreeModule::leq(const FreeModuleElement& x, const FreeModuleElement& y) const {
  if (x.dimension() != n_ || y.dimension() != n_) {
    throw Error(ErrorCode::kDimensionMismatch, "module_leq on elements of a different rank");
  }
  std::set<int> keys;
  for (const auto& kv : x.coeffs()) keys.insert(kv.first);
  for (const auto& kv : y.coeffs()) keys.insert(kv.first);
  Decision result = Decision::kHolds;
  for (int i : keys) {
    result = decision_and(result, bp_->leq(x.coeff(i), y.coeff(i)));
    if (result == Decision::kFails) break;
  }
  return result;
}

TensorElement::TensorElement(int n, int m, std::map<std::pair<int, int>, FormalSum> coeffs) : n_(n), m_(m) {
  for (auto& [ij, c] : coeffs) {
    check_index(ij.first, n);
    check_index(ij.second, m);
    if (!c.empty()) coeffs_.emplace(ij, std::move(c));
  }
}

FormalSum TensorElement::coeff(int i, int j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? FormalSum{} : it->second;
}

TensorElement TensorElement::basis(int n, int m, int i, int j, const Scalar& one) {
  return TensorElement(n, m, {{{i, j}, FormalSum{one}}});
}

TensorElement tensor(const FreeModuleElement& x, const FreeModuleElement& y) {
  std::map<std::pair<int, int>, FormalSum> coeffs;
  for (const auto& [i, a] : x.coeffs()) {
    for (const auto& [j, b] : y.coeffs()) add_coeff(coeffs, std::pair{i, j}, a * b);
  }
  return TensorElement(x.dimension(), y.dimension(), std::move(coeffs));
}

DirectSum::DirectSum(FreeModule module, std::vector<int> offsets)
    : module_(std::move(module)), offsets_(std::move(offsets)) {
  for (std::size_t k = 0; k < offsets_.size(); ++k) {
    int end = k + 1 < offsets_.size() ? offsets_[k + 1] : module_.rank();
    ranks_.push_back(end - offsets_[k]);
  }
}

FreeModuleElement DirectSum::inject(std::size_t k, const FreeModuleElement& x) const {
  if (k >= offsets_.size()) throw Error(ErrorCode::kIndexOutOfRange, "no such summand");
  if (x.dimension() != ranks_[k]) throw Error(ErrorCode::kDimensionMismatch, "element does not belong to summand");
  std::map<int, FormalSum> coeffs;
  for (const auto& [i, c] : x.coeffs()) coeffs.emplace(i + offsets_[k], c);
  return FreeModuleElement(module_.rank(), std::move(coeffs));
}

DirectSum direct_sum(std::span<const FreeModule> modules) {
  if (modules.empty()) throw Error(ErrorCode::kInvalidArgument, "direct sum of no modules");
  const BlueprintPtr& bp = modules.front().blueprint_ptr();
  std::vector<int> offsets;
  int total = 0;
  for (const FreeModule& m : modules) {
    if (m.blueprint().domain() != bp->domain()) {
      throw Error(ErrorCode::kInstanceMismatch, "direct sum of modules over different presets");
    }
    offsets.push_back(total);
    total += m.rank();
  }
  return DirectSum(FreeModule(bp, total), std::move(offsets));
}

FreeModuleElement BilinearTable::apply(const FreeModuleElement& x, const FreeModuleElement& y) const {
  FreeModuleElement out(k);
  for (const auto& [i, a] : x.coeffs()) {
    for (const auto& [j, b] : y.coeffs()) out += (a * b) * table.at(i - 1).at(j - 1);
  }
  return out;
}

TensorMorphism induced_morphism(const BilinearTable& phi) {
  return [phi](const TensorElement& t) {
    FreeModuleElement out(phi.k);
    for (const auto& [ij, c] : t.coeffs()) out += c * phi.table.at(ij.first - 1).at(ij.second - 1);
    return out;
  };
}

BilinearTable restrict_to_basis(const TensorMorphism& zeta, const Scalar& one, int n, int m, int k) {
  BilinearTable out{n, m, k, {}};
  out.table.resize(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) out.table[i - 1].push_back(zeta(TensorElement::basis(n, m, i, j, one)));
  }
  return out;
}

BilinearReport bilinear_correspondence_check(const Blueprint& bp, int n, int m, int k,
                                             std::span<const BilinearTable> sample,
                                             std::span<const TensorMorphism> morphisms,
                                             std::span<const TensorElement> probes) {
  std::vector<TensorElement> points;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) points.push_back(TensorElement::basis(n, m, i, j, bp.one()));
  }
  points.insert(points.end(), probes.begin(), probes.end());

  auto signature = [&](const TensorMorphism& f) {
    std::vector<FreeModuleElement> values;
    values.reserve(points.size());
    for (const TensorElement& t : points) values.push_back(f(t));
    return values;
  };
  auto to_key = [](const std::vector<FreeModuleElement>& values) {
    // Ordered key for the set of signatures: coefficient maps in order.
    std::vector<std::vector<std::pair<int, FormalSum>>> key;
    for (const auto& v : values) key.emplace_back(v.coeffs().begin(), v.coeffs().end());
    return key;
  };

  BilinearReport report;
  std::set<std::vector<std::vector<std::pair<int, FormalSum>>>> tables;
  std::set<std::vector<std::vector<std::pair<int, FormalSum>>>> seen;
  for (const BilinearTable& phi : sample) {
    if (phi.n != n || phi.m != m || phi.k != k) {
      throw Error(ErrorCode::kDimensionMismatch, "bilinear table has the wrong shape");
    }
    ++report.maps_checked;
    std::vector<FreeModuleElement> flat;
    for (const auto& row : phi.table) flat.insert(flat.end(), row.begin(), row.end());
    tables.insert(to_key(flat));
    seen.insert(to_key(signature(induced_morphism(phi))));
  }
  report.distinct_tables = tables.size();
  report.distinct_morphisms = seen.size();
  report.injective = report.distinct_morphisms == report.distinct_tables;

  for (const TensorMorphism& zeta : morphisms) {
    ++report.morphisms_checked;
    BilinearTable restricted = restrict_to_basis(zeta, bp.one(), n, m, k);
    if (signature(induced_morphism(restricted)) == signature(zeta)) ++report.morphisms_recovered;
  }
  report.surjective = report.morphisms_recovered == report.morphisms_checked;
  return report;
}

}  // namespace obext
