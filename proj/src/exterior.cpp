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

#include "obext/exterior.hpp"

#include <set>

#include "obext/error.hpp"

namespace obext {

SignedPermutationResult sort_with_parity(std::span<const int> sequence) {
  SignedPermutationResult out;
  std::uint32_t mask = 0;
  int inversions = 0;
  for (std::size_t a = 0; a < sequence.size(); ++a) {
    const std::uint32_t bit = 1u << (sequence[a] - 1);
    if (mask & bit) return out;
    mask |= bit;
    for (std::size_t b = a + 1; b < sequence.size(); ++b) inversions += sequence[a] > sequence[b] ? 1 : 0;
  }
  out.parity = inversions % 2 == 0 ? Parity::kEven : Parity::kOdd;
  out.sorted = IndexSet::from_mask(mask);
  return out;
}

std::optional<WedgeMonomial> normalize_wedge(std::span<const int> sequence, const Scalar& coeff, int n) {
  for (int i : sequence) {
    if (i < 1 || i > n) {
      throw Error(ErrorCode::kIndexOutOfRange, "index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
    }
  }
  if (coeff.is_zero()) return std::nullopt;
  SignedPermutationResult sorted = sort_with_parity(sequence);
  if (!sorted.sorted) return std::nullopt;
  Scalar c = sorted.parity == Parity::kOdd ? Scalar::eps(coeff.domain()) * coeff : coeff;
  return WedgeMonomial{c, *sorted.sorted};
}

ExteriorElement::ExteriorElement(int n) : n_(n) {
  if (n < 0 || n > kMaxDimension) {
    throw Error(ErrorCode::kIndexOutOfRange, "dimension " + std::to_string(n) + " unsupported");
  }
}

ExteriorElement::ExteriorElement(int n, std::map<IndexSet, FormalSum> terms) : ExteriorElement(n) {
  const IndexSet all = IndexSet::range(n);
  for (auto& [key, c] : terms) {
    if (!key.subset_of(all)) {
      throw Error(ErrorCode::kMalformedKey, "key {" + key.to_key() + "} is not a subset of [" + std::to_string(n) + "]");
    }
    if (!c.empty()) terms_.emplace(key, std::move(c));
  }
}

ExteriorElement ExteriorElement::monomial(int n, IndexSet indices, const Scalar& coeff) {
  return ExteriorElement(n, {{indices, FormalSum::of(coeff)}});
}

FormalSum ExteriorElement::coeff(IndexSet indices) const {
  auto it = terms_.find(indices);
  return it == terms_.end() ? FormalSum{} : it->second;
}

std::optional<int> ExteriorElement::pure_grade() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.size();
  for (const auto& kv : terms_) {
    if (kv.first.size() != d) return std::nullopt;
  }
  return d;
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& other) {
  if (other.n_ != n_) throw Error(ErrorCode::kDimensionMismatch, "adding exterior elements of different dimension");
  for (const auto& [key, c] : other.terms_) terms_[key] += c;
  return *this;
}

ExteriorElement operator+(const ExteriorElement& x, const ExteriorElement& y) {
  ExteriorElement out = x;
  out += y;
  return out;
}

ExteriorElement operator*(const Scalar& a, const ExteriorElement& x) {
  std::map<IndexSet, FormalSum> terms;
  for (const auto& [key, c] : x.terms()) terms.emplace(key, a * c);
  return ExteriorElement(x.dimension(), std::move(terms));
}

ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y) {
  if (x.dimension() != y.dimension()) throw Error(ErrorCode::kDimensionMismatch, "wedge of different dimensions");
  const int n = x.dimension();
  std::map<IndexSet, FormalSum> acc;
  std::vector<int> sequence;
  for (const auto& [i, a] : x.terms()) {
    for (const auto& [j, b] : y.terms()) {
      if (!i.disjoint(j)) continue;
      FormalSum product = a * b;
      if (product.empty()) continue;
      sequence = i.indices();
      for (int k : j.indices()) sequence.push_back(k);
      // The sign only depends on the index sequence, so normalize with
      // coefficient 1 and scale the whole product.
      auto normal = normalize_wedge(sequence, Scalar::one(product.terms().front().domain()), n);
      acc[normal->indices] += normal->coeff * product;
    }
  }
  return ExteriorElement(n, std::move(acc));
}

ExteriorElement grade(const ExteriorElement& x, int d) {
  std::map<IndexSet, FormalSum> terms;
  for (const auto& [key, c] : x.terms()) {
    if (key.size() == d) terms.emplace(key, c);
  }
  return ExteriorElement(x.dimension(), std::move(terms));
}

ExteriorElement gamma(const Blueprint& bp, int n, int d, const std::map<IndexSet, FormalSum>& coeffs) {
  if (d < 0 || d > n) throw Error(ErrorCode::kMalformedKey, "grade out of range");
  for (const auto& [key, c] : coeffs) {
    if (key.size() != d) {
      throw Error(ErrorCode::kMalformedKey, "key {" + key.to_key() + "} is not a " + std::to_string(d) + "-subset");
    }
    bp.require(c);
  }
  return ExteriorElement(n, coeffs);
}

bool in_H(const ExteriorElement& x, int d) {
  for (const auto& [key, c] : x.terms()) {
    if (key.size() != d || c.size() != 1) return false;
  }
  return true;
}

bool in_K(const Blueprint& bp, const ExteriorElement& x, int d) {
  if (!in_H(x, d)) return false;
  for (const auto& kv : x.terms()) {
    if (bp.is_unit(kv.second.terms().front())) return false;
  }
  return true;
}

Decision exterior_leq(const Blueprint& bp, const ExteriorElement& x, const ExteriorElement& y) {
  if (x.dimension() != y.dimension()) throw Error(ErrorCode::kDimensionMismatch, "order on different dimensions");
  std::set<IndexSet> keys;
  for (const auto& kv : x.terms()) keys.insert(kv.first);
  for (const auto& kv : y.terms()) keys.insert(kv.first);
  Decision result = Decision::kHolds;
  for (IndexSet key : keys) {
    result = decision_and(result, bp.leq(x.coeff(key), y.coeff(key)));
    if (result == Decision::kFails) break;
  }
  return result;
}

oracles::ClassicalExteriorElement hull_realize(const Blueprint& bp, const ExteriorElement& x) {
  if (!bp.is_field()) throw Error(ErrorCode::kWrongPresetKind, "hull realization needs a field preset");
  ExactField ring(bp.descriptor().kind == PresetKind::kPrimeField ? bp.descriptor().p : 0);
  std::map<IndexSet, Rational> terms;
  for (const auto& [key, c] : x.terms()) terms.emplace(key, hull_scalar(bp, c));
  return oracles::make_classical(ring, x.dimension(), std::move(terms));
}

oracles::TropicalExteriorElement idem_realize(const Blueprint& bp, const ExteriorElement& x) {
  if (!bp.is_idempotent()) throw Error(ErrorCode::kWrongPresetKind, "idempotent realization needs an idempotent preset");
  oracles::TropicalExteriorElement out;
  out.kind = bp.domain().kind == PresetKind::kBoolean ? oracles::TropicalKind::kBoolean
                                                      : oracles::TropicalKind::kMaxPlus;
  out.n = x.dimension();
  for (const auto& [key, c] : x.terms()) {
    if (auto v = idem_collapse(bp, c)) out.terms.emplace(key, *v);
  }
  return out;
}

}  // namespace obext
