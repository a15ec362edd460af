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

#include "obext/sampling.hpp"

namespace obext {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Scalar random_scalar(const Blueprint& bp, Rng& rng, bool allow_zero) {
  if (auto carrier = bp.carrier()) {
    std::vector<Scalar> pool;
    for (const Scalar& s : *carrier) {
      if (allow_zero || !s.is_zero()) pool.push_back(s);
    }
    return pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)];
  }
  if (allow_zero && uniform(rng, 0, 5) == 0) return bp.zero();
  const int num = uniform(rng, -4, 4);
  const int den = uniform(rng, 1, 3);
  if (bp.descriptor().kind == PresetKind::kRationalField && num == 0) return bp.one();
  return Scalar::from_value(bp.domain(), Rational(num, den));
}

FormalSum random_sum(const Blueprint& bp, Rng& rng, int max_terms) {
  FormalSum out;
  const int count = uniform(rng, 0, max_terms);
  for (int i = 0; i < count; ++i) out += FormalSum::of(random_scalar(bp, rng, false));
  return out;
}

ExteriorElement random_exterior(const Blueprint& bp, int n, Rng& rng, int max_keys, int max_terms) {
  ExteriorElement out(n);
  const int keys = uniform(rng, 0, max_keys);
  const std::uint32_t full = n == 0 ? 0u : (n >= 32 ? ~0u : (1u << n) - 1u);
  for (int k = 0; k < keys; ++k) {
    IndexSet key = IndexSet::from_mask(std::uniform_int_distribution<std::uint32_t>(0, full)(rng));
    out += ExteriorElement(n, {{key, random_sum(bp, rng, max_terms)}});
  }
  return out;
}

ExteriorElement random_vector(const Blueprint& bp, int n, Rng& rng) {
  std::map<IndexSet, FormalSum> terms;
  for (int i = 1; i <= n; ++i) terms.emplace(IndexSet{i}, FormalSum::of(random_scalar(bp, rng)));
  return ExteriorElement(n, std::move(terms));
}

ExteriorElement random_h_element(const Blueprint& bp, int n, int d, Rng& rng, double zero_rate) {
  std::bernoulli_distribution zero(zero_rate);
  std::map<IndexSet, FormalSum> terms;
  for (IndexSet s : subsets_of_size(n, d)) {
    if (zero(rng)) continue;
    terms.emplace(s, FormalSum::of(random_scalar(bp, rng, false)));
  }
  return ExteriorElement(n, std::move(terms));
}

GPFunction random_maxplus_candidate(const Blueprint& bp, int n, int d, Rng& rng) {
  const std::vector<IndexSet> subsets = subsets_of_size(n, d);
  std::vector<Scalar> values;
  switch (uniform(rng, 0, 2)) {
    case 0: {
      std::vector<Rational> weight(n + 1);
      for (int i = 1; i <= n; ++i) weight[i] = Rational(uniform(rng, -6, 6), uniform(rng, 1, 2));
      for (IndexSet s : subsets) {
        Rational v(0);
        for (int i : s.indices()) v += weight[i];
        values.push_back(Scalar::from_value(bp.domain(), v));
      }
      // Occasionally perturb one value, which usually breaks a relation.
      if (uniform(rng, 0, 1) == 0 && !values.empty()) {
        auto& v = values[uniform(rng, 0, static_cast<int>(values.size()) - 1)];
        v = Scalar::from_value(bp.domain(), v.value() + Rational(uniform(rng, -2, 2)));
      }
      break;
    }
    case 1:
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        values.push_back(uniform(rng, 0, 7) == 0 ? bp.zero()
                                                  : Scalar::from_value(bp.domain(), Rational(uniform(rng, 0, 1))));
      }
      break;
    default:
      for (std::size_t i = 0; i < subsets.size(); ++i) values.push_back(random_scalar(bp, rng));
      break;
  }
  return GPFunction(bp.domain(), n, d, std::move(values));
}

}  // namespace obext
