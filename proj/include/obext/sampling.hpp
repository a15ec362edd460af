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

#include <random>

#include "obext/blueprint.hpp"
#include "obext/exterior.hpp"
#include "obext/matroid.hpp"

namespace obext {

using Rng = std::mt19937_64;

/// A random element of B^•. Infinite presets draw from small numerators and
/// denominators so that ties and cancellations occur.
Scalar random_scalar(const Blueprint& bp, Rng& rng, bool allow_zero = true);

/// Up to `max_terms` nonzero terms.
FormalSum random_sum(const Blueprint& bp, Rng& rng, int max_terms);

/// Random keys of any grade, coefficients with up to `max_terms` terms.
ExteriorElement random_exterior(const Blueprint& bp, int n, Rng& rng, int max_keys = 4, int max_terms = 2);

/// Random grade-1 element with single-term coefficients.
ExteriorElement random_vector(const Blueprint& bp, int n, Rng& rng);

/// Random element of H_{d,n}; zero coefficients appear with probability
/// `zero_rate`.
ExteriorElement random_h_element(const Blueprint& bp, int n, int d, Rng& rng, double zero_rate = 0.3);

/// Random max-plus candidate of rank d: a mix of structured tables (sums of
/// per-index weights, which satisfy the relations), small-range values with
/// many ties, and unstructured values.
GPFunction random_maxplus_candidate(const Blueprint& bp, int n, int d, Rng& rng);

}  // namespace obext
