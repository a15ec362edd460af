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
#include <string>
#include <vector>

#include "obext/blueprint.hpp"
#include "obext/sampling.hpp"

// Differential suites: library results against the reference implementations
// in obext::oracles.
namespace obext {

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::string first_mismatch;  // empty when there is none

  bool passed() const { return mismatches == 0 && cases > 0; }
};

/// hull_realize(x ∧ y) against the classical wedge of the realizations, on all
/// basis pairs of grade <= n and on `samples` random pairs.
SuiteResult hull_suite(const Blueprint& bp, int n, int samples, Rng& rng);

/// idem_realize(x ∧ y) against the tropical wedge, same coverage.
SuiteResult idem_suite(const Blueprint& bp, int n, int samples, Rng& rng);

/// is_plucker_vector(v) against is_gp_function(gp_from_vector(v)) and the
/// round trip through vector_from_gp, on random elements of H_{d,n} for
/// 1 <= d <= min(n, max_d), 2 <= n <= max_n.
SuiteResult cryptomorphism_suite(const Blueprint& bp, int max_n, int max_d, int samples, Rng& rng);

/// Every 0/1 table on the d-subsets of [n]: the boolean GP verdict against the
/// basis exchange axiom of its support (an empty support is not a matroid).
SuiteResult boolean_matroid_suite(int n, int d, unsigned jobs);

/// Random max-plus candidates: the GP verdict against tropical_plucker_check
/// (plus a non-bottom value somewhere).
SuiteResult maxplus_suite(int max_n, int d, int samples, Rng& rng);

/// Canonical GP classes over GF(p) against the Plücker tables of all
/// subspaces, compared as sets.
SuiteResult field_count_suite(int p, int n, int d, unsigned jobs);

}  // namespace obext
