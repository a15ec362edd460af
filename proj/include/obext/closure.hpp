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

#include <cstddef>

#include "obext/blueprint.hpp"

namespace obext {

/// Bounds for the breadth-first derivation search.
struct ClosureBudget {
  std::size_t max_terms = 8;         // sums larger than this are pruned
  std::size_t max_states = 100'000;  // distinct sums visited before giving up
};

/// Generators a preset hands the closure engine for the query lhs <= rhs.
RelationSet default_relations(const Blueprint& bp, const FormalSum& lhs, const FormalSum& rhs);

/// Searches for a derivation of lhs <= rhs in the additive, multiplicative,
/// reflexive and transitive closure of `gens`.
///
/// Each step rewrites the current sum `c.l + z` into `c.r + z` for a generator
/// l <= r, a monoid element c and a context z. Returns kHolds when rhs is
/// reached and kUnknown otherwise; never kFails. Throws
/// Error(kInvalidArgument) on a zero budget.
Decision closure_decide_leq(const Blueprint& bp, const RelationSet& gens, const FormalSum& lhs,
                            const FormalSum& rhs, const ClosureBudget& budget = {});

}  // namespace obext
