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

#include "obext/closure.hpp"

#include <deque>
#include <set>
#include <unordered_set>

#include "obext/error.hpp"

namespace obext {

namespace {

struct SumHash {
  std::size_t operator()(const FormalSum& x) const { return hash_value(x); }
};

std::vector<Scalar> distinct_terms(const FormalSum& x) {
  std::vector<Scalar> out(x.terms().begin(), x.terms().end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

RelationSet default_relations(const Blueprint& bp, const FormalSum& lhs, const FormalSum& rhs) {
  std::vector<Scalar> hints(lhs.terms().begin(), lhs.terms().end());
  hints.insert(hints.end(), rhs.terms().begin(), rhs.terms().end());
  hints.push_back(bp.one());
  return bp.generators(hints);
}

Decision closure_decide_leq(const Blueprint& bp, const RelationSet& gens, const FormalSum& lhs,
                            const FormalSum& rhs, const ClosureBudget& budget) {
  if (budget.max_terms == 0 || budget.max_states == 0) {
    throw Error(ErrorCode::kInvalidArgument, "closure budget must be positive");
  }
  bp.require(lhs);
  bp.require(rhs);
  if (lhs == rhs) return Decision::kHolds;

  // Rewrites never shrink a sum when no generator does, so nothing larger
  // than the target can lead back to it.
  const std::size_t size_bound =
      gens.non_shrinking() ? std::min(budget.max_terms, rhs.size()) : budget.max_terms;

  const std::optional<std::vector<Scalar>> carrier = bp.carrier();
  std::vector<Scalar> finite_scales;
  if (carrier) {
    for (const Scalar& c : *carrier) {
      if (!c.is_zero()) finite_scales.push_back(c);
    }
  }
  // For infinite carriers, scales for generators with an empty left side are
  // chosen so some scaled term lands on a term of the query.
  std::vector<Scalar> anchors = distinct_terms(lhs + rhs);
  anchors.push_back(bp.one());

  std::unordered_set<FormalSum, SumHash> seen{lhs};
  std::deque<FormalSum> frontier{lhs};

  while (!frontier.empty()) {
    FormalSum state = std::move(frontier.front());
    frontier.pop_front();
    const std::vector<Scalar> state_terms = distinct_terms(state);

    for (const Relation& gen : gens.generators()) {
      std::vector<Scalar> scales;
      if (carrier) {
        scales = finite_scales;
      } else if (!gen.lhs.empty()) {
        const Scalar lead_inv = gen.lhs.terms().front().inverse();
        for (const Scalar& s : state_terms) scales.push_back(s * lead_inv);
      } else {
        for (const Scalar& t : anchors) {
          for (const Scalar& g : gen.rhs.terms()) scales.push_back(t * g.inverse());
        }
        std::sort(scales.begin(), scales.end());
        scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
      }

      for (const Scalar& c : scales) {
        FormalSum next = state;
        if (!gen.lhs.empty() && !next.remove_submultiset(c * gen.lhs)) continue;
        next += c * gen.rhs;
        if (next.size() > size_bound) continue;
        if (next == rhs) return Decision::kHolds;
        if (seen.insert(next).second) {
          if (seen.size() >= budget.max_states) return Decision::kUnknown;
          frontier.push_back(std::move(next));
        }
      }
    }
  }
  return Decision::kUnknown;
}

}  // namespace obext
