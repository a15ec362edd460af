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

#include <gtest/gtest.h>

#include "obext/closure.hpp"
#include "obext/error.hpp"

namespace obext {
namespace {

TEST(Closure, F1pmGenerator) {
  auto bp = make_preset(PresetDescriptor::f1pm());
  FormalSum rhs{bp->one(), bp->eps()};
  EXPECT_EQ(closure_decide_leq(*bp, default_relations(*bp, {}, rhs), {}, rhs), Decision::kHolds);
}

TEST(Closure, F1pmMultiplesOfOnePlusEps) {
  auto bp = make_preset(PresetDescriptor::f1pm());
  for (std::size_t k = 1; k <= 4; ++k) {
    FormalSum rhs = repeat(FormalSum{bp->one(), bp->eps()}, k);
    EXPECT_EQ(closure_decide_leq(*bp, default_relations(*bp, {}, rhs), {}, rhs), Decision::kHolds) << k;
  }
}

TEST(Closure, Reflexive) {
  for (const auto& d : {PresetDescriptor::f1pm(), PresetDescriptor::gf(3), PresetDescriptor::maxplus()}) {
    auto bp = make_preset(d);
    FormalSum x{bp->one(), bp->one(), bp->eps()};
    EXPECT_EQ(closure_decide_leq(*bp, RelationSet{}, x, x), Decision::kHolds);
  }
}

TEST(Closure, UnknownWhenNotDerivable) {
  auto bp = make_preset(PresetDescriptor::f1pm());
  FormalSum rhs{bp->one()};
  EXPECT_EQ(closure_decide_leq(*bp, default_relations(*bp, {}, rhs), {}, rhs), Decision::kUnknown);
}

TEST(Closure, BudgetMustBePositive) {
  auto bp = make_preset(PresetDescriptor::f1pm());
  try {
    closure_decide_leq(*bp, RelationSet{}, {}, {}, ClosureBudget{0, 10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  EXPECT_THROW(closure_decide_leq(*bp, RelationSet{}, {}, {}, ClosureBudget{4, 0}), Error);
}

TEST(Closure, RationalUsesQueryHints) {
  auto bp = make_preset(PresetDescriptor::rational());
  FormalSum lhs{bp->one()};
  FormalSum rhs{bp->parse("1/3"), bp->parse("2/3")};
  EXPECT_EQ(closure_decide_leq(*bp, default_relations(*bp, lhs, rhs), lhs, rhs), Decision::kHolds);
  FormalSum zero_sum{bp->parse("2"), bp->parse("-1"), bp->parse("-1")};
  EXPECT_EQ(closure_decide_leq(*bp, default_relations(*bp, {}, zero_sum), {}, zero_sum), Decision::kHolds);
}

TEST(Closure, MaxPlusRepeatedMaximum) {
  auto bp = make_preset(PresetDescriptor::maxplus());
  FormalSum rhs{bp->parse("q:5"), bp->parse("q:5"), bp->parse("q:3")};
  EXPECT_EQ(closure_decide_leq(*bp, default_relations(*bp, {}, rhs), {}, rhs), Decision::kHolds);
  FormalSum unique{bp->parse("q:5"), bp->parse("q:3")};
  EXPECT_EQ(closure_decide_leq(*bp, default_relations(*bp, {}, unique), {}, unique), Decision::kUnknown);
}

TEST(Closure, CustomGeneratorsChain) {
  // a <= b and b <= c give a <= c in GF(5) with hand-written generators.
  auto bp = make_preset(PresetDescriptor::gf(5));
  FormalSum a{bp->parse("1")};
  FormalSum b{bp->parse("2"), bp->parse("4")};
  FormalSum c{bp->parse("2"), bp->parse("2"), bp->parse("2")};
  RelationSet gens({Relation{a, b}, Relation{FormalSum{bp->parse("4")}, FormalSum{bp->parse("2"), bp->parse("2")}}});
  EXPECT_EQ(closure_decide_leq(*bp, gens, a, c), Decision::kHolds);
  EXPECT_EQ(closure_decide_leq(*bp, gens, c, a), Decision::kUnknown);
}

TEST(Closure, SoundAgainstExactOrder) {
  for (const auto& d : {PresetDescriptor::f1pm(), PresetDescriptor::gf(2), PresetDescriptor::gf(3),
                        PresetDescriptor::boolean()}) {
    auto bp = make_preset(d);
    std::vector<Scalar> pool;
    for (const Scalar& s : bp->elements()) {
      if (!s.is_zero()) pool.push_back(s);
    }
    // All sums of up to three terms on both sides.
    std::vector<FormalSum> sums{{}};
    for (int round = 0; round < 3; ++round) {
      std::vector<FormalSum> grown;
      for (const FormalSum& s : sums) {
        for (const Scalar& t : pool) grown.push_back(s + FormalSum{t});
      }
      sums.insert(sums.end(), grown.begin(), grown.end());
      std::sort(sums.begin(), sums.end());
      sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    }
    for (const FormalSum& x : sums) {
      for (const FormalSum& y : sums) {
        Decision c = closure_decide_leq(*bp, default_relations(*bp, x, y), x, y, ClosureBudget{6, 20000});
        if (c == Decision::kHolds) EXPECT_EQ(bp->leq(x, y), Decision::kHolds) << bp->name();
        // For these presets the engine is complete at this size.
        if (bp->leq(x, y) == Decision::kHolds) EXPECT_EQ(c, Decision::kHolds) << bp->name();
      }
    }
  }
}

TEST(RelationSet, CanonicalOrder) {
  auto bp = make_preset(PresetDescriptor::gf(3));
  Relation r1{{}, FormalSum{bp->one(), bp->eps()}};
  Relation r2{FormalSum{bp->one()}, FormalSum{bp->eps(), bp->eps()}};
  EXPECT_EQ(RelationSet({r1, r2}), RelationSet({r2, r1}));
  EXPECT_NE(RelationSet({r1, r1}), RelationSet({r1}));
  EXPECT_TRUE(RelationSet({r1, r2}).non_shrinking());
  EXPECT_FALSE(RelationSet({Relation{FormalSum{bp->one(), bp->one()}, FormalSum{bp->eps()}}}).non_shrinking());
}

}  // namespace
}  // namespace obext
