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

#include <random>

#include "obext/error.hpp"
#include "obext/free_module.hpp"

namespace obext {
namespace {

TEST(FreeModule, BasisAndUnderlyingSet) {
  FreeModule m = free_module(make_preset(PresetDescriptor::f1pm()), 3);
  const Blueprint& bp = m.blueprint();
  EXPECT_EQ(m.basis(2).coeff(2), FormalSum{bp.one()});
  EXPECT_TRUE((bp.eps() * m.basis(2)).in_underlying_set());
  EXPECT_FALSE((FormalSum{bp.one(), bp.one()} * m.basis(1)).in_underlying_set());
  EXPECT_THROW(m.basis(4), Error);
  EXPECT_THROW(m.basis(0), Error);
}

TEST(FreeModule, ComponentwiseOrder) {
  FreeModule m = free_module(make_preset(PresetDescriptor::gf(2)), 2);
  const Blueprint& bp = m.blueprint();
  FreeModuleElement two = FormalSum{bp.one(), bp.one()} * m.basis(1);
  EXPECT_EQ(m.leq(m.zero(), two), Decision::kHolds);
  EXPECT_EQ(m.leq(m.zero(), m.basis(1)), Decision::kFails);
  EXPECT_EQ(m.leq(two, two), Decision::kHolds);
  EXPECT_THROW(m.leq(m.zero(), FreeModuleElement(3)), Error);
}

TEST(FreeModule, OrderAgreesWithCoefficients) {
  FreeModule m = free_module(make_preset(PresetDescriptor::gf(3)), 3);
  const Blueprint& bp = m.blueprint();
  std::mt19937 rng(5);
  auto draw = [&] {
    std::map<int, FormalSum> c;
    for (int i = 1; i <= 3; ++i) {
      std::vector<Scalar> t;
      for (int k = rng() % 3; k > 0; --k) t.push_back(Scalar::from_value(bp.domain(), Rational(1 + rng() % 2)));
      c[i] = FormalSum(t);
    }
    return m.element(c);
  };
  for (int trial = 0; trial < 300; ++trial) {
    FreeModuleElement x = draw(), y = draw();
    Decision expected = Decision::kHolds;
    for (int i = 1; i <= 3; ++i) {
      if (bp.leq(x.coeff(i), y.coeff(i)) == Decision::kFails) expected = Decision::kFails;
    }
    EXPECT_EQ(module_leq(m, x, y), expected);
  }
}

TEST(Tensor, ScalarsMoveAcross) {
  auto bp = make_preset(PresetDescriptor::f1pm());
  FreeModule m = free_module(bp, 2);
  TensorElement a = tensor(bp->eps() * m.basis(1), m.basis(2));
  TensorElement b = tensor(m.basis(1), bp->eps() * m.basis(2));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.coeff(1, 2), FormalSum{bp->eps()});
  TensorElement c = tensor(m.basis(1) + m.basis(2), m.basis(1));
  EXPECT_EQ(c.coeff(1, 1), FormalSum{bp->one()});
  EXPECT_EQ(c.coeff(2, 1), FormalSum{bp->one()});
  EXPECT_TRUE(c.coeff(1, 2).empty());
}

TEST(Tensor, ScalarShiftProperty) {
  auto bp = make_preset(PresetDescriptor::gf(5));
  FreeModule m = free_module(bp, 3);
  std::mt19937 rng(9);
  auto scalar = [&] { return Scalar::from_value(bp->domain(), Rational(static_cast<int>(rng() % 5))); };
  auto element = [&] {
    FreeModuleElement x(3);
    for (int i = 1; i <= 3; ++i) x += scalar() * m.basis(i);
    return x;
  };
  for (int trial = 0; trial < 200; ++trial) {
    Scalar b = scalar();
    FreeModuleElement x = element(), y = element();
    EXPECT_EQ(tensor(b * x, y), tensor(x, b * y));
  }
}

TEST(DirectSum, OffsetsAndZero) {
  auto bp = make_preset(PresetDescriptor::f1pm());
  std::vector<FreeModule> parts{free_module(bp, 2), free_module(bp, 3)};
  DirectSum s = direct_sum(parts);
  EXPECT_EQ(s.module().rank(), 5);
  EXPECT_EQ(s.inject(1, parts[1].basis(2)), s.module().basis(4));
  EXPECT_EQ(s.inject(0, parts[0].zero()), s.module().zero());
  EXPECT_EQ(s.inject(1, parts[1].zero()), s.module().zero());
  // Underlying set: single-term images stay single-term.
  EXPECT_TRUE(s.inject(0, bp->eps() * parts[0].basis(1)).in_underlying_set());

  std::vector<FreeModule> mixed{free_module(bp, 1), free_module(make_preset(PresetDescriptor::gf(3)), 1)};
  try {
    direct_sum(mixed);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInstanceMismatch);
  }
}

std::vector<BilinearTable> all_scalar_tables(const Blueprint& bp) {
  std::vector<BilinearTable> out;
  FreeModule target = free_module(make_preset(bp.descriptor()), 1);
  const auto carrier = bp.elements();
  for (std::size_t code = 0; code < 81; ++code) {
    BilinearTable t{2, 2, 1, {}};
    t.table.assign(2, {});
    std::size_t rest = code;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        t.table[i].push_back(carrier[rest % 3] * target.basis(1));
        rest /= 3;
      }
    }
    out.push_back(t);
  }
  return out;
}

TEST(Bilinear, ZeroMapAndOnePairDifference) {
  auto bp = make_preset(PresetDescriptor::gf(3));
  auto tables = all_scalar_tables(*bp);
  FreeModule m = free_module(bp, 2);
  TensorMorphism zero = induced_morphism(tables[0]);
  EXPECT_TRUE(zero(tensor(m.basis(1) + m.basis(2), m.basis(2))).is_zero());
  std::vector<BilinearTable> pair{tables[0], tables[1]};
  BilinearReport r = bilinear_correspondence_check(*bp, 2, 2, 1, pair, {}, {});
  EXPECT_EQ(r.distinct_morphisms, 2u);
  EXPECT_TRUE(r.injective);
}

TEST(Bilinear, Gf3AllTablesDistinctAndRecovered) {
  auto bp = make_preset(PresetDescriptor::gf(3));
  auto tables = all_scalar_tables(*bp);
  std::vector<TensorMorphism> morphisms;
  for (const auto& t : tables) morphisms.push_back(induced_morphism(t));
  FreeModule m = free_module(bp, 2);
  std::vector<TensorElement> probes{tensor(m.basis(1) + m.basis(2), m.basis(1) + m.basis(2)),
                                    tensor(bp->eps() * m.basis(1), m.basis(2) + m.basis(1))};
  BilinearReport r = bilinear_correspondence_check(*bp, 2, 2, 1, tables, morphisms, probes);
  EXPECT_EQ(r.maps_checked, 81u);
  EXPECT_EQ(r.distinct_tables, 81u);
  EXPECT_EQ(r.distinct_morphisms, 81u);
  EXPECT_TRUE(r.injective);
  EXPECT_EQ(r.morphisms_recovered, 81u);
  EXPECT_TRUE(r.surjective);
}

TEST(Bilinear, ApplyMatchesInducedMorphism) {
  auto bp = make_preset(PresetDescriptor::gf(3));
  auto tables = all_scalar_tables(*bp);
  FreeModule m = free_module(bp, 2);
  FreeModuleElement x = m.basis(1) + bp->eps() * m.basis(2);
  FreeModuleElement y = m.basis(1) + m.basis(2);
  for (const auto& t : tables) EXPECT_EQ(t.apply(x, y), induced_morphism(t)(tensor(x, y)));
}

TEST(Bilinear, NonInducedMorphismIsNotRecovered) {
  // A map that is not linear on the tensor module: it ignores every
  // coefficient except at (1, 1).
  auto bp = make_preset(PresetDescriptor::gf(3));
  FreeModule m = free_module(bp, 2);
  TensorMorphism odd = [&](const TensorElement& t) {
    FreeModuleElement out(1);
    if (t.coeffs().size() > 1) out += bp->one() * FreeModule(bp, 1).basis(1);
    return out;
  };
  std::vector<TensorElement> probes{tensor(m.basis(1) + m.basis(2), m.basis(1))};
  std::vector<TensorMorphism> ms{odd};
  BilinearReport r = bilinear_correspondence_check(*bp, 2, 2, 1, {}, ms, probes);
  EXPECT_EQ(r.morphisms_recovered, 0u);
  EXPECT_FALSE(r.surjective);
}

}  // namespace
}  // namespace obext
