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
#include "obext/oracles.hpp"

namespace obext::oracles {
namespace {

ClassicalExteriorElement classical(int p, int n, std::map<IndexSet, Rational> terms) {
  return make_classical(ExactField(p), n, std::move(terms));
}

ClassicalExteriorElement random_classical(std::mt19937& rng, int p, int n) {
  std::map<IndexSet, Rational> terms;
  for (int k = rng() % 4; k > 0; --k) {
    terms[IndexSet::from_mask(rng() % (1u << n))] = Rational(static_cast<int>(rng() % 7) - 3);
  }
  return classical(p, n, terms);
}

TEST(ClassicalWedge, Antisymmetric) {
  auto e1 = classical(0, 3, {{IndexSet{1}, Rational(1)}});
  auto e2 = classical(0, 3, {{IndexSet{2}, Rational(1)}});
  EXPECT_EQ(classical_wedge(e1, e2).terms.at(IndexSet{1, 2}), Rational(1));
  EXPECT_EQ(classical_wedge(e2, e1).terms.at(IndexSet{1, 2}), Rational(-1));
}

TEST(ClassicalWedge, Gf3Example) {
  auto x = classical(3, 2, {{IndexSet{1}, Rational(1)}, {IndexSet{2}, Rational(1)}});
  auto y = classical(3, 2, {{IndexSet{1}, Rational(1)}, {IndexSet{2}, Rational(-1)}});
  auto p = classical_wedge(x, y);
  EXPECT_EQ(p.terms, (std::map<IndexSet, Rational>{{IndexSet{1, 2}, Rational(1)}}));
}

TEST(ClassicalWedge, AlternatingAssociativeBilinear) {
  std::mt19937 rng(41);
  for (int p : {0, 2, 3, 7}) {
    ExactField f(p);
    for (int trial = 0; trial < 200; ++trial) {
      std::map<IndexSet, Rational> v;
      for (int i = 1; i <= 4; ++i) v[IndexSet{i}] = Rational(static_cast<int>(rng() % 5) - 2);
      auto vec = classical(p, 4, v);
      EXPECT_TRUE(classical_wedge(vec, vec).terms.empty());
      auto x = random_classical(rng, p, 4), y = random_classical(rng, p, 4), z = random_classical(rng, p, 4);
      EXPECT_EQ(classical_wedge(classical_wedge(x, y), z), classical_wedge(x, classical_wedge(y, z)));
      // (x + y) ∧ z = x ∧ z + y ∧ z
      std::map<IndexSet, Rational> sum = x.terms;
      for (const auto& [k, c] : y.terms) sum[k] = f.add(sum.count(k) ? sum[k] : Rational(0), c);
      auto lhs = classical_wedge(classical(p, 4, sum), z);
      std::map<IndexSet, Rational> rhs = classical_wedge(x, z).terms;
      for (const auto& [k, c] : classical_wedge(y, z).terms) rhs[k] = f.add(rhs.count(k) ? rhs[k] : Rational(0), c);
      EXPECT_EQ(lhs, classical(p, 4, rhs));
    }
  }
}

TEST(TropicalWedge, Examples) {
  TropicalExteriorElement x{TropicalKind::kMaxPlus, 2, {{IndexSet{1}, Rational(1)}, {IndexSet{2}, Rational(2)}}};
  TropicalExteriorElement y{TropicalKind::kMaxPlus, 2, {{IndexSet{1}, Rational(3)}, {IndexSet{2}, Rational(4)}}};
  EXPECT_EQ(tropical_wedge(x, y).terms.at(IndexSet{1, 2}), Rational(5));
  TropicalExteriorElement e1{TropicalKind::kBoolean, 2, {{IndexSet{1}, Rational(1)}}};
  TropicalExteriorElement e2{TropicalKind::kBoolean, 2, {{IndexSet{2}, Rational(1)}}};
  EXPECT_TRUE(tropical_wedge(e1, e1).terms.empty());
  EXPECT_EQ(tropical_wedge(e1, e2), tropical_wedge(e2, e1));
}

TEST(TropicalWedge, AssociativeSymmetric) {
  std::mt19937 rng(43);
  auto draw = [&] {
    TropicalExteriorElement t{TropicalKind::kMaxPlus, 4, {}};
    for (int k = rng() % 4; k > 0; --k) t.terms[IndexSet::from_mask(rng() % 16)] = Rational(static_cast<int>(rng() % 9) - 4);
    return t;
  };
  for (int trial = 0; trial < 300; ++trial) {
    auto x = draw(), y = draw(), z = draw();
    EXPECT_EQ(tropical_wedge(tropical_wedge(x, y), z), tropical_wedge(x, tropical_wedge(y, z)));
    EXPECT_EQ(tropical_wedge(x, y), tropical_wedge(y, x));
  }
}

TEST(BasisExchange, Examples) {
  std::vector<IndexSet> uniform = subsets_of_size(4, 2);
  EXPECT_TRUE(basis_exchange_check(uniform));
  std::vector<IndexSet> split{IndexSet{1, 2}, IndexSet{3, 4}};
  EXPECT_FALSE(basis_exchange_check(split));
  std::vector<IndexSet> single{IndexSet{2, 3}};
  EXPECT_TRUE(basis_exchange_check(single));
}

TEST(BasisExchange, CountsRankTwoOnFour) {
  // A rank-2 matroid on [4] is a set of loops plus a partition of the other
  // elements into at least two parallel classes: 14 + 4 * 4 + 6 * 1.
  const auto all = subsets_of_size(4, 2);
  int count = 0;
  for (int mask = 1; mask < 64; ++mask) {
    std::vector<IndexSet> family;
    for (int i = 0; i < 6; ++i) {
      if (mask >> i & 1) family.push_back(all[i]);
    }
    count += basis_exchange_check(family) ? 1 : 0;
  }
  EXPECT_EQ(count, 36);
}

TEST(TropicalPlucker, Examples) {
  TropicalExteriorElement ones{TropicalKind::kBoolean, 4, {}};
  for (IndexSet s : subsets_of_size(4, 2)) ones.terms[s] = Rational(1);
  EXPECT_TRUE(tropical_plucker_check(ones, 4, 2));

  TropicalExteriorElement strict{TropicalKind::kMaxPlus, 4, {}};
  for (IndexSet s : subsets_of_size(4, 2)) strict.terms[s] = Rational(0);
  strict.terms[IndexSet{1, 2}] = Rational(5);  // v12 v34 is the unique maximum
  EXPECT_FALSE(tropical_plucker_check(strict, 4, 2));

  TropicalExteriorElement top{TropicalKind::kMaxPlus, 3, {{IndexSet{1, 2, 3}, Rational(0)}}};
  EXPECT_TRUE(tropical_plucker_check(top, 3, 3));
}

TEST(SubspaceEnumeration, Counts) {
  EXPECT_EQ(subspace_plucker_enumerate(2, 4, 2).size(), 35u);
  EXPECT_EQ(subspace_plucker_enumerate(2, 3, 1).size(), 7u);
  EXPECT_EQ(subspace_plucker_enumerate(3, 2, 2).size(), 1u);
  // Gaussian binomial [4 choose 2]_3 = 130.
  EXPECT_EQ(subspace_plucker_enumerate(3, 4, 2).size(), 130u);
  try {
    subspace_plucker_enumerate(13, 6, 3, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

TEST(SubspaceEnumeration, CanonicalScaling) {
  for (const auto& row : subspace_plucker_enumerate(3, 4, 2)) {
    auto first = std::find_if(row.begin(), row.end(), [](std::int64_t v) { return v != 0; });
    ASSERT_NE(first, row.end());
    EXPECT_EQ(*first, 1);
  }
}

TEST(PreorderSaturation, TinyPresentation) {
  // Z/2 = {1, g}; generator 0 <= 1 + g.
  FinitePresentation pres;
  pres.size = 2;
  pres.mul = [](int a, int b) { return a ^ b; };
  pres.generator = [](std::optional<int> b, const CodedSum& rhs) { return !b && rhs == CodedSum{0, 1}; };
  PreorderSaturation sat(pres, 4);
  EXPECT_TRUE(sat.leq({}, {0, 1}));
  EXPECT_TRUE(sat.leq({0}, {0, 0, 1}));
  EXPECT_TRUE(sat.leq({}, {0, 0, 1, 1}));
  EXPECT_FALSE(sat.leq({}, {0}));
  EXPECT_FALSE(sat.leq({0, 1}, {}));
  EXPECT_THROW(sat.leq({}, {0, 0, 0, 0, 0}), Error);
}

}  // namespace
}  // namespace obext::oracles
