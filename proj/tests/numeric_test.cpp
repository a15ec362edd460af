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
#include "obext/index_set.hpp"
#include "obext/numeric.hpp"
#include "obext/scalar.hpp"

namespace obext {
namespace {

TEST(Numeric, ModularInverse) {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    for (int a = 1; a < p; ++a) EXPECT_EQ(a * mod_inverse(a, p) % p, 1) << a << " mod " << p;
  }
}

TEST(Numeric, RationalText) {
  EXPECT_EQ(format_rational(Rational(3, 6)), "1/2");
  EXPECT_EQ(format_rational(Rational(-4)), "-4");
  EXPECT_EQ(parse_rational("-3/9"), Rational(-1, 3));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_THROW(parse_rational("1/2/3"), Error);
}

TEST(Numeric, ExactFieldGf3) {
  ExactField f(3);
  EXPECT_EQ(f.add(Rational(2), Rational(2)), Rational(1));
  EXPECT_EQ(f.neg(Rational(1)), Rational(2));
  EXPECT_EQ(f.inv(Rational(2)), Rational(2));
  EXPECT_EQ(f.normalize(Rational(-2)), Rational(1));
  EXPECT_THROW(f.inv(Rational(0)), Error);
  EXPECT_THROW(ExactField(4), Error);
}

TEST(Numeric, ExactFieldRational) {
  ExactField q;
  EXPECT_EQ(q.mul(Rational(2, 3), Rational(3, 4)), Rational(1, 2));
  EXPECT_EQ(q.inv(Rational(-2, 5)), Rational(-5, 2));
}

TEST(IndexSet, KeysAndOrder) {
  IndexSet s{1, 3};
  EXPECT_EQ(s.to_key(), "1,3");
  EXPECT_EQ(parse_index_key("1,3"), s);
  EXPECT_THROW(parse_index_key("3,1"), Error);
  EXPECT_THROW(parse_index_key("1,,2"), Error);
  EXPECT_THROW(parse_index_key("0"), Error);
  EXPECT_LT(IndexSet({1, 4}), IndexSet({2, 3}));
  EXPECT_LT(IndexSet({5}), IndexSet({1, 2}));
}

TEST(IndexSet, SubsetsInLexOrder) {
  auto subsets = subsets_of_size(4, 2);
  ASSERT_EQ(subsets.size(), 6u);
  std::vector<std::string> keys;
  for (IndexSet s : subsets) keys.push_back(s.to_key());
  EXPECT_EQ(keys, (std::vector<std::string>{"1,2", "1,3", "1,4", "2,3", "2,4", "3,4"}));
  for (int n = 0; n <= 7; ++n) {
    for (int d = 0; d <= n; ++d) {
      auto all = subsets_of_size(n, d);
      ASSERT_EQ(all.size(), binomial(n, d));
      for (std::size_t r = 0; r < all.size(); ++r) EXPECT_EQ(lex_rank(all[r], n), r);
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    }
  }
  EXPECT_TRUE(subsets_of_size(3, 4).empty());
}

TEST(Scalar, F1pmArithmetic) {
  Domain f{PresetKind::kF1pm, 0};
  Scalar e = Scalar::eps(f);
  EXPECT_EQ(e * e, Scalar::one(f));
  EXPECT_TRUE((e * Scalar::zero(f)).is_zero());
  EXPECT_EQ(eps_power(f, 3), e);
  EXPECT_EQ(eps_power(f, 2), Scalar::one(f));
  EXPECT_EQ(e.inverse(), e);
}

TEST(Scalar, MaxPlusArithmetic) {
  Domain m{PresetKind::kMaxPlus, 0};
  Scalar a = Scalar::from_value(m, Rational(2));
  Scalar b = Scalar::from_value(m, Rational(-1, 2));
  EXPECT_EQ((a * b).value(), Rational(3, 2));
  EXPECT_TRUE((a * Scalar::zero(m)).is_bottom());
  EXPECT_EQ(Scalar::one(m).value(), Rational(0));
  EXPECT_EQ(Scalar::eps(m), Scalar::one(m));
  EXPECT_EQ(a.inverse().value(), Rational(-2));
  EXPECT_LT(Scalar::zero(m), b);
}

TEST(Scalar, PrimeFieldCarrierChecked) {
  Domain g{PresetKind::kPrimeField, 5};
  EXPECT_EQ(Scalar::eps(g).value(), Rational(4));
  EXPECT_THROW(Scalar::from_value(g, Rational(5)), Error);
  EXPECT_THROW(Scalar::from_value(g, Rational(1, 2)), Error);
}

TEST(Scalar, CrossDomainProductRejected) {
  Domain g{PresetKind::kPrimeField, 3};
  Domain f{PresetKind::kF1pm, 0};
  try {
    (void)(Scalar::one(g) * Scalar::one(f));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInstanceMismatch);
  }
}

TEST(FormalSum, MultisetNormalForm) {
  Domain f{PresetKind::kF1pm, 0};
  Scalar one = Scalar::one(f), eps = Scalar::eps(f), zero = Scalar::zero(f);
  FormalSum x{one, eps, zero, one};
  EXPECT_EQ(x.size(), 3u);
  EXPECT_EQ(x, (FormalSum{eps, one, one}));
  EXPECT_EQ(x.count(one), 2u);
  EXPECT_TRUE(FormalSum::of(zero).empty());
  EXPECT_EQ(repeat(FormalSum{one, eps}, 3).size(), 6u);
}

TEST(FormalSum, SemiringLaws) {
  Domain g{PresetKind::kPrimeField, 5};
  std::mt19937 rng(7);
  auto random_sum = [&] {
    std::vector<Scalar> t;
    int k = rng() % 4;
    for (int i = 0; i < k; ++i) t.push_back(Scalar::from_value(g, Rational(static_cast<int>(rng() % 5))));
    return FormalSum(t);
  };
  for (int trial = 0; trial < 300; ++trial) {
    FormalSum a = random_sum(), b = random_sum(), c = random_sum();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
  }
}

TEST(FormalSum, SubmultisetRemoval) {
  Domain f{PresetKind::kF1pm, 0};
  Scalar one = Scalar::one(f), eps = Scalar::eps(f);
  FormalSum x{one, one, eps};
  EXPECT_TRUE(x.remove_submultiset(FormalSum{one, eps}));
  EXPECT_EQ(x, FormalSum{one});
  EXPECT_FALSE(x.remove_submultiset(FormalSum{eps}));
  EXPECT_EQ(x, FormalSum{one});
}

}  // namespace
}  // namespace obext
