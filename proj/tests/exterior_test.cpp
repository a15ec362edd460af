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

#include <algorithm>
#include <numeric>

#include "obext/error.hpp"
#include "obext/exterior.hpp"
#include "obext/sampling.hpp"

namespace obext {
namespace {

const std::vector<PresetDescriptor> kPresets = {PresetDescriptor::f1pm(),     PresetDescriptor::gf(2),
                                                PresetDescriptor::gf(3),      PresetDescriptor::rational(),
                                                PresetDescriptor::boolean(), PresetDescriptor::maxplus()};

ExteriorElement e(const Blueprint& bp, int n, std::initializer_list<int> indices) {
  return ExteriorElement::monomial(n, IndexSet(indices), bp.one());
}

// Sign by adjacent transpositions: bubble sort, one eps per swap.
Scalar bubble_sign(const Blueprint& bp, std::vector<int> seq) {
  Scalar sign = bp.one();
  for (std::size_t pass = 0; pass < seq.size(); ++pass) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (seq[i] > seq[i + 1]) {
        std::swap(seq[i], seq[i + 1]);
        sign = sign * bp.eps();
      }
    }
  }
  return sign;
}

TEST(NormalizeWedge, Examples) {
  auto bp = make_preset(PresetDescriptor::f1pm());
  std::vector<int> s21{2, 1};
  auto m = normalize_wedge(s21, bp->one(), 3);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->indices, IndexSet({1, 2}));
  EXPECT_EQ(m->coeff, bp->eps());
  std::vector<int> s11{1, 1};
  EXPECT_FALSE(normalize_wedge(s11, bp->eps(), 3));
  std::vector<int> s312{3, 1, 2};
  m = normalize_wedge(s312, bp->one(), 3);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->coeff, bp->one());
  std::vector<int> bad{1, 4};
  try {
    normalize_wedge(bad, bp->one(), 3);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kIndexOutOfRange);
  }
}

TEST(NormalizeWedge, PermutationsMatchBubbleSort) {
  Rng rng(17);
  for (const auto& d : {PresetDescriptor::f1pm(), PresetDescriptor::gf(5)}) {
    auto bp = make_preset(d);
    for (int trial = 0; trial < 2000; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 6);
      const int len = static_cast<int>(rng() % (n + 2));
      std::vector<int> seq;
      for (int i = 0; i < len; ++i) seq.push_back(1 + static_cast<int>(rng() % n));
      Scalar c = random_scalar(*bp, rng, false);
      auto m = normalize_wedge(seq, c, n);
      std::vector<int> sorted = seq;
      std::sort(sorted.begin(), sorted.end());
      const bool repeats = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
      ASSERT_EQ(m.has_value(), !repeats);
      if (!repeats) {
        EXPECT_EQ(m->indices, IndexSet::from_indices(sorted));
        EXPECT_EQ(m->coeff, bubble_sign(*bp, seq) * c);
      }
    }
  }
}

TEST(Wedge, Examples) {
  auto bp = make_preset(PresetDescriptor::f1pm());
  EXPECT_EQ(wedge(e(*bp, 3, {1}), e(*bp, 3, {2})), e(*bp, 3, {1, 2}));
  ExteriorElement x = e(*bp, 3, {1}) + e(*bp, 3, {2});
  ExteriorElement y = e(*bp, 3, {1}) + bp->eps() * e(*bp, 3, {2});
  ExteriorElement p = wedge(x, y);
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.coeff(IndexSet{1, 2}), (FormalSum{bp->eps(), bp->eps()}));
  EXPECT_EQ(wedge(e(*bp, 3, {1, 2}), e(*bp, 3, {3})), wedge(e(*bp, 3, {3}), e(*bp, 3, {1, 2})));
  EXPECT_THROW(wedge(e(*bp, 3, {1}), e(*bp, 4, {2})), Error);
}

TEST(Wedge, Associative) {
  Rng rng(23);
  for (const auto& d : kPresets) {
    auto bp = make_preset(d);
    for (int trial = 0; trial < 200; ++trial) {
      ExteriorElement x = random_exterior(*bp, 5, rng), y = random_exterior(*bp, 5, rng),
                      z = random_exterior(*bp, 5, rng);
      EXPECT_EQ(wedge(wedge(x, y), z), wedge(x, wedge(y, z))) << bp->name();
    }
  }
}

TEST(Wedge, SignRuleOnGradeOne) {
  Rng rng(29);
  for (const auto& d : kPresets) {
    auto bp = make_preset(d);
    for (int trial = 0; trial < 100; ++trial) {
      ExteriorElement x = random_vector(*bp, 4, rng), y = random_vector(*bp, 4, rng);
      EXPECT_EQ(wedge(x, y), bp->eps() * wedge(y, x)) << bp->name();
    }
  }
}

TEST(Wedge, SquareHasOnePlusEpsCoefficients) {
  Rng rng(31);
  for (const auto& d : kPresets) {
    auto bp = make_preset(d);
    for (int trial = 0; trial < 100; ++trial) {
      ExteriorElement v = random_vector(*bp, 4, rng);
      ExteriorElement sq = wedge(v, v);
      for (const auto& [key, c] : sq.terms()) {
        ASSERT_EQ(key.size(), 2);
        // v_i v_j (1 + eps): two terms, one eps times the other.
        const auto idx = key.indices();
        Scalar vi = v.coeff(IndexSet{idx[0]}).terms().front();
        Scalar vj = v.coeff(IndexSet{idx[1]}).terms().front();
        EXPECT_EQ(c, ((vi * vj) * FormalSum{bp->one(), bp->eps()})) << bp->name();
      }
    }
  }
}

TEST(Wedge, GradeAdditive) {
  Rng rng(37);
  auto bp = make_preset(PresetDescriptor::gf(3));
  for (int trial = 0; trial < 100; ++trial) {
    const int d1 = 1 + trial % 2, d2 = 1 + (trial / 2) % 2;
    ExteriorElement x = random_h_element(*bp, 5, d1, rng), y = random_h_element(*bp, 5, d2, rng);
    ExteriorElement p = wedge(x, y);
    EXPECT_EQ(grade(p, d1 + d2), p);
  }
}

TEST(Grade, Restriction) {
  auto bp = make_preset(PresetDescriptor::f1pm());
  ExteriorElement x = e(*bp, 3, {1, 2}) + e(*bp, 3, {3});
  EXPECT_EQ(grade(x, 1), e(*bp, 3, {3}));
  ExteriorElement sum(3);
  for (int d = 0; d <= 3; ++d) sum += grade(x, d);
  EXPECT_EQ(sum, x);
  ExteriorElement p = wedge(e(*bp, 3, {1}), e(*bp, 3, {2, 3}));
  EXPECT_EQ(grade(p, 3), p);
  EXPECT_EQ(grade(grade(x, 2), 2), grade(x, 2));
}

TEST(Gamma, HAndKMembership) {
  auto bp = make_preset(PresetDescriptor::f1pm());
  std::map<IndexSet, FormalSum> ones;
  for (IndexSet s : subsets_of_size(4, 2)) ones[s] = FormalSum{bp->one()};
  ExteriorElement g = gamma(*bp, 4, 2, ones);
  EXPECT_TRUE(in_H(g, 2));
  EXPECT_FALSE(in_K(*bp, g, 2));

  ExteriorElement zero = gamma(*bp, 4, 2, {});
  EXPECT_TRUE(zero.is_zero());
  EXPECT_TRUE(in_K(*bp, zero, 2));

  ones[IndexSet{1, 2}] = FormalSum{bp->one(), bp->one()};
  EXPECT_FALSE(in_H(gamma(*bp, 4, 2, ones), 2));

  std::map<IndexSet, FormalSum> bad{{IndexSet{1}, FormalSum{bp->one()}}};
  try {
    gamma(*bp, 4, 2, bad);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kMalformedKey);
  }
}

TEST(Equality, CoefficientMaps) {
  auto bp = make_preset(PresetDescriptor::gf(3));
  ExteriorElement a(3, {{IndexSet{1, 2}, FormalSum{bp->one()}}, {IndexSet{3}, FormalSum{}}});
  ExteriorElement b = e(*bp, 3, {1, 2});
  EXPECT_EQ(a, b);
  EXPECT_NE(a, bp->eps() * b);
  EXPECT_NE(ExteriorElement(3), ExteriorElement(4));
}

TEST(ExteriorLeq, Examples) {
  auto bp = make_preset(PresetDescriptor::f1pm());
  ExteriorElement x = e(*bp, 3, {1, 2}) + bp->eps() * e(*bp, 3, {3});
  EXPECT_EQ(exterior_leq(*bp, x, x), Decision::kHolds);
  ExteriorElement t(3, {{IndexSet{1, 2}, FormalSum{bp->one(), bp->eps()}}});
  EXPECT_EQ(exterior_leq(*bp, ExteriorElement(3), t), Decision::kHolds);
  EXPECT_EQ(exterior_leq(*bp, ExteriorElement(3), e(*bp, 3, {1})), Decision::kFails);
}

TEST(HullRealize, Examples) {
  auto bp = make_preset(PresetDescriptor::gf(3));
  ExteriorElement x(4, {{IndexSet{1, 2}, FormalSum{bp->eps(), bp->eps()}}});
  auto h = hull_realize(*bp, x);
  EXPECT_EQ(h.terms.size(), 1u);
  EXPECT_EQ(h.terms.at(IndexSet{1, 2}), Rational(1));
  EXPECT_TRUE(hull_realize(*bp, ExteriorElement(4)).terms.empty());
  for (IndexSet s : subsets_of_size(4, 2)) {
    auto r = hull_realize(*bp, ExteriorElement::monomial(4, s, bp->one()));
    EXPECT_EQ(r.terms, (std::map<IndexSet, Rational>{{s, Rational(1)}}));
  }
  try {
    hull_realize(*make_preset(PresetDescriptor::f1pm()), x);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kWrongPresetKind);
  }
}

TEST(IdemRealize, Examples) {
  auto mp = make_preset(PresetDescriptor::maxplus());
  ExteriorElement x(4, {{IndexSet{1, 2}, FormalSum{mp->parse("q:5"), mp->parse("q:3")}}});
  auto t = idem_realize(*mp, x);
  EXPECT_EQ(t.terms.at(IndexSet{1, 2}), Rational(5));
  auto boolean = make_preset(PresetDescriptor::boolean());
  ExteriorElement y(4, {{IndexSet{1}, FormalSum{boolean->one(), boolean->one()}}});
  EXPECT_EQ(idem_realize(*boolean, y).terms.at(IndexSet{1}), Rational(1));
  EXPECT_THROW(idem_realize(*make_preset(PresetDescriptor::gf(2)), y), Error);
}

}  // namespace
}  // namespace obext
