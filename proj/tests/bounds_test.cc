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

#include "monoratio/bounds.h"

#include <cmath>
#include <limits>

#include "gtest/gtest.h"
#include "monoratio/errors.h"

namespace monoratio {
namespace {

const double kOneMinusInvE = 1 - std::exp(-1.0);

// Coarser than the default so the property sweeps stay fast; the default
// grid is exercised by the endpoint tests.
const HardnessOptions kFast{401, 3};

TEST(GuaranteeTest, Examples) {
  EXPECT_NEAR(Guarantee(GuaranteeKind::kRandomGreedyCard, 0.0), 0.367879, 1e-6);
  EXPECT_NEAR(Guarantee(GuaranteeKind::kRandomGreedyCard, 0.5), 0.5, 1e-15);
  EXPECT_NEAR(Guarantee(GuaranteeKind::kRgm, 0.0), 0.283833, 1e-6);
  EXPECT_EQ(Guarantee(GuaranteeKind::kRgm, 1.0), 0.5);
  EXPECT_NEAR(Guarantee(GuaranteeKind::kUnconstrainedHard, 0.5), 2.0 / 3,
              1e-15);
  EXPECT_EQ(Guarantee(GuaranteeKind::kUnconstrainedAlg, 0.0), 0.5);
  EXPECT_EQ(Guarantee(GuaranteeKind::kUnconstrainedAlg, 1.0), 1.0);
  EXPECT_NEAR(Guarantee(GuaranteeKind::kMcg, 0.3, 1.0),
              Guarantee(GuaranteeKind::kRandomGreedyCard, 0.3), 1e-15);
  EXPECT_EQ(Guarantee(GuaranteeKind::kMcg, 0.3, 0.0), 0.0);
  EXPECT_EQ(Guarantee(GuaranteeKind::kGreedyMatroid, 0.6), 0.3);
}

TEST(GuaranteeTest, Errors) {
  EXPECT_THROW(Guarantee(GuaranteeKind::kGreedyCard, 1.5), PreconditionError);
  EXPECT_THROW(ParseGuaranteeKind("nope"), ValidationError);
  for (const auto& id : GuaranteeKindIds()) {
    EXPECT_EQ(GuaranteeKindId(ParseGuaranteeKind(id)), id);
  }
}

TEST(HardnessTest, CardinalityEndpoints) {
  EXPECT_NEAR(CardinalityHardness(0.0), 0.491, 0.005);
  EXPECT_GE(CardinalityHardness(1.0), kOneMinusInvE - 1e-9);
  EXPECT_NEAR(CardinalityHardness(0.56), kOneMinusInvE, 0.01);
}

TEST(HardnessTest, MatroidEndpoints) {
  EXPECT_NEAR(MatroidHardness(0.0), 0.478, 0.005);
  const double top = MatroidHardness(1.0);
  EXPECT_LT(top, 1.0);
  EXPECT_NEAR(top, 0.75, 1e-9);
}

TEST(HardnessTest, MatroidAlphaOneIsParabolaVertex) {
  EXPECT_NEAR(MatroidHardnessAtAlpha(0.0, 1.0), 0.5, 1e-12);
  for (double m : {0.2, 0.7, 1.0}) {
    // Vertex of (m - 2) x^2 + 2x sits at 1 / (2 - m) >= 1/2, so x = 1/2.
    EXPECT_NEAR(MatroidHardnessAtAlpha(m, 1.0), m / 4 + 0.5, 1e-12);
  }
}

TEST(HardnessTest, InnerMatchesFormula) {
  const double m = 0.3;
  const double a = 0.4;
  const double x = 0.7;
  EXPECT_DOUBLE_EQ(CardinalityHardnessInner(m, a, x),
                   a * (m * x * x + 2 * x - 2 * x * x) +
                       2 * (1 - a) * (1 - std::exp(x - 1)) * (1 - 0.7 * x));
}

TEST(HardnessPropertyTest, CurvesNondecreasingAndBracketed) {
  double prev_card = 0.0;
  double prev_mat = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double m = i / 100.0;
    const double card = CardinalityHardness(m, kFast);
    const double mat = MatroidHardness(m, kFast);
    EXPECT_GE(card, prev_card - 1e-9) << m;
    EXPECT_GE(mat, prev_mat - 1e-9) << m;
    prev_card = card;
    prev_mat = mat;
    EXPECT_GE(card, 0.0);
    EXPECT_LE(card, 1.0);
    // Algorithms sit below the matching hardness.
    EXPECT_LE(Guarantee(GuaranteeKind::kUnconstrainedAlg, m),
              Guarantee(GuaranteeKind::kUnconstrainedHard, m) + 1e-12);
    const double card_cap = std::min(card, kOneMinusInvE) + 1e-9;
    EXPECT_LE(Guarantee(GuaranteeKind::kGreedyCard, m), card_cap);
    EXPECT_LE(Guarantee(GuaranteeKind::kRandomGreedyCard, m), card_cap);
    const double mat_cap = std::min(mat, kOneMinusInvE) + 1e-9;
    EXPECT_LE(Guarantee(GuaranteeKind::kGreedyMatroid, m), mat_cap);
    EXPECT_LE(Guarantee(GuaranteeKind::kMcg, m, 1.0), mat_cap);
    EXPECT_LE(Guarantee(GuaranteeKind::kRgm, m), mat_cap);
  }
}

TEST(GuaranteePropertyTest, AllKindsNondecreasing) {
  for (const auto& id : GuaranteeKindIds()) {
    const GuaranteeKind kind = ParseGuaranteeKind(id);
    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
      const double v = Guarantee(kind, i / 100.0);
      EXPECT_GE(v, prev - 1e-15) << id;
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
      prev = v;
    }
  }
}

TEST(GuaranteePropertyTest, HardnessBelowChord) {
  for (int i = 1; i < 100; ++i) {
    const double m = i / 100.0;
    EXPECT_LT(Guarantee(GuaranteeKind::kUnconstrainedHard, m), 0.5 + m / 2);
  }
}

TEST(SymmetryGapTest, MatchesClosedForm) {
  EXPECT_NEAR(SymmetryGapUnconstrained(0.0), 0.5, 1e-12);
  EXPECT_NEAR(SymmetryGapUnconstrained(1.0), 1.0, 1e-12);
  EXPECT_NEAR(SymmetryGapUnconstrained(0.5), 2.0 / 3, 1e-12);
  for (int i = 0; i <= 100; ++i) {
    const double m = i / 100.0;
    EXPECT_NEAR(SymmetryGapUnconstrained(m), 1 / (2 - m), 1e-6);
  }
}

TEST(UpperBoundTest, Values) {
  EXPECT_DOUBLE_EQ(UpperBoundFromOutput(0.8, 0.5), 1.6);
  EXPECT_DOUBLE_EQ(UpperBoundFromOutput(1.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(UpperBoundFromOutput(0.9, 0.25), 3.6);
  EXPECT_THROW(UpperBoundFromOutput(1.0, 0.0), PreconditionError);
  EXPECT_EQ(UpperBoundOrInfinity(1.0, 0.0),
            std::numeric_limits<double>::infinity());
}

TEST(CurveTest, EndpointsAndCsv) {
  const GuaranteeCurve hard = EvaluateCurve("unconstrained_hard");
  ASSERT_EQ(hard.points.size(), 101u);
  EXPECT_EQ(hard.points.front(), std::make_pair(0.0, 0.5));
  EXPECT_EQ(hard.points.back(), std::make_pair(1.0, 1.0));
  EXPECT_EQ(EvaluateCurve("rgm").points.back().second, 0.5);
  const std::string csv = CurvesToCsv({EvaluateCurve("greedy_matroid", 3)});
  EXPECT_EQ(csv,
            "m,value,expression_id,resolution\n"
            "0,0,greedy_matroid,0\n"
            "0.5,0.25,greedy_matroid,0\n"
            "1,0.5,greedy_matroid,0\n");
  EXPECT_THROW(EvaluateCurve("bogus"), ValidationError);
}

}  // namespace
}  // namespace monoratio
