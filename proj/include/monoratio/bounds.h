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

// Approximation guarantees and inapproximability curves as functions of the
// monotonicity ratio m, plus the "value over guarantee" bound on OPT.

#ifndef MONORATIO_BOUNDS_H_
#define MONORATIO_BOUNDS_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monoratio {

enum class GuaranteeKind {
  kUnconstrainedAlg,   // max{m, (2 + m) / 4}
  kUnconstrainedHard,  // 1 / (2 - m)
  kGreedyCard,         // m (1 - 1/e)
  kRandomGreedyCard,   // m (1 - 1/e) + (1 - m) / e
  kGreedyMatroid,      // m / 2
  kMcg,                // m (1 - e^-T) + (1 - m) T e^-T, T = extra
  kRgm,                // (1 + m + e^{-2/(1-m)}) / 4, and 1/2 at m = 1
  kFrankWolfe,         // m (1 - 1/e) + (1 - m) / e
};

// Throws ValidationError for unknown ids.
GuaranteeKind ParseGuaranteeKind(std::string_view id);
std::string GuaranteeKindId(GuaranteeKind kind);
std::vector<std::string> GuaranteeKindIds();

// `extra` is the stopping time T for kMcg and ignored otherwise.
double Guarantee(GuaranteeKind kind, double m, double extra = 1.0);

struct HardnessOptions {
  int grid = 2001;
  int refinement_rounds = 3;
};

// alpha (m x^2 + 2x - 2x^2) + 2 (1 - alpha)(1 - e^{x-1})(1 - (1 - m) x).
double CardinalityHardnessInner(double m, double alpha, double x);
// Same with e^{-1/2} in place of e^{x-1}; x ranges over [0, 1/2].
double MatroidHardnessInner(double m, double alpha, double x);

// min over alpha of [max over x of the inner term] / max{1, 2 (1 - alpha)}.
double CardinalityHardness(double m, const HardnessOptions& opts = {});
// min over alpha of max over x in [0, 1/2] of the inner term.
double MatroidHardness(double m, const HardnessOptions& opts = {});
// Inner maximum for one alpha.
double MatroidHardnessAtAlpha(double m, double alpha,
                              const HardnessOptions& opts = {});

// Numeric max over y in [0, 1] of 2y - (2 - m) y^2; equals 1 / (2 - m).
double SymmetryGapUnconstrained(double m, const HardnessOptions& opts = {});

// value / guarantee. Throws PreconditionError when guarantee <= 0.
double UpperBoundFromOutput(double value, double guarantee);
// Same but +inf instead of throwing, for CSV output.
double UpperBoundOrInfinity(double value, double guarantee);

struct GuaranteeCurve {
  std::string expression_id;
  std::vector<std::pair<double, double>> points;
  int resolution = 0;
  int refinement_rounds = 0;
  // Additive epsilon terms of the hardness statements are dropped.
  std::string notes;
};

// Expression ids: every GuaranteeKindId plus cardinality_hardness,
// matroid_hardness and symmetry_gap. `points` m values evenly spaced in [0,1].
std::vector<std::string> CurveExpressionIds();
GuaranteeCurve EvaluateCurve(std::string_view expression_id, int points = 101,
                             const HardnessOptions& opts = {},
                             double extra = 1.0);

// Header m,value,expression_id,resolution then one row per point.
std::string CurvesToCsv(const std::vector<GuaranteeCurve>& curves);

}  // namespace monoratio

#endif  // MONORATIO_BOUNDS_H_
