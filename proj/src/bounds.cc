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

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "monoratio/csv.h"
#include "monoratio/errors.h"

namespace monoratio {
namespace {

constexpr std::array<std::pair<GuaranteeKind, const char*>, 8> kKindIds = {{
    {GuaranteeKind::kUnconstrainedAlg, "unconstrained_alg"},
    {GuaranteeKind::kUnconstrainedHard, "unconstrained_hard"},
    {GuaranteeKind::kGreedyCard, "greedy_card"},
    {GuaranteeKind::kRandomGreedyCard, "random_greedy_card"},
    {GuaranteeKind::kGreedyMatroid, "greedy_matroid"},
    {GuaranteeKind::kMcg, "mcg"},
    {GuaranteeKind::kRgm, "rgm"},
    {GuaranteeKind::kFrankWolfe, "frank_wolfe"},
}};

constexpr double kInvE = 0.36787944117144233;  // e^-1

void CheckM(double m) {
  if (!(m >= 0.0 && m <= 1.0)) {
    throw PreconditionError("m must lie in [0, 1]");
  }
}

void CheckOptions(const HardnessOptions& opts) {
  if (opts.grid < 3 || opts.refinement_rounds < 0) {
    throw PreconditionError("hardness grid needs >= 3 points");
  }
}

using Fn = std::function<double(double)>;

// Golden-section search for a maximum of fn on [lo, hi].
std::pair<double, double> GoldenMax(const Fn& fn, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = fn(c);
  double fd = fn(d);
  for (int it = 0; it < 60 && b - a > 1e-13; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = fn(d);
    }
  }
  return fc >= fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

// Refines a grid maximizer: each round runs golden-section on a bracket
// around the incumbent and shrinks the bracket by 4. The incumbent is only
// replaced by strictly better points, so refinement never loses the grid
// value.
double Refine(const Fn& fn, double lo, double hi, double best_x, double best_v,
              double spacing, int rounds) {
  double h = spacing;
  for (int r = 0; r < rounds; ++r) {
    const auto [x, v] =
        GoldenMax(fn, std::max(lo, best_x - h), std::min(hi, best_x + h));
    if (v > best_v) {
      best_x = x;
      best_v = v;
    }
    h /= 4;
  }
  return best_v;
}

// Inner objective alpha * a(x) + (1 - alpha) * b(x) for x in [0, x_hi].
struct MinMaxProblem {
  double x_hi;
  Fn a;
  Fn b;
  // Denominator as a function of alpha.
  Fn denom;
};

double SolveMinMax(const MinMaxProblem& p, const HardnessOptions& opts) {
  CheckOptions(opts);
  const int g = opts.grid;
  const double dx = p.x_hi / (g - 1);
  std::vector<double> av(g);
  std::vector<double> bv(g);
  for (int i = 0; i < g; ++i) {
    av[i] = p.a(i * dx);
    bv[i] = p.b(i * dx);
  }
  auto inner_max = [&](double alpha) {
    int best = 0;
    double best_v = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < g; ++i) {
      const double v = alpha * av[i] + (1 - alpha) * bv[i];
      if (v > best_v) {
        best_v = v;
        best = i;
      }
    }
    const Fn fx = [&](double x) {
      return alpha * p.a(x) + (1 - alpha) * p.b(x);
    };
    return Refine(fx, 0.0, p.x_hi, best * dx, best_v, dx,
                  opts.refinement_rounds);
  };
  // Outer minimization over alpha, written as a maximization of the negation.
  const Fn outer = [&](double alpha) {
    return -inner_max(alpha) / p.denom(alpha);
  };
  const double da = 1.0 / (g - 1);
  int best = 0;
  double best_v = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < g; ++j) {
    const double v = outer(j * da);
    if (v > best_v) {
      best_v = v;
      best = j;
    }
  }
  return -Refine(outer, 0.0, 1.0, best * da, best_v, da,
                 opts.refinement_rounds);
}

}  // namespace

GuaranteeKind ParseGuaranteeKind(std::string_view id) {
  for (const auto& [kind, name] : kKindIds) {
    if (id == name) return kind;
  }
  throw ValidationError("unknown guarantee kind '" + std::string(id) + "'");
}

std::string GuaranteeKindId(GuaranteeKind kind) {
  for (const auto& [k, name] : kKindIds) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::vector<std::string> GuaranteeKindIds() {
  std::vector<std::string> out;
  for (const auto& entry : kKindIds) out.emplace_back(entry.second);
  return out;
}

double Guarantee(GuaranteeKind kind, double m, double extra) {
  CheckM(m);
  switch (kind) {
    case GuaranteeKind::kUnconstrainedAlg:
      return std::max(m, (2 + m) / 4);
    case GuaranteeKind::kUnconstrainedHard:
      return 1 / (2 - m);
    case GuaranteeKind::kGreedyCard:
      return m * (1 - kInvE);
    case GuaranteeKind::kRandomGreedyCard:
    case GuaranteeKind::kFrankWolfe:
      return m * (1 - kInvE) + (1 - m) * kInvE;
    case GuaranteeKind::kGreedyMatroid:
      return m / 2;
    case GuaranteeKind::kMcg: {
      if (!(extra >= 0.0)) throw PreconditionError("mcg needs T >= 0");
      const double et = std::exp(-extra);
      return m * (1 - et) + (1 - m) * extra * et;
    }
    case GuaranteeKind::kRgm:
      if (m == 1.0) return 0.5;
      return (1 + m + std::exp(-2 / (1 - m))) / 4;
  }
  throw ValidationError("unknown guarantee kind");
}

double CardinalityHardnessInner(double m, double alpha, double x) {
  return alpha * (m * x * x + 2 * x - 2 * x * x) +
         2 * (1 - alpha) * (1 - std::exp(x - 1)) * (1 - (1 - m) * x);
}

double MatroidHardnessInner(double m, double alpha, double x) {
  return alpha * (m * x * x + 2 * x - 2 * x * x) +
         2 * (1 - alpha) * (1 - std::exp(-0.5)) * (1 - (1 - m) * x);
}

double CardinalityHardness(double m, const HardnessOptions& opts) {
  CheckM(m);
  const MinMaxProblem p{
      1.0, [m](double x) { return CardinalityHardnessInner(m, 1.0, x); },
      [m](double x) { return CardinalityHardnessInner(m, 0.0, x); },
      [](double alpha) { return std::max(1.0, 2 * (1 - alpha)); }};
  return SolveMinMax(p, opts);
}

double MatroidHardness(double m, const HardnessOptions& opts) {
  CheckM(m);
  const MinMaxProblem p{
      0.5, [m](double x) { return MatroidHardnessInner(m, 1.0, x); },
      [m](double x) { return MatroidHardnessInner(m, 0.0, x); },
      [](double) { return 1.0; }};
  return SolveMinMax(p, opts);
}

double MatroidHardnessAtAlpha(double m, double alpha,
                              const HardnessOptions& opts) {
  CheckM(m);
  CheckOptions(opts);
  const double dx = 0.5 / (opts.grid - 1);
  const Fn fx = [&](double x) { return MatroidHardnessInner(m, alpha, x); };
  int best = 0;
  double best_v = fx(0.0);
  for (int i = 1; i < opts.grid; ++i) {
    const double v = fx(i * dx);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  return Refine(fx, 0.0, 0.5, best * dx, best_v, dx, opts.refinement_rounds);
}

double SymmetryGapUnconstrained(double m, const HardnessOptions& opts) {
  CheckM(m);
  CheckOptions(opts);
  const Fn fy = [m](double y) { return 2 * y - (2 - m) * y * y; };
  const double dy = 1.0 / (opts.grid - 1);
  int best = 0;
  double best_v = fy(0.0);
  for (int i = 1; i < opts.grid; ++i) {
    const double v = fy(i * dy);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  return Refine(fy, 0.0, 1.0, best * dy, best_v, dy,
                std::max(1, opts.refinement_rounds));
}

double UpperBoundFromOutput(double value, double guarantee) {
  if (!(guarantee > 0.0)) {
    throw PreconditionError("upper bound undefined for a guarantee <= 0");
  }
  return value / guarantee;
}

double UpperBoundOrInfinity(double value, double guarantee) {
  return guarantee > 0.0 ? value / guarantee
                         : std::numeric_limits<double>::infinity();
}

std::vector<std::string> CurveExpressionIds() {
  std::vector<std::string> ids = GuaranteeKindIds();
  ids.push_back("cardinality_hardness");
  ids.push_back("matroid_hardness");
  ids.push_back("symmetry_gap");
  return ids;
}

GuaranteeCurve EvaluateCurve(std::string_view expression_id, int points,
                             const HardnessOptions& opts, double extra) {
  if (points < 2) throw ValidationError("a curve needs at least 2 points");
  GuaranteeCurve curve;
  curve.expression_id = std::string(expression_id);
  curve.resolution = opts.grid;
  curve.refinement_rounds = opts.refinement_rounds;
  std::function<double(double)> eval;
  if (expression_id == "cardinality_hardness") {
    eval = [&](double m) { return CardinalityHardness(m, opts); };
    curve.notes = "additive epsilon dropped";
  } else if (expression_id == "matroid_hardness") {
    eval = [&](double m) { return MatroidHardness(m, opts); };
    curve.notes = "additive epsilon dropped";
  } else if (expression_id == "symmetry_gap") {
    eval = [&](double m) { return SymmetryGapUnconstrained(m, opts); };
  } else {
    const GuaranteeKind kind = ParseGuaranteeKind(expression_id);
    eval = [kind, extra](double m) { return Guarantee(kind, m, extra); };
    curve.resolution = 0;
    curve.refinement_rounds = 0;
    if (kind == GuaranteeKind::kUnconstrainedHard) {
      curve.notes = "additive epsilon dropped";
    }
  }
  for (int i = 0; i < points; ++i) {
    const double m =
        i == points - 1 ? 1.0 : static_cast<double>(i) / (points - 1);
    curve.points.emplace_back(m, eval(m));
  }
  return curve;
}

std::string CurvesToCsv(const std::vector<GuaranteeCurve>& curves) {
  std::ostringstream out;
  out << CsvRow().Add("m").Add("value").Add("expression_id").Add("resolution");
  for (const auto& c : curves) {
    for (const auto& [m, v] : c.points) {
      out << CsvRow().Add(m).Add(v).Add(c.expression_id).Add(c.resolution);
    }
  }
  return out.str();
}

}  // namespace monoratio
