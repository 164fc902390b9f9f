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

// Continuous algorithms: measured continuous greedy over the multilinear
// extension, swap rounding for uniform/partition matroids, and non-monotone
// Frank-Wolfe for smooth DR-submodular objectives.

#ifndef MONORATIO_CONTINUOUS_H_
#define MONORATIO_CONTINUOUS_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "monoratio/constraints.h"
#include "monoratio/oracle.h"
#include "monoratio/subset.h"

namespace monoratio {

struct McgConfig {
  double T = 1.0;
  int steps = 100;
  // Monte-Carlo sets per step; each set is reused for all n coordinates.
  int samples = 64;
  uint64_t seed = 0;
  bool record_trace = false;
  // Threads for the per-coordinate estimates of one step.
  int jobs = 1;
};

struct McgTraceRow {
  double t = 0.0;
  double max_norm = 0.0;
  double estimate = 0.0;
  double std_error = 0.0;
};

struct McgResult {
  FractionalPoint y;
  // delta * n * max |f| over observed values; a crude bound on the
  // discretization loss.
  double discretization_bound = 0.0;
  int64_t oracle_calls = 0;
  std::vector<McgTraceRow> trace;
};

// The polytope must sit inside [0, 1]^n.
McgResult MeasuredContinuousGreedy(const SetFunctionOracle& f,
                                   const DownClosedPolytope& p,
                                   const McgConfig& cfg);
// Linear steps solved exactly by matroid greedy.
McgResult MeasuredContinuousGreedy(const SetFunctionOracle& f,
                                   const MatroidConstraint& m,
                                   const McgConfig& cfg);

// CSV with header t,max_norm,estimate,stderr.
std::string McgTraceToCsv(const std::vector<McgTraceRow>& trace);

// Random independent set with Pr[u in S] = y_u. Uniform and partition
// matroids only; y must lie in the matroid polytope (1e-9 slack).
Subset SwapRounding(const FractionalPoint& y, const MatroidConstraint& m,
                    Rng& rng);

struct ContinuousObjective {
  std::function<double(std::span<const double>)> value;
  std::function<std::vector<double>(std::span<const double>)> gradient;
};

struct FwConfig {
  double eps = 0.01;
  // Smoothness and diameter constants; only used for the reported slack.
  double L = 0.0;
  double D = 0.0;
  bool record_trace = false;
};

struct FwResult {
  std::vector<double> y;
  double value = 0.0;
  int iterations = 0;
  // eps * L * D^2.
  double additive_slack = 0.0;
  // Iterates after each step when requested.
  std::vector<std::vector<double>> trace;
};

// ceil(1/eps) steps of y += eps (1 - y/u) * s with s maximizing
// ((1 - y/u) * grad F(y)) . x over P. With u = 1 this is the textbook update;
// other boxes are handled in normalized coordinates y/u.
FwResult FrankWolfeNonmonotone(const ContinuousObjective& objective,
                               const DownClosedPolytope& p,
                               const FwConfig& cfg);

}  // namespace monoratio

#endif  // MONORATIO_CONTINUOUS_H_
