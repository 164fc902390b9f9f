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

// Discrete maximization algorithms: unconstrained double greedy, greedy and
// random greedy under cardinality and matroid constraints, the accelerated
// threshold/sampling variants, and the Random baseline.

#ifndef MONORATIO_DISCRETE_H_
#define MONORATIO_DISCRETE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoratio/constraints.h"
#include "monoratio/oracle.h"
#include "monoratio/subset.h"

namespace monoratio {

struct TraceEntry {
  int iteration = 0;
  // Element considered at this step; -1 when nothing was eligible.
  int element = -1;
  double marginal = 0.0;
  bool accepted = false;
};

struct RunResult {
  Subset solution;
  double value = 0.0;
  int64_t oracle_calls = 0;
  std::optional<uint64_t> seed;
  std::vector<TraceEntry> trace;
  // f of the current solution after each iteration (algorithm-specific
  // notion of iteration; empty for single-shot baselines).
  std::vector<double> trajectory;
};

// CSV with header iteration,element,marginal,accepted.
std::string TraceToCsv(const std::vector<TraceEntry>& trace);

RunResult DoubleGreedy(const SetFunctionOracle& f, Rng& rng);

// Better of DoubleGreedy and the whole ground set.
RunResult BestOfWithGround(const SetFunctionOracle& f, Rng& rng);

RunResult GreedyCardinality(const SetFunctionOracle& f, int k);

RunResult RandomGreedyCardinality(const SetFunctionOracle& f, int k, Rng& rng);

// Descending thresholds from the best singleton gain, decay (1 - eps), down to
// eps * d / n.
RunResult ThresholdGreedy(const SetFunctionOracle& f, int k, double eps);

// k rounds, each scanning a uniform sample of ceil((n / k) ln(1 / eps))
// candidates.
RunResult SampleGreedy(const SetFunctionOracle& f, int k, double eps, Rng& rng);

// Random greedy whose candidate set M_i is gathered by a decaying threshold
// instead of an exact top-k sort.
RunResult ThresholdRandomGreedy(const SetFunctionOracle& f, int k, double eps,
                                Rng& rng);

RunResult GreedyMatroid(const SetFunctionOracle& f, const MatroidConstraint& m);

RunResult RandomGreedyMatroid(const SetFunctionOracle& f,
                              const MatroidConstraint& m, double eps, Rng& rng);

// Uniform random set of the largest allowed size.
RunResult RandomBaselineCardinality(const SetFunctionOracle& f, int k,
                                    Rng& rng);
RunResult RandomBaselineMatroid(const SetFunctionOracle& f,
                                const MatroidConstraint& m, Rng& rng);

}  // namespace monoratio

#endif  // MONORATIO_DISCRETE_H_
