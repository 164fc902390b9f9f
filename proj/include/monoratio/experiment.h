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

// Experiment harness: named objectives and algorithms, parameter sweeps with
// the value-over-guarantee bounds on OPT, and CSV / SVG emitters.

#ifndef MONORATIO_EXPERIMENT_H_
#define MONORATIO_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monoratio/apps.h"
#include "monoratio/constraints.h"
#include "monoratio/continuous.h"
#include "monoratio/discrete.h"
#include "monoratio/oracle.h"

namespace monoratio {

// ---- Objectives -----------------------------------------------------------

struct ObjectiveOptions {
  // movie, image, synthetic, synthetic-cut, synthetic-coverage,
  // synthetic-mixture or modular.
  std::string kind = "synthetic-mixture";
  int n = 8;
  double lambda = 0.5;
  // Ratio of the synthetic objective.
  double m = 0.5;
  int dim = 25;
  // Image clusters.
  int clusters = 3;
  uint64_t seed = 0;
  // Optional feature CSV for movie / image; overrides the synthetic data.
  std::string features_path;
  bool clip = false;
  // Weights of the modular objective.
  std::vector<double> weights;
};

std::vector<std::string> ObjectiveKinds();
// Throws ValidationError for unknown kinds or bad parameters.
SetFunctionOracle BuildObjective(const ObjectiveOptions& opts);

// Weighted sum of two-element blocks {2i, 2i+1} each scoring m on the pair
// and 1 on a singleton (a trailing odd element is modular). Nonnegative,
// submodular and with monotonicity ratio exactly m for n >= 2.
SetFunctionOracle SyntheticPairsObjective(int n, double m, uint64_t seed);

// Image similarity over `clusters` equal groups; n must be a multiple of
// `clusters`. Item i belongs to cluster i / (n / clusters).
Matrix SyntheticImageSimilarity(int n, int clusters, int dim, uint64_t seed);

// `blocks` contiguous near-equal blocks, each with the given capacity.
MatroidConstraint ContiguousPartition(int n, int blocks, int capacity);

// ---- Algorithms -----------------------------------------------------------

struct AlgorithmParams {
  int k = 1;
  double eps = 0.1;
  double T = 1.0;
  int steps = 100;
  int samples = 64;
};

// Set-function algorithm ids (frank-wolfe is handled separately).
std::vector<std::string> AlgorithmIds();
bool IsKnownAlgorithm(std::string_view id);
bool IsMatroidAlgorithm(std::string_view id);
// Guarantee kind id used for OPT bounds, or empty when there is none.
std::string AlgorithmGuaranteeId(std::string_view id);

// Runs one algorithm. Matroid algorithms need `m`; others use params.k
// (double-greedy ignores it). mcg rounds its fractional output with swap
// rounding, so `m` must be uniform or partition.
RunResult RunAlgorithm(std::string_view id, const SetFunctionOracle& f,
                       const MatroidConstraint* m,
                       const AlgorithmParams& params, Rng& rng);

struct TrialStats {
  double mean = 0.0;
  double stderr_mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};
TrialStats Summarize(const std::vector<double>& values);

// ---- Sweeps ---------------------------------------------------------------

struct ExperimentSpec {
  // movie, image, quadratic or synthetic.
  std::string objective = "movie";
  std::vector<std::string> algorithms;
  // lambda, k, m, alpha, beta or n.
  std::string sweep;
  std::vector<double> values;
  int n = 50;
  int k = 10;
  double lambda = 0.75;
  double m = 0.5;
  double alpha = 0.5;
  double beta = 0.2;
  double v = 0.01;
  int blocks = 3;
  int dim = 25;
  int trials = 10;
  uint64_t seed = 0;
  double eps = 0.1;
  double T = 1.0;
  int steps = 100;
  int samples = 64;
  // Algorithm whose guarantee turns its value into the OPT bounds; empty
  // picks the first listed algorithm with a positive guarantee at m = 0.
  std::string reference;
  std::string csv_path;
  std::string svg_path;
};

// Every problem with the spec, in a stable order; empty when valid.
std::vector<std::string> ValidateExperimentSpec(const ExperimentSpec& spec);
// JSON object with the ExperimentSpec field names ("csv" and "svg" for the
// paths). Throws ValidationError listing every problem at once.
ExperimentSpec ParseExperimentSpecJson(std::string_view text);

struct ExperimentTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::string reference;
  std::string guarantee_id;
};

// Columns: sweep_value, <alg>_mean, <alg>_stderr per algorithm (dashes
// become underscores), m_bound, reference_value, slack, ub_prev, ub_new,
// band_lo, band_hi. ub_prev = (value + slack) / guarantee(0) and
// ub_new = (value + slack) / guarantee(m_bound); the band spans
// [ub_new, ub_prev]. Trials and sweep points run on up to `jobs` threads;
// trial t uses seed spec.seed + t. Throws ValidationError on a bad spec.
ExperimentTable RunExperiment(const ExperimentSpec& spec, int jobs = 1);

std::string ExperimentToCsv(const ExperimentTable& table);

// ---- SVG ------------------------------------------------------------------

struct SvgSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct SvgBand {
  std::vector<double> x;
  std::vector<double> lo;
  std::vector<double> hi;
};

// Minimal SVG 1.1 line chart: axes with min/max tick labels, one polyline
// per series, a legend and an optional shaded band. Non-finite points are
// dropped.
std::string LinePlotSvg(const std::string& title, const std::string& x_label,
                        const std::vector<SvgSeries>& series,
                        const std::optional<SvgBand>& band = std::nullopt);

// Bounds and algorithm means against the sweep value.
std::string ExperimentToSvg(const ExperimentTable& table,
                            const std::string& title);

}  // namespace monoratio

#endif  // MONORATIO_EXPERIMENT_H_
