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

// Application objectives: a coverage/diversity movie summary, a facility
// location image summary and a box-constrained quadratic program, plus the
// data plumbing they need.

#ifndef MONORATIO_APPS_H_
#define MONORATIO_APPS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monoratio/constraints.h"
#include "monoratio/continuous.h"
#include "monoratio/oracle.h"

namespace monoratio {

using Matrix = std::vector<std::vector<double>>;

struct FeatureMatrix {
  std::vector<std::string> labels;
  Matrix rows;

  int n() const { return static_cast<int>(rows.size()); }
  int d() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
};

// Header `label,f1,...,fd` then one item per line. Throws ParseError (with
// the line number) on ragged rows, non-numeric or non-finite cells, a
// missing feature column or no data rows.
FeatureMatrix ParseFeaturesCsv(std::string_view text);
FeatureMatrix LoadFeaturesCsv(const std::string& path);
std::string FeaturesToCsv(const FeatureMatrix& x);

// s_{u,v} = <x_u, x_v>. A negative product throws ValidationError unless
// `clip_negative` is set, in which case it becomes 0.
Matrix InnerProductSimilarity(const FeatureMatrix& x,
                              bool clip_negative = false);

// Square, symmetric (1e-12 relative), finite and nonnegative, or
// ValidationError.
void ValidateSimilarity(const Matrix& s);

// sum_{u in N} sum_{v in S} s_{u,v} - lambda sum_{u,v in S} s_{u,v}.
// lambda must lie in [0, 1].
SetFunctionOracle MovieObjective(Matrix s, double lambda);

// sum_{u in N} max_{v in S} s_{u,v} - (1/n) sum_{u,v in S} s_{u,v}, with the
// max over the empty set taken as 0.
SetFunctionOracle ImageObjective(Matrix s);

// Nonnegative features: each item mixes a few of `d` latent genres.
FeatureMatrix SyntheticMovieFeatures(int n, int d, uint64_t seed);
// `clusters` groups of `per_cluster` unit-norm nonnegative vectors around
// random centers.
FeatureMatrix SyntheticImageFeatures(int clusters, int per_cluster, int d,
                                     uint64_t seed);

struct BoxQpResult {
  double value = 0.0;
  std::vector<double> x;
};

// Approximate global minimum of 1/2 x'Hx + h'x over [0, u]: every box
// vertex, `starts` projected gradient descents from random points, then
// exact coordinate line searches from the best candidates. n <= 16.
BoxQpResult MinBoxQuadratic(const Matrix& H, std::span<const double> h,
                            std::span<const double> u, uint64_t seed = 0,
                            int starts = 200);

// Power-iteration estimate of the spectral norm of a symmetric matrix.
double SpectralNormEstimate(const Matrix& H, int iterations = 500);

struct QuadraticInstance {
  int n = 0;
  Matrix H;
  Matrix A;
  std::vector<double> b;
  std::vector<double> u;
  std::vector<double> h;
  double c = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double v = 0.0;
  uint64_t seed = 0;
  // Box minimum of 1/2 x'Hx + h'x.
  double M = 0.0;
  // 1.01 x the power-iteration norm of H.
  double L = 0.0;
  // ||u||_2, an upper bound on max over P of ||x||_2.
  double D = 0.0;

  // F(x) = 1/2 x'Hx + h'x + c.
  double Value(std::span<const double> x) const;
  std::vector<double> Gradient(std::span<const double> x) const;
  // {0 <= x <= u, Ax <= b}.
  DownClosedPolytope Polytope() const;
  ContinuousObjective Objective() const;
};

// H symmetric with entries uniform on [-1, 0], A uniform on [v, v + 1],
// b = 1, u_j = min_i b_i / A_ij, h = -beta H'u, c = -M + alpha |M|.
QuadraticInstance GenerateQuadraticInstance(int n, double v, double beta,
                                            double alpha, uint64_t seed);

std::string QuadraticInstanceToJson(const QuadraticInstance& q);
// Throws ParseError on malformed input.
QuadraticInstance QuadraticInstanceFromJson(std::string_view text);

}  // namespace monoratio

#endif  // MONORATIO_APPS_H_
