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

// Exhaustive monotonicity-ratio and submodularity certifiers, plus the
// closed-form ratio bounds of the application objectives.

#ifndef MONORATIO_RATIO_H_
#define MONORATIO_RATIO_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "monoratio/oracle.h"
#include "monoratio/subset.h"

namespace monoratio {

inline constexpr int kRatioExactLimit = 16;
inline constexpr int kWeakRatioLimit = 13;
inline constexpr int kSubmodularCheckLimit = 12;

// min f(T) / f(S) over the scanned pairs (1 when f(S) = 0), with a witness.
struct RatioReport {
  double ratio = 1.0;
  Subset witness_s;
  Subset witness_t;
  int64_t eval_count = 0;
};

// O(n 2^n) downward DP over g(S) = min_{T >= S} f(T). For each S the witness T
// is the minimizer of f(T) with the smallest mask; across S the first (by
// ascending mask) strict improvement wins. Rejects negative values.
RatioReport ExactMonotonicityRatio(const SetFunctionOracle& f,
                                   int limit = kRatioExactLimit);

// Reference all-pairs scan (S ascending, T ascending), same conventions.
RatioReport NaiveMonotonicityRatio(const SetFunctionOracle& f, int limit = 10);

using FeasiblePredicate = std::function<bool(const Subset&)>;

// min over feasible S, T of f(S u T) / f(S).
RatioReport ExactWeakMonotonicityRatio(const SetFunctionOracle& f,
                                       const FeasiblePredicate& feasible,
                                       int limit = kWeakRatioLimit);

struct SubmodularityReport {
  bool submodular = true;
  // On failure: f(u | S) < f(u | T) with S a subset of T and u outside T.
  Subset s;
  Subset t;
  int element = -1;
  double violation = 0.0;
};

// Exhaustive diminishing-returns check with tolerance 1e-9 * max(1, max |f|).
SubmodularityReport CheckSubmodular(const SetFunctionOracle& f,
                                    int limit = kSubmodularCheckLimit);
inline bool IsSubmodular(const SetFunctionOracle& f) {
  return CheckSubmodular(f).submodular;
}

// 1 for lambda <= 1/2, else 2 (1 - lambda).
double MovieRatioBound(double lambda);
// max(0, 1 - 2k / n).
double ImageWeakRatioBound(int k, int n);
// (1 - 2 beta) when the box minimum is nonnegative, else scaled by
// alpha / (1 + alpha).
double QuadraticRatioBound(double alpha, double beta, bool min_nonneg);

struct GridRatioReport {
  double ratio = 1.0;
  std::vector<double> x;
  std::vector<double> y;
  int64_t points = 0;
};

// Exact minimum of F(y) / F(x) over grid pairs x <= y of the box [0, upper]
// with `per_axis` points per coordinate. Only an upper bound on the
// continuous ratio.
GridRatioReport GridMonotonicityRatio(
    const std::function<double(std::span<const double>)>& value,
    std::span<const double> upper, int per_axis);

// CSV: ratio,witness_s,witness_t,eval_count (witnesses as "{..}").
std::string RatioReportCsvHeader();
std::string RatioReportCsvRow(const RatioReport& r);

}  // namespace monoratio

#endif  // MONORATIO_RATIO_H_
