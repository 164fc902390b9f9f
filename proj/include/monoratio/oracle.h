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

// Set-function oracles and their continuous extensions.

#ifndef MONORATIO_ORACLE_H_
#define MONORATIO_ORACLE_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "monoratio/subset.h"

namespace monoratio {

// Every randomized routine takes one of these by reference; there is no
// global generator.
using Rng = std::mt19937_64;

class GroundSet {
 public:
  explicit GroundSet(int n);
  GroundSet(int n, std::vector<std::string> labels);

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Label for `u`, or its decimal id when no labels were supplied.
  std::string label(int u) const;

 private:
  int n_;
  std::vector<std::string> labels_;
};

// Black-box evaluator f: 2^N -> R counting every call. The underlying function
// is immutable and shared between copies; the counter is per object and
// tolerates concurrent evaluation. Trials that need exact per-run totals
// should evaluate through a Fork().
class SetFunctionOracle {
 public:
  using Function = std::function<double(const Subset&)>;

  SetFunctionOracle(GroundSet ground, Function fn);
  SetFunctionOracle(int n, Function fn);

  // Copies share the function and start from the source's current count.
  SetFunctionOracle(const SetFunctionOracle& other);
  SetFunctionOracle& operator=(const SetFunctionOracle& other);

  double Evaluate(const Subset& s) const;
  double operator()(const Subset& s) const { return Evaluate(s); }

  int64_t eval_count() const { return calls_.load(std::memory_order_relaxed); }
  void ResetCount() { calls_.store(0, std::memory_order_relaxed); }

  // Same function, fresh counter.
  SetFunctionOracle Fork() const;

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }

 private:
  GroundSet ground_;
  std::shared_ptr<const Function> fn_;
  mutable std::atomic<int64_t> calls_{0};
};

// A point of [0,1]^n.
class FractionalPoint {
 public:
  FractionalPoint() = default;
  explicit FractionalPoint(int n) : coords_(n, 0.0) {}
  explicit FractionalPoint(std::vector<double> coords);

  static FractionalPoint Indicator(const Subset& s);

  int size() const { return static_cast<int>(coords_.size()); }
  double operator[](int u) const { return coords_[u]; }
  void set(int u, double value);
  std::span<const double> values() const { return coords_; }
  double MaxNorm() const;

 private:
  std::vector<double> coords_;
};

struct SampleConfig {
  int samples = 1000;
  uint64_t seed = 0;
};

// Largest ground set accepted by MultilinearExact by default.
inline constexpr int kDefaultExactLimit = 20;

// f(u | S) = f(S + u) - f(S). Two oracle calls.
double Marginal(const SetFunctionOracle& f, int u, const Subset& s);

// Exact multilinear extension by enumerating all 2^n sets.
double MultilinearExact(const SetFunctionOracle& f, const FractionalPoint& x,
                        int limit = kDefaultExactLimit);

struct SampledEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

// Draws R(x): each u independently with probability x_u.
Subset SampleRandomSet(const FractionalPoint& x, Rng& rng);

// Monte-Carlo mean of f(R(x)) with its sample standard error.
SampledEstimate MultilinearSampled(const SetFunctionOracle& f,
                                   const FractionalPoint& x,
                                   const SampleConfig& cfg);

// T_lambda(x) = {u : x_u >= lambda}.
Subset ThresholdSet(const FractionalPoint& x, double lambda);

// Lovasz extension via the threshold decomposition; n + 1 oracle calls.
double LovaszExtension(const SetFunctionOracle& f, const FractionalPoint& x);

// f(T)/f(S) with the convention that the ratio is 1 whenever f(S) = 0.
inline double ValueRatio(double numerator, double denominator) {
  return denominator == 0.0 ? 1.0 : numerator / denominator;
}

}  // namespace monoratio

#endif  // MONORATIO_ORACLE_H_
