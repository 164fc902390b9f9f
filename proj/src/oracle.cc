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

#include "monoratio/oracle.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "monoratio/errors.h"

namespace monoratio {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1) throw PreconditionError("GroundSet: n must be >= 1");
}

GroundSet::GroundSet(int n, std::vector<std::string> labels) : GroundSet(n) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw PreconditionError("GroundSet: label count does not match n");
  }
  labels_ = std::move(labels);
}

std::string GroundSet::label(int u) const {
  if (labels_.empty()) return std::to_string(u);
  return labels_.at(u);
}

SetFunctionOracle::SetFunctionOracle(GroundSet ground, Function fn)
    : ground_(std::move(ground)),
      fn_(std::make_shared<const Function>(std::move(fn))) {}

SetFunctionOracle::SetFunctionOracle(int n, Function fn)
    : SetFunctionOracle(GroundSet(n), std::move(fn)) {}

SetFunctionOracle::SetFunctionOracle(const SetFunctionOracle& other)
    : ground_(other.ground_), fn_(other.fn_), calls_(other.eval_count()) {}

SetFunctionOracle& SetFunctionOracle::operator=(
    const SetFunctionOracle& other) {
  if (this != &other) {
    ground_ = other.ground_;
    fn_ = other.fn_;
    calls_.store(other.eval_count(), std::memory_order_relaxed);
  }
  return *this;
}

double SetFunctionOracle::Evaluate(const Subset& s) const {
  if (s.universe_size() != ground_.size()) {
    throw PreconditionError("oracle: subset universe " +
                            std::to_string(s.universe_size()) +
                            " != ground set " + std::to_string(ground_.size()));
  }
  calls_.fetch_add(1, std::memory_order_relaxed);
  return (*fn_)(s);
}

SetFunctionOracle SetFunctionOracle::Fork() const {
  SetFunctionOracle copy(*this);
  copy.ResetCount();
  return copy;
}

FractionalPoint::FractionalPoint(std::vector<double> coords)
    : coords_(std::move(coords)) {
  for (int u = 0; u < size(); ++u) {
    const double v = coords_[u];
    if (!(v >= 0.0 && v <= 1.0)) {
      throw PreconditionError("FractionalPoint: coordinate " +
                              std::to_string(u) + " = " + std::to_string(v) +
                              " outside [0,1]");
    }
  }
}

FractionalPoint FractionalPoint::Indicator(const Subset& s) {
  FractionalPoint x(s.universe_size());
  s.ForEach([&](int u) { x.coords_[u] = 1.0; });
  return x;
}

void FractionalPoint::set(int u, double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw PreconditionError("FractionalPoint::set: value outside [0,1]");
  }
  coords_.at(u) = value;
}

double FractionalPoint::MaxNorm() const {
  double m = 0.0;
  for (double v : coords_) m = std::max(m, v);
  return m;
}

double Marginal(const SetFunctionOracle& f, int u, const Subset& s) {
  if (s.Contains(u)) {
    throw PreconditionError("Marginal: element " + std::to_string(u) +
                            " already in S");
  }
  return f(s.With(u)) - f(s);
}

double MultilinearExact(const SetFunctionOracle& f, const FractionalPoint& x,
                        int limit) {
  const int n = f.n();
  if (x.size() != n) throw PreconditionError("MultilinearExact: size mismatch");
  if (n > limit || n > 30) {
    throw SizeLimitError("MultilinearExact: n = " + std::to_string(n) +
                         " exceeds the exact limit " + std::to_string(limit) +
                         "; use MultilinearSampled");
  }
  double total = 0.0;
  const uint64_t count = uint64_t{1} << n;
  for (uint64_t mask = 0; mask < count; ++mask) {
    double p = 1.0;
    for (int u = 0; u < n && p != 0.0; ++u) {
      p *= (mask >> u) & 1 ? x[u] : 1.0 - x[u];
    }
    // Zero-probability sets contribute nothing; skipping them only saves calls.
    if (p == 0.0) continue;
    total += p * f(Subset::FromMask(n, mask));
  }
  return total;
}

Subset SampleRandomSet(const FractionalPoint& x, Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Subset s(x.size());
  for (int u = 0; u < x.size(); ++u) {
    // Draw for every coordinate so the stream does not depend on x.
    const double r = unif(rng);
    if (r < x[u]) s.Insert(u);
  }
  return s;
}

SampledEstimate MultilinearSampled(const SetFunctionOracle& f,
                                   const FractionalPoint& x,
                                   const SampleConfig& cfg) {
  if (cfg.samples < 2) {
    throw PreconditionError("MultilinearSampled: samples must be >= 2");
  }
  if (x.size() != f.n()) {
    throw PreconditionError("MultilinearSampled: size mismatch");
  }
  Rng rng(cfg.seed);
  // Welford, so a degenerate distribution reproduces f(S) exactly.
  double mean = 0.0;
  double m2 = 0.0;
  for (int i = 1; i <= cfg.samples; ++i) {
    const double v = f(SampleRandomSet(x, rng));
    const double delta = v - mean;
    mean += delta / i;
    m2 += delta * (v - mean);
  }
  const double var = m2 / (cfg.samples - 1);
  return {mean, std::sqrt(var / cfg.samples)};
}

Subset ThresholdSet(const FractionalPoint& x, double lambda) {
  Subset s(x.size());
  for (int u = 0; u < x.size(); ++u) {
    if (x[u] >= lambda) s.Insert(u);
  }
  return s;
}

double LovaszExtension(const SetFunctionOracle& f, const FractionalPoint& x) {
  const int n = f.n();
  if (x.size() != n) throw PreconditionError("LovaszExtension: size mismatch");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Ties by id; their gap weight is zero so the value does not depend on it.
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return x[a] > x[b]; });
  Subset prefix(n);
  double upper = 1.0;
  double total = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double lower = i < n ? x[order[i]] : 0.0;
    total += (upper - lower) * f(prefix);
    if (i < n) prefix.Insert(order[i]);
    upper = lower;
  }
  return total;
}

}  // namespace monoratio
