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

#include "monoratio/continuous.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "monoratio/csv.h"
#include "monoratio/errors.h"

namespace monoratio {
namespace {

void CheckConfig(const McgConfig& cfg) {
  if (!(cfg.T >= 0.0) || cfg.steps < 1 || cfg.samples < 2 || cfg.jobs < 1) {
    throw PreconditionError(
        "continuous greedy needs T >= 0, steps >= 1, samples >= 2, jobs >= 1");
  }
}

using LinearStep =
    std::function<std::vector<double>(const std::vector<double>&)>;

McgResult RunMcg(const SetFunctionOracle& f, const LinearStep& linear_step,
                 const McgConfig& cfg) {
  CheckConfig(cfg);
  SetFunctionOracle g = f.Fork();
  const int n = g.n();
  std::vector<double> y(n, 0.0);
  McgResult res;
  Rng rng(cfg.seed);
  double max_abs = 0.0;
  const double delta = cfg.T / cfg.steps;
  std::vector<Subset> sets(cfg.samples);
  std::vector<double> base(cfg.samples);
  std::vector<double> w(n);
  for (int step = 0; cfg.T > 0.0 && step < cfg.steps; ++step) {
    const FractionalPoint yp(y);
    for (int j = 0; j < cfg.samples; ++j) {
      sets[j] = SampleRandomSet(yp, rng);
      base[j] = g(sets[j]);
    }
    // Common random numbers: every coordinate reuses the same sampled sets.
    auto estimate = [&](int lo, int hi, double& local_max) {
      for (int u = lo; u < hi; ++u) {
        double total = 0.0;
        for (int j = 0; j < cfg.samples; ++j) {
          if (sets[j].Contains(u)) continue;
          const double v = g(sets[j].With(u));
          local_max = std::max(local_max, std::abs(v));
          total += v - base[j];
        }
        w[u] = total / cfg.samples;
      }
    };
    const int jobs = std::min(cfg.jobs, n);
    if (jobs <= 1) {
      estimate(0, n, max_abs);
    } else {
      std::vector<std::thread> pool;
      std::vector<double> maxima(jobs, 0.0);
      for (int t = 0; t < jobs; ++t) {
        pool.emplace_back(estimate, n * t / jobs, n * (t + 1) / jobs,
                          std::ref(maxima[t]));
      }
      for (auto& th : pool) th.join();
      for (double v : maxima) max_abs = std::max(max_abs, v);
    }
    double mean = 0.0;
    double m2 = 0.0;
    for (int j = 0; j < cfg.samples; ++j) {
      max_abs = std::max(max_abs, std::abs(base[j]));
      const double d = base[j] - mean;
      mean += d / (j + 1);
      m2 += d * (base[j] - mean);
    }
    if (cfg.record_trace) {
      double norm = 0.0;
      for (double v : y) norm = std::max(norm, v);
      res.trace.push_back({step * delta, norm, mean,
                           std::sqrt(m2 / (cfg.samples - 1) / cfg.samples)});
    }
    const std::vector<double> x = linear_step(w);
    for (int u = 0; u < n; ++u) {
      y[u] = std::min(1.0, y[u] + delta * (1.0 - y[u]) * x[u]);
    }
  }
  if (cfg.record_trace) {
    double norm = 0.0;
    for (double v : y) norm = std::max(norm, v);
    const SampledEstimate e =
        MultilinearSampled(g, FractionalPoint(y), {cfg.samples, cfg.seed + 1});
    res.trace.push_back({cfg.T, norm, e.estimate, e.std_error});
  }
  res.y = FractionalPoint(std::move(y));
  res.discretization_bound = delta * n * max_abs;
  res.oracle_calls = g.eval_count();
  return res;
}

struct BlockLayout {
  std::vector<int> elements;
  int capacity = 0;
};

// Bases of the uniform matroid of rank c over `values`, each at most 1 and
// summing to c, with weights: lay the values on [0, c) back to back; the
// base for offset lambda holds every item whose interval contains a point
// of lambda + Z.
std::vector<std::pair<double, std::vector<int>>> DecomposeUniform(
    const std::vector<double>& values, int c) {
  const int k = static_cast<int>(values.size());
  std::vector<double> start(k + 1, 0.0);
  for (int i = 0; i < k; ++i) start[i + 1] = start[i] + values[i];
  // Rounding drift would otherwise leave a sliver with only c - 1 items.
  start[k] = c;
  std::vector<double> cuts = {0.0, 1.0};
  for (int i = 0; i <= k; ++i) cuts.push_back(start[i] - std::floor(start[i]));
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::pair<double, std::vector<int>>> out;
  for (size_t j = 0; j + 1 < cuts.size(); ++j) {
    const double weight = cuts[j + 1] - cuts[j];
    if (weight <= 1e-15) continue;
    const double lambda = 0.5 * (cuts[j] + cuts[j + 1]);
    std::vector<int> base;
    for (int i = 0; i < k; ++i) {
      // Smallest lambda + t at or after start[i].
      const double first = lambda + std::ceil(start[i] - lambda);
      if (first < start[i + 1] && first < c) base.push_back(i);
    }
    out.emplace_back(weight, std::move(base));
  }
  return out;
}

// Merges two bases of a uniform matroid (any exchange is valid there).
std::vector<int> MergeBases(double b1, std::vector<int> s1, double b2,
                            std::vector<int> s2, Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  while (s1 != s2) {
    int i = -1;
    int j = -1;
    for (int v : s1) {
      if (!std::binary_search(s2.begin(), s2.end(), v)) {
        i = v;
        break;
      }
    }
    for (int v : s2) {
      if (!std::binary_search(s1.begin(), s1.end(), v)) {
        j = v;
        break;
      }
    }
    if (unif(rng) < b1 / (b1 + b2)) {
      std::replace(s2.begin(), s2.end(), j, i);
      std::sort(s2.begin(), s2.end());
    } else {
      std::replace(s1.begin(), s1.end(), i, j);
      std::sort(s1.begin(), s1.end());
    }
  }
  return s1;
}

}  // namespace

McgResult MeasuredContinuousGreedy(const SetFunctionOracle& f,
                                   const DownClosedPolytope& p,
                                   const McgConfig& cfg) {
  p.Validate();
  if (p.n() != f.n()) throw PreconditionError("polytope size mismatch");
  for (double v : p.upper) {
    if (v > 1.0) throw PreconditionError("polytope must lie in [0,1]^n");
  }
  return RunMcg(
      f,
      [&p](const std::vector<double>& w) {
        return LinearMaximizePolytope(p, w).x;
      },
      cfg);
}

McgResult MeasuredContinuousGreedy(const SetFunctionOracle& f,
                                   const MatroidConstraint& m,
                                   const McgConfig& cfg) {
  if (m.n() != f.n()) throw PreconditionError("matroid size mismatch");
  return RunMcg(
      f,
      [&m](const std::vector<double>& w) {
        std::vector<double> x(w.size(), 0.0);
        MaxWeightIndependentSet(m, w).ForEach([&](int u) { x[u] = 1.0; });
        return x;
      },
      cfg);
}

std::string McgTraceToCsv(const std::vector<McgTraceRow>& trace) {
  std::ostringstream out;
  out << CsvRow().Add("t").Add("max_norm").Add("estimate").Add("stderr");
  for (const auto& r : trace) {
    out << CsvRow().Add(r.t).Add(r.max_norm).Add(r.estimate).Add(r.std_error);
  }
  return out.str();
}

Subset SwapRounding(const FractionalPoint& y, const MatroidConstraint& m,
                    Rng& rng) {
  const int n = m.n();
  if (y.size() != n) throw PreconditionError("rounding: size mismatch");
  std::vector<BlockLayout> blocks;
  switch (m.kind()) {
    case MatroidConstraint::Kind::kUniform: {
      BlockLayout all;
      for (int u = 0; u < n; ++u) all.elements.push_back(u);
      all.capacity = m.rank();
      blocks.push_back(std::move(all));
      break;
    }
    case MatroidConstraint::Kind::kPartition:
      for (const auto& b : m.blocks()) {
        blocks.push_back(
            {b.elements,
             std::min<int>(b.capacity, static_cast<int>(b.elements.size()))});
      }
      for (int u = 0; u < n; ++u) {
        if (m.block_of(u) < 0 && y[u] > 1e-9) {
          throw PreconditionError(
              "rounding: y is positive outside every block");
        }
      }
      break;
    case MatroidConstraint::Kind::kOracle:
      throw PreconditionError(
          "swap rounding supports uniform and partition matroids only");
  }
  Subset out(n);
  for (const auto& block : blocks) {
    const int c = block.capacity;
    if (c == 0 || block.elements.empty()) continue;
    std::vector<double> values;
    double sum = 0.0;
    for (int u : block.elements) {
      values.push_back(y[u]);
      sum += y[u];
    }
    if (sum > c + 1e-9) {
      throw PreconditionError("rounding: y violates a block capacity");
    }
    if (sum > c) {
      for (double& v : values) v *= c / sum;
      sum = c;
    }
    // Slack dummies lift y to the base polytope.
    const double slack = (c - sum) / c;
    for (int d = 0; d < c; ++d) values.push_back(slack);
    const auto bases = DecomposeUniform(values, c);
    std::vector<int> merged = bases.front().second;
    double weight = bases.front().first;
    for (size_t i = 1; i < bases.size(); ++i) {
      merged = MergeBases(weight, merged, bases[i].first, bases[i].second, rng);
      weight += bases[i].first;
    }
    for (int idx : merged) {
      if (idx < static_cast<int>(block.elements.size())) {
        out.Insert(block.elements[idx]);
      }
    }
  }
  return out;
}

FwResult FrankWolfeNonmonotone(const ContinuousObjective& objective,
                               const DownClosedPolytope& p,
                               const FwConfig& cfg) {
  if (!(cfg.eps > 0.0 && cfg.eps < 1.0)) {
    throw PreconditionError("Frank-Wolfe eps must lie in (0, 1)");
  }
  p.Validate();
  const int n = p.n();
  const int iterations = static_cast<int>(std::ceil(1.0 / cfg.eps - 1e-9));
  std::vector<double> y(n, 0.0);
  FwResult res;
  auto room = [&](int j) {
    return p.upper[j] > 0.0 ? std::max(0.0, 1.0 - y[j] / p.upper[j]) : 0.0;
  };
  for (int it = 0; it < iterations; ++it) {
    const std::vector<double> grad = objective.gradient(y);
    if (static_cast<int>(grad.size()) != n) {
      throw PreconditionError("gradient has the wrong dimension");
    }
    std::vector<double> d(n);
    for (int j = 0; j < n; ++j) d[j] = room(j) * grad[j];
    const std::vector<double> s = LinearMaximizePolytope(p, d).x;
    std::vector<double> next(y);
    for (int j = 0; j < n; ++j) {
      next[j] = std::min(p.upper[j], y[j] + cfg.eps * room(j) * s[j]);
    }
    y = std::move(next);
    if (cfg.record_trace) res.trace.push_back(y);
  }
  res.value = objective.value(y);
  res.y = std::move(y);
  res.iterations = iterations;
  res.additive_slack = cfg.eps * cfg.L * cfg.D * cfg.D;
  return res;
}

}  // namespace monoratio
