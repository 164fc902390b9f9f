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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "monoratio/errors.h"
#include "monoratio/ratio.h"
#include "monoratio/set_functions.h"
#include "test_util.h"

namespace monoratio {
namespace {

using ::monoratio::testing::RandomPartition;
using ::monoratio::testing::RandomSubmodular;
using ::monoratio::testing::Uniform01;

const double kOneMinusInvE = 1 - std::exp(-1.0);

double BruteOpt(const SetFunctionOracle& f, const MatroidConstraint& m) {
  double best = 0.0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << f.n()); ++mask) {
    const Subset s = Subset::FromMask(f.n(), mask);
    if (m.IsIndependent(s)) best = std::max(best, f(s));
  }
  return best;
}

TEST(McgTest, ModularUniformFollowsOde) {
  const SetFunctionOracle f = ModularFunction({10, 9, 8, 1, 1, 0.5});
  McgConfig cfg;
  cfg.steps = 200;
  const McgResult r =
      MeasuredContinuousGreedy(f, MatroidConstraint::Uniform(6, 3), cfg);
  for (int u = 0; u < 3; ++u) EXPECT_NEAR(r.y[u], kOneMinusInvE, 0.01) << u;
  for (int u = 3; u < 6; ++u) EXPECT_EQ(r.y[u], 0.0) << u;
  EXPECT_GT(r.oracle_calls, 0);
  EXPECT_GT(r.discretization_bound, 0.0);
}

TEST(McgTest, MonotoneCoverageReachesOneMinusInvE) {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    const SetFunctionOracle f = RandomSubmodular(8, seed, 0.0);
    const MatroidConstraint m = MatroidConstraint::Uniform(8, 3);
    McgConfig cfg;
    cfg.seed = seed;
    const McgResult r = MeasuredContinuousGreedy(f, m, cfg);
    const double opt = BruteOpt(f, m);
    EXPECT_GE(MultilinearExact(f, r.y), (kOneMinusInvE - 0.03) * opt) << seed;
  }
}

TEST(McgTest, ZeroTimeGivesOrigin) {
  const SetFunctionOracle f = RandomSubmodular(5, 3);
  McgConfig cfg;
  cfg.T = 0.0;
  const McgResult r =
      MeasuredContinuousGreedy(f, MatroidConstraint::Uniform(5, 2), cfg);
  EXPECT_EQ(r.y.MaxNorm(), 0.0);
  EXPECT_EQ(MultilinearExact(f, r.y), f(Subset(5)));
}

TEST(McgTest, Errors) {
  const SetFunctionOracle f = RandomSubmodular(4, 1);
  McgConfig bad;
  bad.steps = 0;
  EXPECT_THROW(
      MeasuredContinuousGreedy(f, MatroidConstraint::Uniform(4, 2), bad),
      PreconditionError);
  EXPECT_THROW(MeasuredContinuousGreedy(
                   f, DownClosedPolytope::Box({1, 1, 2, 1}), McgConfig{}),
               PreconditionError);
  EXPECT_THROW(MeasuredContinuousGreedy(f, MatroidConstraint::Uniform(5, 2),
                                        McgConfig{}),
               PreconditionError);
}

TEST(McgPropertyTest, CoordinateCapAndFeasibility) {
  Rng rng(11);
  for (uint64_t seed = 0; seed < 15; ++seed) {
    const int n = 4 + seed % 5;
    const SetFunctionOracle f = RandomSubmodular(n, seed);
    const MatroidConstraint m = RandomPartition(n, rng);
    McgConfig cfg;
    cfg.T = 0.25 + 0.75 * Uniform01(rng);
    cfg.steps = 20 + seed;
    cfg.samples = 16;
    cfg.seed = seed;
    cfg.record_trace = true;
    const McgResult r = MeasuredContinuousGreedy(f, m, cfg);
    const double delta = cfg.T / cfg.steps;
    ASSERT_EQ(r.trace.size(), static_cast<size_t>(cfg.steps + 1));
    for (int i = 0; i <= cfg.steps; ++i) {
      EXPECT_LE(r.trace[i].max_norm, 1 - std::pow(1 - delta, i) + 1e-12);
      EXPECT_LE(r.trace[i].max_norm, 1 - std::exp(-i * delta) + delta);
    }
    for (const auto& b : m.blocks()) {
      double sum = 0.0;
      for (int u : b.elements) sum += r.y[u];
      EXPECT_LE(sum, b.capacity + 1e-9);
    }
    for (int u = 0; u < n; ++u) {
      if (m.block_of(u) < 0) EXPECT_EQ(r.y[u], 0.0);
    }
  }
}

TEST(McgPropertyTest, PolytopeAndMatroidStepsAgree) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 5 + seed % 3;
    const int k = 1 + seed % 3;
    const SetFunctionOracle f = RandomSubmodular(n, 100 + seed);
    McgConfig cfg;
    cfg.steps = 30;
    cfg.samples = 24;
    cfg.seed = seed;
    const McgResult a =
        MeasuredContinuousGreedy(f, MatroidConstraint::Uniform(n, k), cfg);
    const McgResult b = MeasuredContinuousGreedy(
        f, DownClosedPolytope::UniformMatroid(n, k), cfg);
    for (int u = 0; u < n; ++u) EXPECT_NEAR(a.y[u], b.y[u], 1e-9);
    EXPECT_TRUE(
        DownClosedPolytope::UniformMatroid(n, k).Contains(b.y.values()));
  }
}

TEST(McgTest, ThreadsMatchSerial) {
  const SetFunctionOracle f = RandomSubmodular(7, 9);
  McgConfig cfg;
  cfg.steps = 25;
  const McgResult serial =
      MeasuredContinuousGreedy(f, MatroidConstraint::Uniform(7, 3), cfg);
  cfg.jobs = 3;
  const McgResult threaded =
      MeasuredContinuousGreedy(f, MatroidConstraint::Uniform(7, 3), cfg);
  for (int u = 0; u < 7; ++u) EXPECT_EQ(serial.y[u], threaded.y[u]);
  EXPECT_EQ(serial.discretization_bound, threaded.discretization_bound);
}

TEST(McgTest, TraceCsv) {
  const std::string csv = McgTraceToCsv({{0.0, 0.0, 1.5, 0.25}});
  EXPECT_EQ(csv, "t,max_norm,estimate,stderr\n0,0,1.5,0.25\n");
}

TEST(SwapRoundingTest, IntegralPointIsDeterministic) {
  const MatroidConstraint m =
      MatroidConstraint::Partition(5, {{"a", {0, 1, 2}, 2}, {"b", {3, 4}, 1}});
  const FractionalPoint y({1, 0, 1, 0, 1});
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    EXPECT_EQ(SwapRounding(y, m, rng), Subset(5, {0, 2, 4}));
  }
}

TEST(SwapRoundingTest, UniformRankOneChiSquare) {
  const MatroidConstraint m = MatroidConstraint::Uniform(2, 1);
  const FractionalPoint y({0.3, 0.7});
  int zero = 0;
  int one = 0;
  const int trials = 10000;
  for (int seed = 0; seed < trials; ++seed) {
    Rng rng(seed);
    const Subset s = SwapRounding(y, m, rng);
    ASSERT_EQ(s.Count(), 1);
    (s.Contains(0) ? zero : one)++;
  }
  const double e0 = 0.3 * trials;
  const double e1 = 0.7 * trials;
  const double chi2 =
      (zero - e0) * (zero - e0) / e0 + (one - e1) * (one - e1) / e1;
  // 1 degree of freedom, p = 0.001.
  EXPECT_LT(chi2, 10.83);
}

TEST(SwapRoundingTest, PartitionExpectationDominatesMultilinear) {
  const MatroidConstraint m =
      MatroidConstraint::Partition(3, {{"a", {0, 1}, 1}, {"b", {2}, 1}});
  const FractionalPoint y({0.5, 0.5, 1.0});
  Rng rng(5);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const SetFunctionOracle f = RandomSubmodular(3, 300 + seed);
    ASSERT_TRUE(IsSubmodular(f));
    const int trials = 2000;
    double mean = 0.0;
    double m2 = 0.0;
    for (int t = 0; t < trials; ++t) {
      const double v = f(SwapRounding(y, m, rng));
      const double d = v - mean;
      mean += d / (t + 1);
      m2 += d * (v - mean);
    }
    const double sigma = std::sqrt(m2 / (trials - 1) / trials);
    EXPECT_GE(mean, MultilinearExact(f, y) - 3 * sigma - 1e-12) << seed;
  }
}

TEST(SwapRoundingPropertyTest, MarginalsAndIndependence) {
  Rng gen(21);
  for (int round = 0; round < 12; ++round) {
    const int n = 3 + round % 5;
    const MatroidConstraint m = RandomPartition(n, gen);
    std::vector<double> y(n, 0.0);
    for (const auto& b : m.blocks()) {
      double sum = 0.0;
      for (int u : b.elements) {
        y[u] = Uniform01(gen);
        sum += y[u];
      }
      const double cap = std::min<double>(b.capacity, b.elements.size());
      // Tight blocks half the time.
      const double target = round % 2 == 0 ? cap : cap * Uniform01(gen);
      for (int u : b.elements)
        y[u] = sum > 0 ? std::min(1.0, y[u] * target / sum) : 0.0;
    }
    const FractionalPoint point(y);
    std::vector<int> hits(n, 0);
    const int trials = 4000;
    Rng rng(round);
    for (int t = 0; t < trials; ++t) {
      const Subset s = SwapRounding(point, m, rng);
      ASSERT_TRUE(m.IsIndependent(s));
      s.ForEach([&](int u) { hits[u]++; });
    }
    for (int u = 0; u < n; ++u) {
      const double sd = std::sqrt(y[u] * (1 - y[u]) / trials);
      EXPECT_NEAR(hits[u] / static_cast<double>(trials), y[u], 5 * sd + 1e-9)
          << "round " << round << " u " << u;
    }
  }
}

TEST(SwapRoundingTest, Errors) {
  Rng rng(0);
  const MatroidConstraint m =
      MatroidConstraint::Partition(3, {{"a", {0, 1}, 1}});
  EXPECT_THROW(SwapRounding(FractionalPoint({0.6, 0.6, 0}), m, rng),
               PreconditionError);
  EXPECT_THROW(SwapRounding(FractionalPoint({0.5, 0.5, 0.2}), m, rng),
               PreconditionError);
  EXPECT_THROW(SwapRounding(FractionalPoint({0.5, 0.5}), m, rng),
               PreconditionError);
  EXPECT_THROW(
      SwapRounding(FractionalPoint({0.5, 0.5, 0}),
                   testing::GraphicMatroid(3, {{0, 1}, {1, 2}, {0, 2}}), rng),
      PreconditionError);
  // Within the 1e-9 slack.
  EXPECT_NO_THROW(SwapRounding(FractionalPoint({0.5, 0.5 + 5e-10, 0}), m, rng));
}

ContinuousObjective OneDimensional(double c) {
  return {[c](std::span<const double> x) {
            return -x[0] * x[0] / 2 + 0.6 * x[0] + c;
          },
          [](std::span<const double> x) {
            return std::vector<double>{-x[0] + 0.6};
          }};
}

TEST(FrankWolfeTest, OneDimensionalGuarantee) {
  for (double c : {0.0, 0.05, 0.3}) {
    const ContinuousObjective obj = OneDimensional(c);
    // F rises to 0.18 + c at 0.6 and falls to 0.1 + c at 1, so the worst
    // pair x <= y is (0.6, 1).
    const double m = (0.1 + c) / (0.18 + c);
    const std::vector<double> upper = {1.0};
    EXPECT_NEAR(GridMonotonicityRatio(obj.value, upper, 1001).ratio, m, 1e-9);
    FwConfig cfg;
    cfg.L = 1.0;
    cfg.D = 1.0;
    const FwResult r =
        FrankWolfeNonmonotone(obj, DownClosedPolytope::Box({1.0}), cfg);
    EXPECT_EQ(r.iterations, 100);
    EXPECT_NEAR(r.additive_slack, 0.01, 1e-15);
    const double target = m * kOneMinusInvE + (1 - m) / std::exp(1.0);
    EXPECT_GE(r.value, target * (0.18 + c) - r.additive_slack) << c;
    EXPECT_LE(r.y[0], 1.0);
  }
}

TEST(FrankWolfeTest, ZeroPolytopeStaysAtOrigin) {
  DownClosedPolytope p = DownClosedPolytope::Box({1.0, 1.0});
  p.rows = {{1.0, 2.0}};
  p.rhs = {0.0};
  const ContinuousObjective obj{
      [](std::span<const double> x) { return 1 + x[0] + x[1]; },
      [](std::span<const double>) { return std::vector<double>{1.0, 1.0}; }};
  const FwResult r = FrankWolfeNonmonotone(obj, p, FwConfig{});
  EXPECT_EQ(r.y, std::vector<double>({0.0, 0.0}));
  EXPECT_EQ(r.value, 1.0);
}

TEST(FrankWolfeTest, RejectsBadEps) {
  const ContinuousObjective obj = OneDimensional(0.0);
  FwConfig cfg;
  cfg.eps = 1.0;
  EXPECT_THROW(FrankWolfeNonmonotone(obj, DownClosedPolytope::Box({1.0}), cfg),
               PreconditionError);
  cfg.eps = 0.3;
  EXPECT_EQ(FrankWolfeNonmonotone(obj, DownClosedPolytope::Box({1.0}), cfg)
                .iterations,
            4);
}

TEST(FrankWolfePropertyTest, IteratesMonotoneFeasibleAndCapped) {
  Rng rng(8);
  for (int round = 0; round < 20; ++round) {
    const int n = 2 + round % 4;
    // Nonpositive Hessian entries make it DR-submodular.
    std::vector<std::vector<double>> h(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= i; ++j) h[i][j] = h[j][i] = -Uniform01(rng);
    }
    std::vector<double> lin(n);
    for (double& v : lin) v = 2 * Uniform01(rng) - 0.5;
    const ContinuousObjective obj{[=](std::span<const double> x) {
                                    double v = 5.0;
                                    for (int i = 0; i < n; ++i) {
                                      v += lin[i] * x[i];
                                      for (int j = 0; j < n; ++j)
                                        v += 0.5 * h[i][j] * x[i] * x[j];
                                    }
                                    return v;
                                  },
                                  [=](std::span<const double> x) {
                                    std::vector<double> g(lin);
                                    for (int i = 0; i < n; ++i) {
                                      for (int j = 0; j < n; ++j)
                                        g[i] += h[i][j] * x[j];
                                    }
                                    return g;
                                  }};
    std::vector<double> upper(n);
    for (double& u : upper) u = 0.2 + Uniform01(rng);
    DownClosedPolytope p = DownClosedPolytope::Box(upper);
    p.rows = {std::vector<double>(n, 1.0)};
    p.rhs = {0.4 * n};
    FwConfig cfg;
    cfg.eps = 0.05;
    cfg.record_trace = true;
    const FwResult r = FrankWolfeNonmonotone(obj, p, cfg);
    ASSERT_EQ(r.trace.size(), 20u);
    std::vector<double> prev(n, 0.0);
    for (size_t i = 0; i < r.trace.size(); ++i) {
      const auto& y = r.trace[i];
      EXPECT_TRUE(p.Contains(y));
      for (int j = 0; j < n; ++j) {
        EXPECT_GE(y[j], prev[j]);
        EXPECT_GE(y[j], 0.0);
        EXPECT_LE(y[j] / upper[j], 1 - std::pow(1 - cfg.eps, i + 1) + 1e-12);
      }
      prev = y;
    }
    EXPECT_EQ(r.y, r.trace.back());
  }
}

}  // namespace
}  // namespace monoratio
