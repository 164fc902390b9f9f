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

#include "monoratio/experiment.h"

#include <cmath>

#include "gtest/gtest.h"
#include "monoratio/bounds.h"
#include "monoratio/errors.h"
#include "monoratio/ratio.h"

namespace monoratio {
namespace {

int Column(const ExperimentTable& t, const std::string& name) {
  for (size_t i = 0; i < t.columns.size(); ++i) {
    if (t.columns[i] == name) return static_cast<int>(i);
  }
  ADD_FAILURE() << "missing column " << name;
  return 0;
}

ExperimentSpec MovieSweep() {
  ExperimentSpec spec;
  spec.objective = "movie";
  spec.algorithms = {"greedy", "random-greedy"};
  spec.sweep = "lambda";
  spec.values = {0.55, 0.65, 0.75, 0.85, 0.95};
  spec.n = 50;
  spec.k = 10;
  return spec;
}

TEST(SyntheticPairsTest, RatioIsExactlyM) {
  for (double m : {0.0, 0.25, 0.5, 1.0}) {
    for (int n : {2, 5, 8}) {
      const SetFunctionOracle f = SyntheticPairsObjective(n, m, n);
      EXPECT_NEAR(ExactMonotonicityRatio(f).ratio, m, 1e-12) << n << " " << m;
      EXPECT_TRUE(IsSubmodular(f));
    }
  }
  EXPECT_THROW(SyntheticPairsObjective(4, 1.5, 0), ValidationError);
}

TEST(ObjectiveTest, BuildsEveryKind) {
  for (const auto& kind : ObjectiveKinds()) {
    ObjectiveOptions o;
    o.kind = kind;
    o.n = 6;
    o.weights = {1, 2, 3};
    const SetFunctionOracle f = BuildObjective(o);
    EXPECT_EQ(f(Subset(f.n())), 0.0) << kind;
    EXPECT_TRUE(IsSubmodular(f)) << kind;
  }
  ObjectiveOptions cut;
  cut.kind = "synthetic-cut";
  cut.n = 5;
  EXPECT_EQ(ExactMonotonicityRatio(BuildObjective(cut)).ratio, 0.0);
  ObjectiveOptions bad;
  bad.kind = "nope";
  EXPECT_THROW(BuildObjective(bad), ValidationError);
  ObjectiveOptions image;
  image.kind = "image";
  image.n = 7;
  EXPECT_THROW(BuildObjective(image), ValidationError);
}

TEST(ContiguousPartitionTest, Blocks) {
  const MatroidConstraint m = ContiguousPartition(7, 3, 2);
  ASSERT_EQ(m.blocks().size(), 3u);
  EXPECT_EQ(m.blocks()[0].elements, std::vector<int>({0, 1}));
  EXPECT_EQ(m.blocks()[2].elements, std::vector<int>({4, 5, 6}));
  EXPECT_EQ(m.rank(), 6);
  EXPECT_THROW(ContiguousPartition(2, 3, 1), ValidationError);
}

TEST(SummarizeTest, Stats) {
  const TrialStats s = Summarize({1, 2, 3, 4});
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_DOUBLE_EQ(s.stderr_mean, std::sqrt(5.0 / 3 / 4));
  EXPECT_EQ(s.min, 1);
  EXPECT_EQ(s.max, 4);
  EXPECT_EQ(Summarize({7}).stderr_mean, 0.0);
}

TEST(RunAlgorithmTest, EveryAlgorithmFeasible) {
  ObjectiveOptions o;
  o.n = 9;
  const SetFunctionOracle f = BuildObjective(o);
  const MatroidConstraint m = ContiguousPartition(9, 3, 1);
  AlgorithmParams p;
  p.k = 3;
  p.steps = 20;
  p.samples = 8;
  for (const auto& id : AlgorithmIds()) {
    Rng rng(1);
    const RunResult r = RunAlgorithm(id, f, &m, p, rng);
    EXPECT_DOUBLE_EQ(r.value, f(r.solution)) << id;
    if (IsMatroidAlgorithm(id)) {
      EXPECT_TRUE(m.IsIndependent(r.solution)) << id;
    } else if (id != "double-greedy") {
      EXPECT_LE(r.solution.Count(), 3) << id;
    }
  }
  Rng rng(0);
  EXPECT_THROW(RunAlgorithm("nope", f, &m, p, rng), ValidationError);
  EXPECT_THROW(RunAlgorithm("mcg", f, nullptr, p, rng), ValidationError);
  p.k = 10;
  EXPECT_THROW(RunAlgorithm("greedy", f, &m, p, rng), ValidationError);
}

TEST(ExperimentTest, MovieSweepShrinksBand) {
  const ExperimentSpec spec = MovieSweep();
  const ExperimentTable t = RunExperiment(spec);
  EXPECT_EQ(t.reference, "random-greedy");
  EXPECT_EQ(t.guarantee_id, "random_greedy_card");
  ASSERT_EQ(t.rows.size(), 5u);
  const GuaranteeKind kind = GuaranteeKind::kRandomGreedyCard;
  for (const auto& r : t.rows) {
    const double lambda = r[0];
    const double prev = r[Column(t, "ub_prev")];
    const double next = r[Column(t, "ub_new")];
    EXPECT_LE(next, prev);
    EXPECT_LE(next / prev,
              Guarantee(kind, 0.0) / Guarantee(kind, 2 * (1 - lambda)) + 1e-9);
    EXPECT_NEAR(r[Column(t, "m_bound")], 2 * (1 - lambda), 1e-12);
    EXPECT_EQ(r[Column(t, "band_lo")], next);
    EXPECT_EQ(r[Column(t, "band_hi")], prev);
    EXPECT_EQ(r[Column(t, "greedy_stderr")], 0.0);
  }
  // Rerunning, and running threaded, is byte-identical.
  const std::string csv = ExperimentToCsv(t);
  EXPECT_EQ(ExperimentToCsv(RunExperiment(spec)), csv);
  EXPECT_EQ(ExperimentToCsv(RunExperiment(spec, 3)), csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "sweep_value,greedy_mean,greedy_stderr,random_greedy_mean,"
            "random_greedy_stderr,m_bound,reference_value,slack,ub_prev,ub_new,"
            "band_lo,band_hi");
}

TEST(ExperimentTest, ImageMatroidSweepHasBothColumns) {
  ExperimentSpec spec;
  spec.objective = "image";
  spec.algorithms = {"random-greedy-matroid", "mcg"};
  spec.sweep = "k";
  spec.values = {1, 2, 3, 4};
  spec.n = 60;
  spec.trials = 2;
  spec.steps = 20;
  spec.samples = 8;
  const ExperimentTable t = RunExperiment(spec);
  ASSERT_EQ(t.rows.size(), 4u);
  for (const auto& r : t.rows) {
    EXPECT_GT(r[Column(t, "random_greedy_matroid_mean")], 0.0);
    EXPECT_GT(r[Column(t, "mcg_mean")], 0.0);
    // Rank 3k over n = 60 items.
    EXPECT_NEAR(r[Column(t, "m_bound")], 1 - 6 * r[0] / 60, 1e-12);
    EXPECT_LE(r[Column(t, "ub_new")], r[Column(t, "ub_prev")]);
  }
}

TEST(ExperimentTest, QuadraticSweepReportsSlack) {
  ExperimentSpec spec;
  spec.objective = "quadratic";
  spec.algorithms = {"frank-wolfe"};
  spec.sweep = "beta";
  spec.values = {0.1, 0.25, 0.4};
  spec.n = 4;
  spec.eps = 0.01;
  spec.trials = 3;
  const ExperimentTable t = RunExperiment(spec);
  for (const auto& r : t.rows) {
    EXPECT_NEAR(r[Column(t, "m_bound")],
                QuadraticRatioBound(spec.alpha, r[0], false), 1e-12);
    EXPECT_GT(r[Column(t, "slack")], 0.0);
    EXPECT_GE(r[Column(t, "frank_wolfe_mean")], 0.0);
    EXPECT_LE(r[Column(t, "ub_new")], r[Column(t, "ub_prev")]);
  }
}

TEST(ExperimentTest, ValidationListsEveryProblem) {
  ExperimentSpec spec;
  spec.objective = "quadratic";
  spec.algorithms = {"greedy", "bogus"};
  spec.sweep = "lambda";
  spec.trials = 0;
  const std::vector<std::string> errors = ValidateExperimentSpec(spec);
  EXPECT_GE(errors.size(), 5u);
  try {
    RunExperiment(spec);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("bogus"), std::string::npos);
    EXPECT_NE(what.find("trials"), std::string::npos);
    EXPECT_NE(what.find("nonempty"), std::string::npos);
  }
  ExperimentSpec movie = MovieSweep();
  movie.values = {0.5, 1.5};
  movie.sweep = "lambda";
  const auto point_errors = ValidateExperimentSpec(movie);
  ASSERT_EQ(point_errors.size(), 1u);
  EXPECT_NE(point_errors[0].find("lambda=1.5"), std::string::npos);
  movie.sweep = "k";
  movie.values = {2.5, 60};
  EXPECT_EQ(ValidateExperimentSpec(movie).size(), 2u);
}

TEST(ExperimentTest, JsonSpec) {
  const ExperimentSpec spec = ParseExperimentSpecJson(R"({
    "objective": "synthetic", "algorithms": ["random-greedy", "double-greedy"],
    "sweep": "m", "values": [0, 0.5, 1], "n": 8, "k": 3, "trials": 4,
    "seed": 9, "csv": "out.csv"
  })");
  EXPECT_EQ(spec.objective, "synthetic");
  EXPECT_EQ(spec.values, std::vector<double>({0, 0.5, 1}));
  EXPECT_EQ(spec.seed, 9u);
  EXPECT_EQ(spec.csv_path, "out.csv");
  const ExperimentTable t = RunExperiment(spec);
  for (const auto& r : t.rows) EXPECT_EQ(r[Column(t, "m_bound")], r[0]);
  try {
    ParseExperimentSpecJson(R"({"objective": 3, "colour": 1, "trials": 0,
                                "algorithms": ["greedy"], "sweep": "m",
                                "values": [0.5]})");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("'objective' has the wrong type"), std::string::npos);
    EXPECT_NE(what.find("unknown field 'colour'"), std::string::npos);
    EXPECT_NE(what.find("trials must be >= 1"), std::string::npos);
  }
  EXPECT_THROW(ParseExperimentSpecJson("{"), ValidationError);
  EXPECT_THROW(ParseExperimentSpecJson("[]"), ValidationError);
}

TEST(SvgTest, EmitsPolylinesAndBand) {
  const std::string svg =
      LinePlotSvg("a <b>", "x",
                  {{"one", {{0, 1}, {1, 2}}}, {"two", {{0, 0}, {1, INFINITY}}}},
                  SvgBand{{0, 1}, {0, 1}, {1, 2}});
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("a &lt;b&gt;"), std::string::npos);
  EXPECT_NE(svg.find("<polygon"), std::string::npos);
  size_t count = 0;
  for (size_t pos = 0; (pos = svg.find("<polyline", pos)) != std::string::npos;
       ++pos) {
    ++count;
  }
  EXPECT_EQ(count, 2u);
  EXPECT_EQ(svg.find("inf"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

}  // namespace
}  // namespace monoratio
