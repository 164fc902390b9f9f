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

#include "monoratio/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "monoratio/csv.h"

namespace monoratio {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> Rows(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) rows.push_back(SplitCsvLine(line));
  return rows;
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(CliRatioTest, MovieBelowHalfIsMonotone) {
  const Outcome o = Invoke({"ratio", "--objective", "movie", "--n", "8",
                            "--lambda", "0.3", "--seed", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto rows = Rows(o.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][0], "ratio");
  EXPECT_EQ(rows[1][0], "1");
}

TEST(CliRatioTest, CutOnTwoElementsIsZero) {
  const Outcome o =
      Invoke({"ratio", "--objective", "synthetic-cut", "--n", "2"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(Rows(o.out)[1][0], "0");
}

TEST(CliRatioTest, WeakRatio) {
  const Outcome o = Invoke({"ratio", "--objective", "image", "--n", "9",
                            "--clusters", "3", "--weak", "--k", "2"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_GE(std::stod(Rows(o.out)[1][0]), 1 - 4.0 / 9);
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(Invoke({"ratio", "--bogus"}).code, 2);
  EXPECT_EQ(Invoke({}).code, 2);
  EXPECT_EQ(Invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(Invoke({"ratio", "--objective", "nope"}).code, 2);
  EXPECT_EQ(Invoke({"ratio", "--n", "abc"}).code, 2);
  const Outcome help = Invoke({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("experiment"), std::string::npos);
}

TEST(CliTest, RuntimeErrorsExitOne) {
  // Above the exact-ratio size limit.
  const Outcome o =
      Invoke({"ratio", "--objective", "synthetic-coverage", "--n", "30"});
  EXPECT_EQ(o.code, 1);
  EXPECT_FALSE(o.err.empty());
}

TEST(CliBoundsTest, Endpoints) {
  const Outcome hard = Invoke({"bounds", "--expr", "unconstrained_hard"});
  ASSERT_EQ(hard.code, 0);
  const auto rows = Rows(hard.out);
  ASSERT_EQ(rows.size(), 102u);
  EXPECT_EQ(rows[1],
            std::vector<std::string>({"0", "0.5", "unconstrained_hard", "0"}));
  EXPECT_EQ(rows[101],
            std::vector<std::string>({"1", "1", "unconstrained_hard", "0"}));

  const Outcome card =
      Invoke({"bounds", "--expr", "cardinality_hardness", "--points", "2"});
  ASSERT_EQ(card.code, 0);
  const double at0 = std::stod(Rows(card.out)[1][1]);
  EXPECT_GE(at0, 0.486);
  EXPECT_LE(at0, 0.496);

  const Outcome rgm = Invoke({"bounds", "--expr", "rgm"});
  EXPECT_EQ(Rows(rgm.out).back()[1], "0.5");

  EXPECT_EQ(Invoke({"bounds", "--expr", "bogus"}).code, 2);
}

TEST(CliBoundsTest, RepeatableExprAndSvg) {
  const std::string svg = TempPath("monoratio_bounds.svg");
  const Outcome o = Invoke({"bounds", "--expr", "greedy_card", "--expr", "rgm",
                            "--points", "11", "--svg", svg});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(Rows(o.out).size(), 23u);
  const std::string text = Slurp(svg);
  EXPECT_NE(text.find("<svg"), std::string::npos);
  EXPECT_NE(text.find("greedy_card"), std::string::npos);
  std::filesystem::remove(svg);
}

TEST(CliRunTest, GreedyOnModularIsGolden) {
  const Outcome o = Invoke({"run", "--alg", "greedy", "--objective", "modular",
                            "--weights", "3,1,2", "--k", "2"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out,
            "alg,objective,n,k,seed,value,oracle_calls,solution\n"
            "greedy,modular,3,2,0,5,7,\"{0,2}\"\n");
}

TEST(CliRunTest, TrialsGiveMeanAndStderr) {
  const Outcome o = Invoke({"run", "--alg", "random-greedy", "--trials", "100",
                            "--n", "8", "--k", "3"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto rows = Rows(o.out);
  EXPECT_EQ(rows[0],
            std::vector<std::string>({"alg", "objective", "n", "k", "trials",
                                      "seed", "mean", "stderr", "min", "max"}));
  EXPECT_EQ(rows[1][4], "100");
  EXPECT_GT(std::stod(rows[1][7]), 0.0);
  EXPECT_EQ(Invoke({"run", "--alg", "random-greedy", "--trials", "100", "--n",
                    "8", "--k", "3"})
                .out,
            o.out);
}

TEST(CliRunTest, Errors) {
  EXPECT_EQ(Invoke({"run", "--alg", "greedy", "--n", "4", "--k", "5"}).code, 2);
  EXPECT_EQ(Invoke({"run", "--alg", "nope"}).code, 2);
  EXPECT_EQ(Invoke({"run", "--k", "2"}).code, 2);
  EXPECT_EQ(Invoke({"run", "--alg", "frank-wolfe"}).code, 2);
}

TEST(CliRunTest, MatroidFileAndTrace) {
  const std::string spec = TempPath("monoratio_blocks.txt");
  const std::string trace = TempPath("monoratio_trace.csv");
  {
    std::ofstream out(spec);
    out << "# two blocks\nleft: 0,1,2 capacity=1\nright: 3,4,5 capacity=2\n";
  }
  const Outcome o = Invoke({"run", "--alg", "random-greedy-matroid", "--n", "6",
                            "--matroid", spec, "--trace", trace});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(Slurp(trace).rfind("iteration,element,marginal,accepted\n", 0), 0u);
  const Outcome mcg =
      Invoke({"run", "--alg", "mcg", "--n", "6", "--k", "1", "--blocks", "2",
              "--steps", "20", "--samples", "8"});
  ASSERT_EQ(mcg.code, 0) << mcg.err;
  EXPECT_EQ(Invoke({"run", "--alg", "greedy-matroid", "--n", "6", "--matroid",
                    TempPath("monoratio_missing.txt")})
                .code,
            2);
  std::filesystem::remove(spec);
  std::filesystem::remove(trace);
}

TEST(CliRunTest, FrankWolfeOnQuadratic) {
  const Outcome o =
      Invoke({"run", "--alg", "frank-wolfe", "--objective", "quadratic", "--n",
              "4", "--eps", "0.05", "--seed", "3"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto rows = Rows(o.out);
  EXPECT_EQ(rows[0][4], "value");
  EXPECT_GE(std::stod(rows[1][4]), 0.0);
}

TEST(CliExperimentTest, FlagsAndSpecFileAgree) {
  const std::vector<std::string> flags = {"experiment",
                                          "--objective",
                                          "movie",
                                          "--alg",
                                          "greedy",
                                          "--alg",
                                          "random-greedy",
                                          "--sweep",
                                          "lambda",
                                          "--values",
                                          "0.55,0.75,0.95",
                                          "--n",
                                          "50",
                                          "--k",
                                          "10",
                                          "--trials",
                                          "4"};
  const Outcome a = Invoke(flags);
  ASSERT_EQ(a.code, 0) << a.err;
  const auto rows = Rows(a.out);
  ASSERT_EQ(rows.size(), 4u);
  int prev = -1;
  int next = -1;
  for (size_t i = 0; i < rows[0].size(); ++i) {
    if (rows[0][i] == "ub_prev") prev = static_cast<int>(i);
    if (rows[0][i] == "ub_new") next = static_cast<int>(i);
  }
  ASSERT_GE(prev, 0);
  ASSERT_GE(next, 0);
  for (size_t r = 1; r < rows.size(); ++r) {
    EXPECT_LE(std::stod(rows[r][next]), std::stod(rows[r][prev]));
  }
  const std::string spec = TempPath("monoratio_spec.json");
  {
    std::ofstream out(spec);
    out << R"({"objective": "movie", "algorithms": ["greedy", "random-greedy"],
               "sweep": "lambda", "values": [0.55, 0.75, 0.95], "n": 50,
               "k": 10, "trials": 4})";
  }
  const Outcome b = Invoke({"experiment", "--spec", spec, "--jobs", "2"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(b.out, a.out);
  std::filesystem::remove(spec);
}

TEST(CliExperimentTest, OutputFilesAndErrors) {
  const std::string csv = TempPath("monoratio_exp.csv");
  const std::string svg = TempPath("monoratio_exp.svg");
  const Outcome o =
      Invoke({"experiment", "--objective", "quadratic", "--alg", "frank-wolfe",
              "--sweep", "beta", "--values", "0.1,0.3", "--n", "3", "--trials",
              "2", "--out", csv, "--svg", svg});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(o.out.empty());
  EXPECT_EQ(Rows(Slurp(csv)).size(), 3u);
  EXPECT_NE(Slurp(svg).find("<polygon"), std::string::npos);
  std::filesystem::remove(csv);
  std::filesystem::remove(svg);

  const Outcome bad = Invoke({"experiment", "--objective", "image", "--alg",
                              "greedy", "--sweep", "lambda", "--trials", "0"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("matroid algorithm"), std::string::npos);
  EXPECT_NE(bad.err.find("trials"), std::string::npos);
  EXPECT_NE(bad.err.find("sweep"), std::string::npos);
  EXPECT_EQ(
      Invoke({"experiment", "--spec", TempPath("monoratio_none.json")}).code,
      2);
}

}  // namespace
}  // namespace monoratio
