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

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "monoratio/apps.h"
#include "monoratio/bounds.h"
#include "monoratio/csv.h"
#include "monoratio/errors.h"
#include "monoratio/experiment.h"
#include "monoratio/ratio.h"

namespace monoratio {
namespace {

int DefaultJobs() {
  const char* env = std::getenv("MONORATIO_JOBS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  return end != env && *end == '\0' && v >= 1 ? static_cast<int>(v) : 1;
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << content;
  if (!f) throw Error("failed writing '" + path + "'");
}

std::string ReadFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

// Options shared by commands that build a set-function objective.
void AddObjectiveOptions(CLI::App* cmd, ObjectiveOptions& o) {
  cmd->add_option("--objective", o.kind,
                  "movie, image, synthetic, synthetic-cut, synthetic-coverage, "
                  "synthetic-mixture or modular")
      ->capture_default_str();
  cmd->add_option("--n", o.n, "Ground set size")->capture_default_str();
  cmd->add_option("--lambda", o.lambda, "Movie diversity weight")
      ->capture_default_str();
  cmd->add_option("--m", o.m, "Ratio of the synthetic objective")
      ->capture_default_str();
  cmd->add_option("--dim", o.dim, "Synthetic feature dimension")
      ->capture_default_str();
  cmd->add_option("--clusters", o.clusters, "Image clusters")
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "Instance seed")->capture_default_str();
  cmd->add_option("--features", o.features_path,
                  "Feature CSV (label,f1..fd) for movie / image");
  cmd->add_flag("--clip", o.clip, "Clip negative inner products to 0");
  cmd->add_option("--weights", o.weights, "Modular weights")->delimiter(',');
}

struct RatioArgs {
  ObjectiveOptions objective;
  bool weak = false;
  int k = 1;
};

int CmdRatio(const RatioArgs& a, std::ostream& out) {
  const SetFunctionOracle f = BuildObjective(a.objective);
  RatioReport r;
  if (a.weak) {
    if (a.k < 0 || a.k > f.n()) throw ValidationError("k must lie in [0, n]");
    const int k = a.k;
    r = ExactWeakMonotonicityRatio(
        f, [k](const Subset& t) { return t.Count() <= k; });
  } else {
    r = ExactMonotonicityRatio(f);
  }
  out << RatioReportCsvHeader() << '\n' << RatioReportCsvRow(r) << '\n';
  return kExitOk;
}

struct BoundsArgs {
  std::vector<std::string> exprs;
  int points = 101;
  HardnessOptions hardness;
  double T = 1.0;
  std::string svg;
  std::string out;
};

int CmdBounds(const BoundsArgs& a, std::ostream& out) {
  std::vector<std::string> exprs = a.exprs;
  if (exprs.empty()) exprs = CurveExpressionIds();
  const std::vector<std::string> known = CurveExpressionIds();
  for (const auto& e : exprs) {
    if (std::find(known.begin(), known.end(), e) == known.end()) {
      std::string list;
      for (const auto& k : known) list += (list.empty() ? "" : ", ") + k;
      throw ValidationError("unknown expression '" + e + "' (expected one of " +
                            list + ")");
    }
  }
  if (a.hardness.grid < 3 || a.hardness.refinement_rounds < 0) {
    throw ValidationError("--grid must be >= 3 and --rounds >= 0");
  }
  std::vector<GuaranteeCurve> curves;
  for (const auto& e : exprs) {
    curves.push_back(EvaluateCurve(e, a.points, a.hardness, a.T));
  }
  const std::string csv = CurvesToCsv(curves);
  if (a.out.empty()) {
    out << csv;
  } else {
    WriteFile(a.out, csv);
  }
  if (!a.svg.empty()) {
    std::vector<SvgSeries> series;
    for (const auto& c : curves) series.push_back({c.expression_id, c.points});
    WriteFile(a.svg, LinePlotSvg("guarantees and hardness", "m", series));
  }
  return kExitOk;
}

struct RunArgs {
  ObjectiveOptions objective;
  std::string alg;
  AlgorithmParams params;
  std::string matroid_path;
  int blocks = 0;
  int trials = 1;
  double alpha = 0.5;
  double beta = 0.2;
  std::string trace;
};

std::string FormatVector(const std::vector<double>& y) {
  std::string s = "[";
  for (size_t i = 0; i < y.size(); ++i) {
    if (i) s += ",";
    s += FormatDouble(y[i]);
  }
  return s + "]";
}

int CmdRun(const RunArgs& a, std::ostream& out) {
  if (a.trials < 1) throw ValidationError("--trials must be >= 1");
  const uint64_t seed = a.objective.seed;
  if (a.alg == "frank-wolfe" || a.objective.kind == "quadratic") {
    if (a.alg != "frank-wolfe" || a.objective.kind != "quadratic") {
      throw ValidationError("frank-wolfe runs on --objective quadratic only");
    }
    if (!(a.params.eps > 0.0 && a.params.eps < 1.0)) {
      throw ValidationError("--eps must lie in (0, 1)");
    }
    if (a.objective.n < 1 || a.objective.n > 16) {
      throw ValidationError("quadratic --n must lie in [1, 16]");
    }
    if (!(a.beta > 0.0 && a.beta < 0.5) || !(a.alpha > 0.0)) {
      throw ValidationError("need --beta in (0, 0.5) and --alpha > 0");
    }
    std::vector<double> vals;
    std::vector<double> last;
    double slack = 0.0;
    for (int t = 0; t < a.trials; ++t) {
      const QuadraticInstance q = GenerateQuadraticInstance(
          a.objective.n, 0.01, a.beta, a.alpha, seed + t);
      FwConfig cfg;
      cfg.eps = a.params.eps;
      cfg.L = q.L;
      cfg.D = q.D;
      const FwResult r =
          FrankWolfeNonmonotone(q.Objective(), q.Polytope(), cfg);
      vals.push_back(r.value);
      last = r.y;
      slack = r.additive_slack;
    }
    if (a.trials == 1) {
      out << "alg,objective,n,seed,value,slack,solution\n";
      out << CsvRow()
                 .Add(a.alg)
                 .Add(a.objective.kind)
                 .Add(a.objective.n)
                 .Add(seed)
                 .Add(vals[0])
                 .Add(slack)
                 .Add(FormatVector(last));
      return kExitOk;
    }
    const TrialStats s = Summarize(vals);
    out << "alg,objective,n,trials,seed,mean,stderr,min,max\n";
    out << CsvRow()
               .Add(a.alg)
               .Add(a.objective.kind)
               .Add(a.objective.n)
               .Add(a.trials)
               .Add(seed)
               .Add(s.mean)
               .Add(s.stderr_mean)
               .Add(s.min)
               .Add(s.max);
    return kExitOk;
  }
  if (!IsKnownAlgorithm(a.alg)) {
    std::string list;
    for (const auto& id : AlgorithmIds())
      list += (list.empty() ? "" : ", ") + id;
    throw ValidationError("unknown algorithm '" + a.alg +
                          "' (expected one of " + list + ", frank-wolfe)");
  }
  const SetFunctionOracle f = BuildObjective(a.objective);
  const int n = f.n();
  const int k = a.params.k;
  if (k < 0 || k > n) {
    throw ValidationError("k = " + std::to_string(k) +
                          " must lie in [0, n = " + std::to_string(n) + "]");
  }
  std::optional<MatroidConstraint> matroid;
  if (!a.matroid_path.empty()) {
    try {
      matroid = LoadPartitionSpec(a.matroid_path, n);
    } catch (const PreconditionError& e) {
      throw ValidationError(e.what());
    }
  } else if (a.blocks > 0) {
    matroid = ContiguousPartition(n, a.blocks, k);
  } else {
    matroid = MatroidConstraint::Uniform(n, k);
  }
  std::vector<double> vals;
  RunResult first;
  for (int t = 0; t < a.trials; ++t) {
    Rng rng(seed + t);
    RunResult r = RunAlgorithm(a.alg, f, &*matroid, a.params, rng);
    vals.push_back(r.value);
    if (t == 0) first = std::move(r);
  }
  if (!a.trace.empty()) WriteFile(a.trace, TraceToCsv(first.trace));
  if (a.trials == 1) {
    out << "alg,objective,n,k,seed,value,oracle_calls,solution\n";
    out << CsvRow()
               .Add(a.alg)
               .Add(a.objective.kind)
               .Add(n)
               .Add(k)
               .Add(seed)
               .Add(first.value)
               .Add(first.oracle_calls)
               .Add(first.solution.ToString());
    return kExitOk;
  }
  const TrialStats s = Summarize(vals);
  out << "alg,objective,n,k,trials,seed,mean,stderr,min,max\n";
  out << CsvRow()
             .Add(a.alg)
             .Add(a.objective.kind)
             .Add(n)
             .Add(k)
             .Add(a.trials)
             .Add(seed)
             .Add(s.mean)
             .Add(s.stderr_mean)
             .Add(s.min)
             .Add(s.max);
  return kExitOk;
}

struct ExperimentArgs {
  std::string spec_path;
  ExperimentSpec spec;
  int jobs = 1;
};

int CmdExperiment(const ExperimentArgs& a, std::ostream& out) {
  ExperimentSpec spec = a.spec;
  if (!a.spec_path.empty()) {
    spec = ParseExperimentSpecJson(ReadFile(a.spec_path));
    // Explicit output flags still win over the file.
    if (!a.spec.csv_path.empty()) spec.csv_path = a.spec.csv_path;
    if (!a.spec.svg_path.empty()) spec.svg_path = a.spec.svg_path;
  }
  if (a.jobs < 1) throw ValidationError("--jobs must be >= 1");
  const ExperimentTable table = RunExperiment(spec, a.jobs);
  const std::string csv = ExperimentToCsv(table);
  if (spec.csv_path.empty()) {
    out << csv;
  } else {
    WriteFile(spec.csv_path, csv);
  }
  if (!spec.svg_path.empty()) {
    WriteFile(
        spec.svg_path,
        ExperimentToSvg(table, spec.objective + " sweep over " + spec.sweep));
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Monotonicity-ratio toolkit for submodular maximization",
               "monoratio"};
  app.require_subcommand(1);

  RatioArgs ratio;
  CLI::App* ratio_cmd = app.add_subcommand(
      "ratio", "Exact (weak) monotonicity ratio of an objective");
  AddObjectiveOptions(ratio_cmd, ratio.objective);
  ratio_cmd->add_flag("--weak", ratio.weak, "Restrict T to sets of size <= k");
  ratio_cmd->add_option("--k", ratio.k, "Size cap for --weak")
      ->capture_default_str();

  BoundsArgs bounds;
  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "Guarantee and hardness curves over m");
  bounds_cmd->add_option("--expr", bounds.exprs,
                         "Expression id (repeatable; default all)");
  bounds_cmd->add_option("--points", bounds.points, "Evenly spaced m values")
      ->capture_default_str();
  bounds_cmd->add_option("--grid", bounds.hardness.grid, "Hardness grid size")
      ->capture_default_str();
  bounds_cmd
      ->add_option("--rounds", bounds.hardness.refinement_rounds,
                   "Hardness refinement rounds")
      ->capture_default_str();
  bounds_cmd->add_option("--T", bounds.T, "Stopping time for mcg")
      ->capture_default_str();
  bounds_cmd->add_option("--svg", bounds.svg, "Also write an SVG plot");
  bounds_cmd->add_option("--out", bounds.out, "CSV path instead of stdout");

  RunArgs run;
  CLI::App* run_cmd =
      app.add_subcommand("run", "One algorithm on one instance");
  AddObjectiveOptions(run_cmd, run.objective);
  run_cmd->add_option("--alg", run.alg, "Algorithm id")->required();
  run_cmd->add_option("--k", run.params.k, "Cardinality / block capacity")
      ->capture_default_str();
  run_cmd->add_option("--eps", run.params.eps, "Accuracy parameter")
      ->capture_default_str();
  run_cmd->add_option("--T", run.params.T, "mcg stopping time")
      ->capture_default_str();
  run_cmd->add_option("--steps", run.params.steps, "mcg steps")
      ->capture_default_str();
  run_cmd->add_option("--samples", run.params.samples, "mcg samples per step")
      ->capture_default_str();
  run_cmd->add_option("--matroid", run.matroid_path,
                      "Partition matroid spec file");
  run_cmd->add_option("--blocks", run.blocks,
                      "Contiguous partition blocks with capacity k");
  run_cmd->add_option("--trials", run.trials, "Trials; trial t uses seed + t")
      ->capture_default_str();
  run_cmd->add_option("--alpha", run.alpha, "Quadratic alpha")
      ->capture_default_str();
  run_cmd->add_option("--beta", run.beta, "Quadratic beta")
      ->capture_default_str();
  run_cmd->add_option("--trace", run.trace,
                      "Write the first trial's trace CSV");

  ExperimentArgs exp;
  exp.jobs = DefaultJobs();
  CLI::App* exp_cmd =
      app.add_subcommand("experiment", "Parameter sweep with OPT bounds");
  ExperimentSpec& s = exp.spec;
  exp_cmd->add_option("--spec", exp.spec_path, "JSON experiment spec");
  exp_cmd
      ->add_option("--objective", s.objective,
                   "movie, image, quadratic or synthetic")
      ->capture_default_str();
  exp_cmd->add_option("--alg", s.algorithms, "Algorithm id (repeatable)");
  exp_cmd->add_option("--sweep", s.sweep, "lambda, k, m, alpha, beta or n");
  exp_cmd->add_option("--values", s.values, "Sweep grid, comma separated")
      ->delimiter(',');
  exp_cmd->add_option("--n", s.n)->capture_default_str();
  exp_cmd->add_option("--k", s.k)->capture_default_str();
  exp_cmd->add_option("--lambda", s.lambda)->capture_default_str();
  exp_cmd->add_option("--m", s.m)->capture_default_str();
  exp_cmd->add_option("--alpha", s.alpha)->capture_default_str();
  exp_cmd->add_option("--beta", s.beta)->capture_default_str();
  exp_cmd->add_option("--blocks", s.blocks, "Image clusters / partition blocks")
      ->capture_default_str();
  exp_cmd->add_option("--dim", s.dim)->capture_default_str();
  exp_cmd->add_option("--trials", s.trials)->capture_default_str();
  exp_cmd->add_option("--seed", s.seed)->capture_default_str();
  exp_cmd->add_option("--eps", s.eps)->capture_default_str();
  exp_cmd->add_option("--T", s.T)->capture_default_str();
  exp_cmd->add_option("--steps", s.steps)->capture_default_str();
  exp_cmd->add_option("--samples", s.samples)->capture_default_str();
  exp_cmd->add_option("--reference", s.reference,
                      "Algorithm whose guarantee yields the bounds");
  exp_cmd->add_option("--out", s.csv_path, "CSV path instead of stdout");
  exp_cmd->add_option("--svg", s.svg_path, "Also write an SVG plot");
  exp_cmd
      ->add_option("--jobs", exp.jobs,
                   "Worker threads (default MONORATIO_JOBS)")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "monoratio: " << e.what() << "\n"
        << "run 'monoratio --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (ratio_cmd->parsed()) return CmdRatio(ratio, out);
    if (bounds_cmd->parsed()) return CmdBounds(bounds, out);
    if (run_cmd->parsed()) return CmdRun(run, out);
    return CmdExperiment(exp, out);
  } catch (const ValidationError& e) {
    err << "monoratio: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "monoratio: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "monoratio: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace monoratio
