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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "monoratio/bounds.h"
#include "monoratio/csv.h"
#include "monoratio/errors.h"
#include "monoratio/ratio.h"
#include "monoratio/set_functions.h"

namespace monoratio {
namespace {

using json = nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct AlgorithmInfo {
  const char* id;
  bool matroid;
  const char* guarantee;
};

// Accelerated variants borrow the guarantee of the exact algorithm they
// approximate; their eps losses are not folded in.
constexpr AlgorithmInfo kAlgorithms[] = {
    {"greedy", false, "greedy_card"},
    {"random-greedy", false, "random_greedy_card"},
    {"threshold-greedy", false, "greedy_card"},
    {"sample-greedy", false, "greedy_card"},
    {"threshold-random-greedy", false, "random_greedy_card"},
    {"double-greedy", false, "unconstrained_alg"},
    {"random", false, ""},
    {"greedy-matroid", true, "greedy_matroid"},
    {"random-greedy-matroid", true, "rgm"},
    {"mcg", true, "mcg"},
    {"random-matroid", true, ""},
};

const AlgorithmInfo* FindAlgorithm(std::string_view id) {
  for (const auto& a : kAlgorithms) {
    if (id == a.id) return &a;
  }
  return nullptr;
}

std::string Join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

bool IsInteger(double v) { return std::isfinite(v) && v == std::floor(v); }

std::string ColumnName(std::string_view id) {
  std::string s(id);
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

// Applies one sweep value to a copy of the spec.
ExperimentSpec AtPoint(const ExperimentSpec& spec, double value) {
  ExperimentSpec p = spec;
  if (spec.sweep == "lambda") p.lambda = value;
  if (spec.sweep == "k") p.k = static_cast<int>(value);
  if (spec.sweep == "m") p.m = value;
  if (spec.sweep == "alpha") p.alpha = value;
  if (spec.sweep == "beta") p.beta = value;
  if (spec.sweep == "n") p.n = static_cast<int>(value);
  return p;
}

void CheckPoint(const ExperimentSpec& p, const std::string& where,
                std::vector<std::string>& errors) {
  auto fail = [&](const std::string& what) { errors.push_back(where + what); };
  if (p.n < 1) fail("n must be >= 1");
  if (p.objective != "quadratic" && (p.k < 0 || p.k > p.n)) {
    fail("k must lie in [0, n]");
  }
  if (p.objective == "movie" && !(p.lambda >= 0.0 && p.lambda <= 1.0)) {
    fail("lambda must lie in [0, 1]");
  }
  if (p.objective == "synthetic" && !(p.m >= 0.0 && p.m <= 1.0)) {
    fail("m must lie in [0, 1]");
  }
  if (p.objective == "image" && p.blocks >= 1 && p.n % p.blocks != 0) {
    fail("image n must be a multiple of blocks");
  }
  if (p.objective == "quadratic") {
    if (!(p.alpha > 0.0)) fail("alpha must be positive");
    if (!(p.beta > 0.0 && p.beta < 0.5)) fail("beta must lie in (0, 0.5)");
    if (p.n > 16) fail("quadratic n must be <= 16");
  }
}

double BoundForPoint(const ExperimentSpec& p) {
  if (p.objective == "movie") return MovieRatioBound(p.lambda);
  if (p.objective == "synthetic") return p.m;
  if (p.objective == "image") {
    // Weak ratio over independent sets, whose size is at most the rank.
    const int rank = ContiguousPartition(p.n, p.blocks, p.k).rank();
    return ImageWeakRatioBound(rank, p.n);
  }
  return 0.0;
}

SetFunctionOracle ObjectiveForPoint(const ExperimentSpec& p) {
  ObjectiveOptions o;
  o.kind = p.objective;
  o.n = p.n;
  o.lambda = p.lambda;
  o.m = p.m;
  o.dim = p.dim;
  o.clusters = p.blocks;
  o.seed = p.seed;
  return BuildObjective(o);
}

std::string FmtValue(double v) { return FormatDouble(v); }

// Runs fn(0..count-1) on up to `jobs` threads; rethrows the first failure.
void ParallelFor(int count, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::string XmlEscape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> ObjectiveKinds() {
  return {"movie",
          "image",
          "synthetic",
          "synthetic-cut",
          "synthetic-coverage",
          "synthetic-mixture",
          "modular"};
}

SetFunctionOracle SyntheticPairsObjective(int n, double m, uint64_t seed) {
  if (n < 1) throw ValidationError("synthetic objective needs n >= 1");
  if (!(m >= 0.0 && m <= 1.0)) throw ValidationError("m must lie in [0, 1]");
  Rng rng(seed);
  std::uniform_real_distribution<double> unif(0.5, 1.5);
  std::vector<double> w((n + 1) / 2);
  for (double& x : w) x = unif(rng);
  return SetFunctionOracle(n, [w = std::move(w), m, n](const Subset& s) {
    double total = 0.0;
    for (int i = 0; 2 * i < n; ++i) {
      const bool a = s.Contains(2 * i);
      const bool b = 2 * i + 1 < n && s.Contains(2 * i + 1);
      if (a && b) {
        total += w[i] * m;
      } else if (a || b) {
        total += w[i];
      }
    }
    return total;
  });
}

Matrix SyntheticImageSimilarity(int n, int clusters, int dim, uint64_t seed) {
  if (clusters < 1 || n < clusters || n % clusters != 0) {
    throw ValidationError("image n must be a positive multiple of clusters");
  }
  return InnerProductSimilarity(
      SyntheticImageFeatures(clusters, n / clusters, dim, seed));
}

MatroidConstraint ContiguousPartition(int n, int blocks, int capacity) {
  if (blocks < 1 || blocks > n) {
    throw ValidationError("blocks must lie in [1, n]");
  }
  std::vector<PartitionBlock> out;
  for (int b = 0; b < blocks; ++b) {
    PartitionBlock block;
    block.name = "block" + std::to_string(b);
    for (int u = b * n / blocks; u < (b + 1) * n / blocks; ++u) {
      block.elements.push_back(u);
    }
    block.capacity = capacity;
    out.push_back(std::move(block));
  }
  return MatroidConstraint::Partition(n, std::move(out));
}

SetFunctionOracle BuildObjective(const ObjectiveOptions& o) {
  const int n = o.n;
  if (o.kind == "modular") {
    if (o.weights.empty()) throw ValidationError("modular needs --weights");
    return ModularFunction(o.weights);
  }
  if (o.kind == "movie" || o.kind == "image") {
    if (!o.features_path.empty()) {
      const Matrix s =
          InnerProductSimilarity(LoadFeaturesCsv(o.features_path), o.clip);
      if (o.kind == "movie") {
        if (!(o.lambda >= 0.0 && o.lambda <= 1.0)) {
          throw ValidationError("lambda must lie in [0, 1]");
        }
        return MovieObjective(s, o.lambda);
      }
      return ImageObjective(s);
    }
    if (n < 1) throw ValidationError("n must be >= 1");
    if (o.kind == "movie") {
      if (!(o.lambda >= 0.0 && o.lambda <= 1.0)) {
        throw ValidationError("lambda must lie in [0, 1]");
      }
      return MovieObjective(
          InnerProductSimilarity(SyntheticMovieFeatures(n, o.dim, o.seed)),
          o.lambda);
    }
    return ImageObjective(
        SyntheticImageSimilarity(n, o.clusters, o.dim, o.seed));
  }
  if (o.kind == "synthetic") return SyntheticPairsObjective(n, o.m, o.seed);
  if (n < 1) throw ValidationError("n must be >= 1");
  Rng rng(o.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  if (o.kind == "synthetic-cut") {
    // Complete graph: f(N) = 0 while singletons are positive, so m = 0.
    std::vector<WeightedEdge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v)
        edges.push_back({u, v, 0.1 + 0.9 * unif(rng)});
    }
    return UndirectedCutFunction(n, std::move(edges));
  }
  std::vector<std::vector<int>> covers(n);
  std::vector<double> weights(2 * n);
  for (int u = 0; u < n; ++u) {
    for (int p = 0; p < 2 * n; ++p) {
      if (unif(rng) < 0.3) covers[u].push_back(p);
    }
  }
  for (double& w : weights) w = unif(rng);
  SetFunctionOracle coverage =
      CoverageFunction(std::move(covers), std::move(weights));
  if (o.kind == "synthetic-coverage") return coverage;
  if (o.kind == "synthetic-mixture") {
    std::vector<WeightedEdge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && unif(rng) < 0.4) edges.push_back({u, v, unif(rng)});
      }
    }
    return SumFunction(coverage, DirectedCutFunction(n, std::move(edges)));
  }
  throw ValidationError("unknown objective '" + o.kind + "' (expected one of " +
                        Join(ObjectiveKinds(), ", ") + ")");
}

std::vector<std::string> AlgorithmIds() {
  std::vector<std::string> ids;
  for (const auto& a : kAlgorithms) ids.emplace_back(a.id);
  return ids;
}

bool IsKnownAlgorithm(std::string_view id) {
  return FindAlgorithm(id) != nullptr;
}

bool IsMatroidAlgorithm(std::string_view id) {
  const AlgorithmInfo* a = FindAlgorithm(id);
  return a != nullptr && a->matroid;
}

std::string AlgorithmGuaranteeId(std::string_view id) {
  if (id == "frank-wolfe") return "frank_wolfe";
  const AlgorithmInfo* a = FindAlgorithm(id);
  return a == nullptr ? "" : a->guarantee;
}

RunResult RunAlgorithm(std::string_view id, const SetFunctionOracle& f,
                       const MatroidConstraint* m, const AlgorithmParams& p,
                       Rng& rng) {
  const AlgorithmInfo* info = FindAlgorithm(id);
  if (info == nullptr) {
    throw ValidationError("unknown algorithm '" + std::string(id) + "'");
  }
  if (info->matroid && m == nullptr) {
    throw ValidationError(std::string(id) + " needs a matroid");
  }
  if (!info->matroid && id != "double-greedy" && (p.k < 0 || p.k > f.n())) {
    throw ValidationError("k must lie in [0, n]");
  }
  if (id == "greedy") return GreedyCardinality(f, p.k);
  if (id == "random-greedy") return RandomGreedyCardinality(f, p.k, rng);
  if (id == "threshold-greedy") return ThresholdGreedy(f, p.k, p.eps);
  if (id == "sample-greedy") return SampleGreedy(f, p.k, p.eps, rng);
  if (id == "threshold-random-greedy") {
    return ThresholdRandomGreedy(f, p.k, p.eps, rng);
  }
  if (id == "double-greedy") return DoubleGreedy(f, rng);
  if (id == "random") return RandomBaselineCardinality(f, p.k, rng);
  if (id == "greedy-matroid") return GreedyMatroid(f, *m);
  if (id == "random-greedy-matroid")
    return RandomGreedyMatroid(f, *m, p.eps, rng);
  if (id == "random-matroid") return RandomBaselineMatroid(f, *m, rng);
  // mcg followed by swap rounding.
  McgConfig cfg;
  cfg.T = p.T;
  cfg.steps = p.steps;
  cfg.samples = p.samples;
  cfg.seed = rng();
  const McgResult fractional = MeasuredContinuousGreedy(f, *m, cfg);
  RunResult r;
  r.solution = SwapRounding(fractional.y, *m, rng);
  r.value = f(r.solution);
  r.oracle_calls = fractional.oracle_calls + 1;
  return r;
}

TrialStats Summarize(const std::vector<double>& values) {
  TrialStats s;
  if (values.empty()) return s;
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  double m2 = 0.0;
  for (size_t i = 0; i < values.size(); ++i) {
    const double d = values[i] - s.mean;
    s.mean += d / (i + 1);
    m2 += d * (values[i] - s.mean);
  }
  if (values.size() > 1) {
    s.stderr_mean = std::sqrt(m2 / (values.size() - 1) / values.size());
  }
  return s;
}

std::vector<std::string> ValidateExperimentSpec(const ExperimentSpec& spec) {
  std::vector<std::string> errors;
  const std::vector<std::string> objectives = {"movie", "image", "quadratic",
                                               "synthetic"};
  const bool known_objective = std::find(objectives.begin(), objectives.end(),
                                         spec.objective) != objectives.end();
  if (!known_objective) {
    errors.push_back(
        "objective must be one of movie, image, quadratic, synthetic");
  }
  if (spec.algorithms.empty())
    errors.push_back("at least one algorithm is required");
  for (const auto& id : spec.algorithms) {
    if (id == "frank-wolfe") {
      if (known_objective && spec.objective != "quadratic") {
        errors.push_back("frank-wolfe only runs on the quadratic objective");
      }
      continue;
    }
    if (!IsKnownAlgorithm(id)) {
      errors.push_back("unknown algorithm '" + id + "'");
    } else if (spec.objective == "quadratic") {
      errors.push_back("quadratic objective only supports frank-wolfe, not '" +
                       id + "'");
    } else if (spec.objective == "image" && !IsMatroidAlgorithm(id)) {
      errors.push_back("image objective needs a matroid algorithm, not '" + id +
                       "'");
    }
  }
  std::vector<std::string> sweeps;
  if (spec.objective == "movie") sweeps = {"lambda", "k", "n"};
  if (spec.objective == "image") sweeps = {"k", "n"};
  if (spec.objective == "synthetic") sweeps = {"m", "k", "n"};
  if (spec.objective == "quadratic") sweeps = {"alpha", "beta", "n"};
  const bool known_sweep =
      std::find(sweeps.begin(), sweeps.end(), spec.sweep) != sweeps.end();
  if (known_objective && !known_sweep) {
    errors.push_back("sweep for " + spec.objective + " must be one of " +
                     Join(sweeps, ", "));
  }
  if (spec.values.empty()) errors.push_back("sweep grid must be nonempty");
  if (spec.trials < 1) errors.push_back("trials must be >= 1");
  if (spec.blocks < 1) errors.push_back("blocks must be >= 1");
  if (spec.dim < 1) errors.push_back("dim must be >= 1");
  if (!(spec.eps > 0.0 && spec.eps < 1.0))
    errors.push_back("eps must lie in (0, 1)");
  if (!(spec.T >= 0.0)) errors.push_back("T must be >= 0");
  if (spec.steps < 1) errors.push_back("steps must be >= 1");
  if (spec.samples < 2) errors.push_back("samples must be >= 2");
  if (!(spec.v > 0.0)) errors.push_back("v must be positive");
  if (!spec.reference.empty()) {
    if (std::find(spec.algorithms.begin(), spec.algorithms.end(),
                  spec.reference) == spec.algorithms.end()) {
      errors.push_back("reference '" + spec.reference +
                       "' must be one of the listed algorithms");
    } else if (AlgorithmGuaranteeId(spec.reference).empty()) {
      errors.push_back("reference '" + spec.reference + "' has no guarantee");
    }
  }
  if (known_objective && known_sweep) {
    std::vector<std::string> point_errors;
    for (double v : spec.values) {
      const std::string where = spec.sweep + "=" + FmtValue(v) + ": ";
      if ((spec.sweep == "k" || spec.sweep == "n") && !IsInteger(v)) {
        point_errors.push_back(where + "must be an integer");
        continue;
      }
      CheckPoint(AtPoint(spec, v), where, point_errors);
    }
    if (spec.values.empty()) CheckPoint(spec, "", point_errors);
    for (auto& e : point_errors) {
      if (std::find(errors.begin(), errors.end(), e) == errors.end()) {
        errors.push_back(std::move(e));
      }
    }
  }
  return errors;
}

ExperimentSpec ParseExperimentSpecJson(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("experiment spec is not valid JSON: ") +
                          e.what());
  }
  if (!j.is_object())
    throw ValidationError("experiment spec must be a JSON object");
  ExperimentSpec spec;
  std::vector<std::string> errors;
  auto read = [&](const std::string& key, auto& field) {
    try {
      field = j.at(key).get<std::decay_t<decltype(field)>>();
    } catch (const json::exception&) {
      errors.push_back("field '" + key + "' has the wrong type");
    }
  };
  for (const auto& [key, value] : j.items()) {
    if (key == "objective")
      read(key, spec.objective);
    else if (key == "algorithms")
      read(key, spec.algorithms);
    else if (key == "sweep")
      read(key, spec.sweep);
    else if (key == "values")
      read(key, spec.values);
    else if (key == "n")
      read(key, spec.n);
    else if (key == "k")
      read(key, spec.k);
    else if (key == "lambda")
      read(key, spec.lambda);
    else if (key == "m")
      read(key, spec.m);
    else if (key == "alpha")
      read(key, spec.alpha);
    else if (key == "beta")
      read(key, spec.beta);
    else if (key == "v")
      read(key, spec.v);
    else if (key == "blocks")
      read(key, spec.blocks);
    else if (key == "dim")
      read(key, spec.dim);
    else if (key == "trials")
      read(key, spec.trials);
    else if (key == "seed")
      read(key, spec.seed);
    else if (key == "eps")
      read(key, spec.eps);
    else if (key == "T")
      read(key, spec.T);
    else if (key == "steps")
      read(key, spec.steps);
    else if (key == "samples")
      read(key, spec.samples);
    else if (key == "reference")
      read(key, spec.reference);
    else if (key == "csv")
      read(key, spec.csv_path);
    else if (key == "svg")
      read(key, spec.svg_path);
    else
      errors.push_back("unknown field '" + key + "'");
  }
  for (auto& e : ValidateExperimentSpec(spec)) errors.push_back(std::move(e));
  if (!errors.empty()) throw ValidationError(Join(errors, "; "));
  return spec;
}

ExperimentTable RunExperiment(const ExperimentSpec& spec, int jobs) {
  const std::vector<std::string> errors = ValidateExperimentSpec(spec);
  if (!errors.empty()) throw ValidationError(Join(errors, "; "));

  ExperimentTable table;
  std::string reference = spec.reference;
  if (reference.empty()) {
    for (const auto& id : spec.algorithms) {
      const std::string g = AlgorithmGuaranteeId(id);
      if (!g.empty() && Guarantee(ParseGuaranteeKind(g), 0.0, spec.T) > 0.0) {
        reference = id;
        break;
      }
    }
  }
  table.reference = reference;
  table.guarantee_id = reference.empty() ? "" : AlgorithmGuaranteeId(reference);

  const int points = static_cast<int>(spec.values.size());
  const int algs = static_cast<int>(spec.algorithms.size());
  const int trials = spec.trials;
  // values[point][alg][trial], slack[point][trial], bound[point][trial].
  std::vector<std::vector<std::vector<double>>> values(
      points,
      std::vector<std::vector<double>>(algs, std::vector<double>(trials)));
  std::vector<std::vector<double>> slack(points,
                                         std::vector<double>(trials, 0.0));
  std::vector<std::vector<double>> bound(points,
                                         std::vector<double>(trials, 0.0));

  ParallelFor(points * trials, jobs, [&](int task) {
    const int pi = task / trials;
    const int t = task % trials;
    const ExperimentSpec p = AtPoint(spec, spec.values[pi]);
    const uint64_t trial_seed = spec.seed + t;
    if (p.objective == "quadratic") {
      const QuadraticInstance q =
          GenerateQuadraticInstance(p.n, p.v, p.beta, p.alpha, trial_seed);
      FwConfig cfg;
      cfg.eps = p.eps;
      cfg.L = q.L;
      cfg.D = q.D;
      const FwResult r =
          FrankWolfeNonmonotone(q.Objective(), q.Polytope(), cfg);
      for (int a = 0; a < algs; ++a) values[pi][a][t] = r.value;
      slack[pi][t] = r.additive_slack;
      bound[pi][t] = QuadraticRatioBound(p.alpha, p.beta, q.M >= 0.0);
      return;
    }
    const SetFunctionOracle f = ObjectiveForPoint(p);
    const MatroidConstraint m = p.objective == "image"
                                    ? ContiguousPartition(p.n, p.blocks, p.k)
                                    : MatroidConstraint::Uniform(p.n, p.k);
    AlgorithmParams params;
    params.k = p.k;
    params.eps = p.eps;
    params.T = p.T;
    params.steps = p.steps;
    params.samples = p.samples;
    for (int a = 0; a < algs; ++a) {
      Rng rng(trial_seed);
      values[pi][a][t] =
          RunAlgorithm(spec.algorithms[a], f, &m, params, rng).value;
    }
    bound[pi][t] = BoundForPoint(p);
  });

  table.columns.push_back("sweep_value");
  for (const auto& id : spec.algorithms) {
    table.columns.push_back(ColumnName(id) + "_mean");
    table.columns.push_back(ColumnName(id) + "_stderr");
  }
  for (const char* c : {"m_bound", "reference_value", "slack", "ub_prev",
                        "ub_new", "band_lo", "band_hi"}) {
    table.columns.emplace_back(c);
  }
  const int ref_index =
      reference.empty()
          ? -1
          : static_cast<int>(std::find(spec.algorithms.begin(),
                                       spec.algorithms.end(), reference) -
                             spec.algorithms.begin());
  for (int pi = 0; pi < points; ++pi) {
    std::vector<double> row = {spec.values[pi]};
    for (int a = 0; a < algs; ++a) {
      const TrialStats s = Summarize(values[pi][a]);
      row.push_back(s.mean);
      row.push_back(s.stderr_mean);
    }
    const double m_bound = std::clamp(
        *std::min_element(bound[pi].begin(), bound[pi].end()), 0.0, 1.0);
    const double ref_value =
        ref_index < 0 ? std::nan("") : Summarize(values[pi][ref_index]).mean;
    const double s = Summarize(slack[pi]).mean;
    double ub_prev = kInf;
    double ub_new = kInf;
    if (ref_index >= 0) {
      const GuaranteeKind kind = ParseGuaranteeKind(table.guarantee_id);
      ub_prev =
          UpperBoundOrInfinity(ref_value + s, Guarantee(kind, 0.0, spec.T));
      ub_new =
          UpperBoundOrInfinity(ref_value + s, Guarantee(kind, m_bound, spec.T));
    }
    for (double v : {m_bound, ref_value, s, ub_prev, ub_new, ub_new, ub_prev}) {
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string ExperimentToCsv(const ExperimentTable& table) {
  std::ostringstream out;
  CsvRow header;
  for (const auto& c : table.columns) header.Add(c);
  out << header;
  for (const auto& r : table.rows) {
    CsvRow row;
    for (double v : r) row.Add(v);
    out << row;
  }
  return out.str();
}

std::string LinePlotSvg(const std::string& title, const std::string& x_label,
                        const std::vector<SvgSeries>& series,
                        const std::optional<SvgBand>& band) {
  constexpr double kW = 640, kH = 400, kLeft = 70, kRight = 170, kTop = 40,
                   kBottom = 50;
  double x0 = kInf, x1 = -kInf, y0 = kInf, y1 = -kInf;
  auto extend = [&](double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) return;
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  };
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) extend(x, y);
  }
  if (band) {
    for (size_t i = 0; i < band->x.size(); ++i) {
      extend(band->x[i], band->lo[i]);
      extend(band->x[i], band->hi[i]);
    }
  }
  if (!(x0 <= x1)) {
    x0 = 0;
    x1 = 1;
    y0 = 0;
    y1 = 1;
  }
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  const double pw = kW - kLeft - kRight;
  const double ph = kH - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return kTop + (1 - (y - y0) / (y1 - y0)) * ph; };
  auto num = [](double v) {
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
  };
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << kW << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << " " << kH
      << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kW / 2 << "\" y=\"22\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"14\">" << XmlEscape(title)
      << "</text>\n";
  if (band && !band->x.empty()) {
    std::ostringstream pts;
    for (size_t i = 0; i < band->x.size(); ++i) {
      if (std::isfinite(band->hi[i])) {
        pts << num(px(band->x[i])) << "," << num(py(band->hi[i])) << " ";
      }
    }
    for (size_t i = band->x.size(); i-- > 0;) {
      if (std::isfinite(band->lo[i])) {
        pts << num(px(band->x[i])) << "," << num(py(band->lo[i])) << " ";
      }
    }
    out << "<polygon points=\"" << pts.str()
        << "\" fill=\"#9ecae1\" fill-opacity=\"0.4\" stroke=\"none\"/>\n";
  }
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + ph << "\" x2=\""
      << kLeft + pw << "\" y2=\"" << kTop + ph << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << kTop + ph << "\" stroke=\"black\"/>\n";
  auto label = [&](double x, double y, const std::string& text,
                   const char* anchor) {
    out << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" text-anchor=\""
        << anchor << "\" font-family=\"sans-serif\" font-size=\"11\">"
        << XmlEscape(text) << "</text>\n";
  };
  label(kLeft, kTop + ph + 16, num(x0), "middle");
  label(kLeft + pw, kTop + ph + 16, num(x1), "middle");
  label(kLeft - 6, kTop + ph, num(y0), "end");
  label(kLeft - 6, kTop + 4, num(y1), "end");
  label(kLeft + pw / 2, kH - 12, x_label, "middle");
  for (size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % 8];
    std::ostringstream pts;
    for (const auto& [x, y] : series[i].points) {
      if (std::isfinite(x) && std::isfinite(y)) {
        pts << num(px(x)) << "," << num(py(y)) << " ";
      }
    }
    out << "<polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\""
        << color << "\" stroke-width=\"2\"/>\n";
    const double ly = kTop + 14 + 18 * i;
    out << "<line x1=\"" << kW - kRight + 12 << "\" y1=\"" << ly - 4
        << "\" x2=\"" << kW - kRight + 32 << "\" y2=\"" << ly - 4
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    label(kW - kRight + 36, ly, series[i].name, "start");
  }
  out << "</svg>\n";
  return out.str();
}

std::string ExperimentToSvg(const ExperimentTable& table,
                            const std::string& title) {
  auto column = [&](const std::string& name) {
    const auto it = std::find(table.columns.begin(), table.columns.end(), name);
    return static_cast<int>(it - table.columns.begin());
  };
  std::vector<SvgSeries> series;
  SvgBand band;
  for (const std::string name : {"ub_prev", "ub_new"}) {
    SvgSeries s{name, {}};
    for (const auto& r : table.rows)
      s.points.emplace_back(r[0], r[column(name)]);
    series.push_back(std::move(s));
  }
  for (size_t c = 1; c < table.columns.size(); ++c) {
    const std::string& name = table.columns[c];
    if (name.size() > 5 && name.compare(name.size() - 5, 5, "_mean") == 0) {
      SvgSeries s{name.substr(0, name.size() - 5), {}};
      for (const auto& r : table.rows) s.points.emplace_back(r[0], r[c]);
      series.push_back(std::move(s));
    }
  }
  for (const auto& r : table.rows) {
    band.x.push_back(r[0]);
    band.lo.push_back(r[column("band_lo")]);
    band.hi.push_back(r[column("band_hi")]);
  }
  return LinePlotSvg(title, "sweep value", series, band);
}

}  // namespace monoratio
