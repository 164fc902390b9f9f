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

#include "monoratio/discrete.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "monoratio/csv.h"
#include "monoratio/errors.h"

namespace monoratio {
namespace {

void CheckK(const SetFunctionOracle& f, int k) {
  if (k < 0 || k > f.n()) {
    throw PreconditionError("k = " + std::to_string(k) +
                            " must lie in [0, n = " + std::to_string(f.n()) +
                            "]");
  }
}

void CheckEps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw PreconditionError("eps must lie in (0, 1)");
  }
}

RunResult Finish(const SetFunctionOracle& g, Subset solution,
                 std::vector<TraceEntry> trace,
                 std::vector<double> trajectory) {
  RunResult r;
  r.value = g(solution);
  r.solution = std::move(solution);
  r.oracle_calls = g.eval_count();
  r.trace = std::move(trace);
  r.trajectory = std::move(trajectory);
  return r;
}

struct Best {
  int element = -1;
  double gain = 0.0;
};

// Argmax of f(u | s) over the candidates, ties by smaller id (candidates are
// scanned in the given order, which callers keep id-sorted).
Best ArgmaxMarginal(const SetFunctionOracle& g, const Subset& s, double fs,
                    const std::vector<int>& candidates) {
  Best best;
  for (int u : candidates) {
    const double gain = g(s.With(u)) - fs;
    if (best.element < 0 || gain > best.gain) best = {u, gain};
  }
  return best;
}

std::vector<int> Outside(const Subset& s) {
  std::vector<int> out;
  for (int u = 0; u < s.universe_size(); ++u) {
    if (!s.Contains(u)) out.push_back(u);
  }
  return out;
}

// Adds each pool element with probability 1/k (at most one overall):
// uniform slot among k, where slots past |pool| stand for "keep A".
int PickSlot(const std::vector<int>& pool, int k, Rng& rng) {
  const int r = std::uniform_int_distribution<int>(0, k - 1)(rng);
  return r < static_cast<int>(pool.size()) ? pool[r] : -1;
}

std::vector<int> SampleWithoutReplacement(std::vector<int> pool, int count,
                                          Rng& rng) {
  count = std::min<int>(count, pool.size());
  for (int i = 0; i < count; ++i) {
    const int j = std::uniform_int_distribution<int>(
        i, static_cast<int>(pool.size()) - 1)(rng);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

std::string TraceToCsv(const std::vector<TraceEntry>& trace) {
  std::ostringstream out;
  out << CsvRow()
             .Add("iteration")
             .Add("element")
             .Add("marginal")
             .Add("accepted");
  for (const auto& t : trace) {
    out << CsvRow()
               .Add(t.iteration)
               .Add(t.element)
               .Add(t.marginal)
               .Add(t.accepted ? 1 : 0);
  }
  return out.str();
}

RunResult DoubleGreedy(const SetFunctionOracle& f, Rng& rng) {
  SetFunctionOracle g = f.Fork();
  const int n = g.n();
  Subset x(n);
  Subset y = Subset::Full(n);
  double fx = g(x);
  double fy = g(y);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<TraceEntry> trace;
  std::vector<double> trajectory;
  for (int u = 0; u < n; ++u) {
    const Subset x_plus = x.With(u);
    const Subset y_minus = y.Without(u);
    const double fxp = g(x_plus);
    const double fym = g(y_minus);
    const double gain = fxp - fx;
    const double a = std::max(gain, 0.0);
    const double b = std::max(fym - fy, 0.0);
    const double p = a + b == 0.0 ? 1.0 : a / (a + b);
    const bool add = unif(rng) < p;
    if (add) {
      x = x_plus;
      fx = fxp;
    } else {
      y = y_minus;
      fy = fym;
    }
    trace.push_back({u, u, gain, add});
    trajectory.push_back(fx);
  }
  return Finish(g, x, std::move(trace), std::move(trajectory));
}

RunResult BestOfWithGround(const SetFunctionOracle& f, Rng& rng) {
  RunResult dg = DoubleGreedy(f, rng);
  SetFunctionOracle g = f.Fork();
  const Subset full = Subset::Full(f.n());
  const double f_full = g(full);
  dg.oracle_calls += g.eval_count();
  if (f_full > dg.value) {
    dg.solution = full;
    dg.value = f_full;
  }
  return dg;
}

RunResult GreedyCardinality(const SetFunctionOracle& f, int k) {
  CheckK(f, k);
  SetFunctionOracle g = f.Fork();
  Subset a(g.n());
  double fa = g(a);
  std::vector<TraceEntry> trace;
  std::vector<double> trajectory;
  for (int i = 1; i <= k; ++i) {
    const Best best = ArgmaxMarginal(g, a, fa, Outside(a));
    if (best.element < 0) break;
    const bool accept = best.gain >= 0.0;
    trace.push_back({i, best.element, best.gain, accept});
    if (!accept) {
      // Nothing changes, so every later iteration would reject the same
      // element; the remaining iterations are no-ops.
      for (int j = i; j <= k; ++j) trajectory.push_back(fa);
      break;
    }
    a.Insert(best.element);
    fa += best.gain;
    trajectory.push_back(fa);
  }
  return Finish(g, a, std::move(trace), std::move(trajectory));
}

RunResult RandomGreedyCardinality(const SetFunctionOracle& f, int k, Rng& rng) {
  CheckK(f, k);
  SetFunctionOracle g = f.Fork();
  Subset a(g.n());
  double fa = g(a);
  std::vector<TraceEntry> trace;
  std::vector<double> trajectory;
  for (int i = 1; i <= k; ++i) {
    std::vector<std::pair<double, int>> gains;
    for (int u : Outside(a)) {
      const double gain = g(a.With(u)) - fa;
      if (gain > 0.0) gains.emplace_back(gain, u);
    }
    // Top-k positive marginals; ties by smaller id.
    std::stable_sort(
        gains.begin(), gains.end(),
        [](const auto& l, const auto& r) { return l.first > r.first; });
    if (static_cast<int>(gains.size()) > k) gains.resize(k);
    std::vector<int> pool;
    for (const auto& [gain, u] : gains) pool.push_back(u);
    const int pick = PickSlot(pool, k, rng);
    double gain = 0.0;
    if (pick >= 0) {
      for (const auto& [gv, u] : gains) {
        if (u == pick) gain = gv;
      }
      a.Insert(pick);
      fa += gain;
    }
    trace.push_back({i, pick, gain, pick >= 0});
    trajectory.push_back(fa);
  }
  return Finish(g, a, std::move(trace), std::move(trajectory));
}

RunResult ThresholdGreedy(const SetFunctionOracle& f, int k, double eps) {
  CheckK(f, k);
  CheckEps(eps);
  SetFunctionOracle g = f.Fork();
  const int n = g.n();
  Subset a(n);
  double fa = g(a);
  std::vector<TraceEntry> trace;
  std::vector<double> trajectory;
  double d = 0.0;
  for (int u = 0; u < n; ++u) d = std::max(d, g(a.With(u)) - fa);
  int iteration = 0;
  if (d > 0.0 && k > 0) {
    const double floor = eps * d / n;
    for (double tau = d; tau >= floor && a.Count() < k; tau *= 1.0 - eps) {
      for (int u = 0; u < n && a.Count() < k; ++u) {
        if (a.Contains(u)) continue;
        const double gain = g(a.With(u)) - fa;
        if (gain >= tau) {
          a.Insert(u);
          fa += gain;
          trace.push_back({++iteration, u, gain, true});
          trajectory.push_back(fa);
        }
      }
    }
  }
  return Finish(g, a, std::move(trace), std::move(trajectory));
}

RunResult SampleGreedy(const SetFunctionOracle& f, int k, double eps,
                       Rng& rng) {
  CheckK(f, k);
  CheckEps(eps);
  SetFunctionOracle g = f.Fork();
  const int n = g.n();
  Subset a(n);
  double fa = g(a);
  std::vector<TraceEntry> trace;
  std::vector<double> trajectory;
  const int sample_size =
      k == 0 ? 0
             : static_cast<int>(
                   std::ceil(static_cast<double>(n) / k * std::log(1.0 / eps)));
  for (int i = 1; i <= k; ++i) {
    const std::vector<int> sample =
        SampleWithoutReplacement(Outside(a), std::max(sample_size, 1), rng);
    const Best best = ArgmaxMarginal(g, a, fa, sample);
    if (best.element < 0) break;
    // Same >= 0 gate as the exact greedy, so non-monotone objectives never
    // lose value.
    const bool accept = best.gain >= 0.0;
    trace.push_back({i, best.element, best.gain, accept});
    if (accept) {
      a.Insert(best.element);
      fa += best.gain;
    }
    trajectory.push_back(fa);
  }
  return Finish(g, a, std::move(trace), std::move(trajectory));
}

RunResult ThresholdRandomGreedy(const SetFunctionOracle& f, int k, double eps,
                                Rng& rng) {
  CheckK(f, k);
  CheckEps(eps);
  SetFunctionOracle g = f.Fork();
  const int n = g.n();
  Subset a(n);
  double fa = g(a);
  std::vector<TraceEntry> trace;
  std::vector<double> trajectory;
  double d = 0.0;
  for (int u = 0; u < n; ++u) d = std::max(d, g(a.With(u)) - fa);
  const double floor = d * eps / n;
  // Marginals only shrink as A grows (submodularity), so the threshold
  // carries over between iterations.
  double tau = d;
  for (int i = 1; i <= k; ++i) {
    std::vector<double> gain(n, 0.0);
    std::vector<char> known(n, 0);
    std::vector<int> pool;
    // Id-ordered elements whose gain clears the threshold, at most k.
    auto gather = [&](double t) {
      pool.clear();
      for (int u = 0; u < n && static_cast<int>(pool.size()) < k; ++u) {
        if (a.Contains(u)) continue;
        if (!known[u]) {
          gain[u] = g(a.With(u)) - fa;
          known[u] = 1;
        }
        if (gain[u] >= t && gain[u] > 0.0) pool.push_back(u);
      }
    };
    if (d > 0.0) {
      gather(tau);
      while (static_cast<int>(pool.size()) < k && tau > floor) {
        tau = std::max(tau * (1.0 - eps), floor);
        gather(tau);
      }
    }
    const int pick = PickSlot(pool, k, rng);
    double picked_gain = 0.0;
    if (pick >= 0) {
      picked_gain = gain[pick];
      a.Insert(pick);
      fa += picked_gain;
    }
    trace.push_back({i, pick, picked_gain, pick >= 0});
    trajectory.push_back(fa);
  }
  return Finish(g, a, std::move(trace), std::move(trajectory));
}

RunResult GreedyMatroid(const SetFunctionOracle& f,
                        const MatroidConstraint& m) {
  if (m.n() != f.n()) throw PreconditionError("matroid size mismatch");
  SetFunctionOracle g = f.Fork();
  Subset a(g.n());
  double fa = g(a);
  std::vector<TraceEntry> trace;
  std::vector<double> trajectory;
  for (int i = 1;; ++i) {
    std::vector<int> candidates;
    for (int u : Outside(a)) {
      if (m.IsIndependent(a.With(u))) candidates.push_back(u);
    }
    const Best best = ArgmaxMarginal(g, a, fa, candidates);
    if (best.element < 0) break;
    const bool accept = best.gain >= 0.0;
    trace.push_back({i, best.element, best.gain, accept});
    if (!accept) break;
    a.Insert(best.element);
    fa += best.gain;
    trajectory.push_back(fa);
  }
  return Finish(g, a, std::move(trace), std::move(trajectory));
}

RunResult RandomGreedyMatroid(const SetFunctionOracle& f,
                              const MatroidConstraint& m, double eps,
                              Rng& rng) {
  CheckEps(eps);
  if (m.n() != f.n()) throw PreconditionError("matroid size mismatch");
  SetFunctionOracle g = f.Fork();
  const int n = g.n();
  const int k = m.rank();
  if (k == 0) return Finish(g, Subset(n), {}, {});
  const MatroidConstraint aug = m.WithDummies(2 * k);
  const int total = n + 2 * k;
  // Dummies are invisible to f.
  auto value = [&](const Subset& s) { return g(s.Resized(n)); };
  Subset s(total);
  for (int d = n; d < n + k; ++d) s.Insert(d);
  double fs = value(s);
  const int iterations = static_cast<int>(std::ceil(k / eps - 1e-9));
  std::vector<TraceEntry> trace;
  std::vector<double> trajectory;
  std::vector<double> w(total, 0.0);
  for (int i = 1; i <= iterations; ++i) {
    std::fill(w.begin(), w.end(), 0.0);
    for (int u = 0; u < n; ++u) {
      if (!s.Contains(u)) w[u] = value(s.With(u)) - fs;
    }
    const Subset b = MaxWeightBaseDisjoint(aug, w, s);
    const auto exchange = ExchangeMap(aug, s, b);
    const int slot = std::uniform_int_distribution<int>(0, k - 1)(rng);
    const auto [u, out] = exchange[slot];
    const Subset candidate = s.Without(out).With(u);
    // Dummy-for-dummy swaps never change the value; skip the oracle call.
    const bool same_visible = u >= n && out >= n;
    const double fc = same_visible ? fs : value(candidate);
    const double delta = fc - fs;
    const bool accept = delta > 0.0;
    if (accept) {
      s = candidate;
      fs = fc;
    }
    trace.push_back({i, u, delta, accept});
    trajectory.push_back(fs);
  }
  return Finish(g, s.Resized(n), std::move(trace), std::move(trajectory));
}

RunResult RandomBaselineCardinality(const SetFunctionOracle& f, int k,
                                    Rng& rng) {
  CheckK(f, k);
  SetFunctionOracle g = f.Fork();
  std::vector<int> all(g.n());
  std::iota(all.begin(), all.end(), 0);
  return Finish(
      g, Subset::FromIds(g.n(), SampleWithoutReplacement(all, k, rng)), {}, {});
}

RunResult RandomBaselineMatroid(const SetFunctionOracle& f,
                                const MatroidConstraint& m, Rng& rng) {
  if (m.n() != f.n()) throw PreconditionError("matroid size mismatch");
  SetFunctionOracle g = f.Fork();
  const int n = g.n();
  std::vector<int> chosen;
  switch (m.kind()) {
    case MatroidConstraint::Kind::kUniform: {
      std::vector<int> all(n);
      std::iota(all.begin(), all.end(), 0);
      chosen = SampleWithoutReplacement(all, m.rank(), rng);
      break;
    }
    case MatroidConstraint::Kind::kPartition:
      for (const auto& block : m.blocks()) {
        for (int u :
             SampleWithoutReplacement(block.elements, block.capacity, rng)) {
          chosen.push_back(u);
        }
      }
      break;
    case MatroidConstraint::Kind::kOracle: {
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      for (int i = n - 1; i > 0; --i) {
        std::swap(order[i],
                  order[std::uniform_int_distribution<int>(0, i)(rng)]);
      }
      Subset s(n);
      for (int u : order) {
        if (m.IsIndependent(s.With(u))) s.Insert(u);
      }
      chosen = s.Elements();
      break;
    }
  }
  return Finish(g, Subset::FromIds(n, chosen), {}, {});
}

}  // namespace monoratio
