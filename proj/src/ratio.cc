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

#include "monoratio/ratio.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "monoratio/csv.h"
#include "monoratio/errors.h"

namespace monoratio {
namespace {

void CheckLimit(const SetFunctionOracle& f, int limit, const char* what) {
  if (f.n() > limit || f.n() > 30) {
    throw SizeLimitError(std::string(what) + ": n = " + std::to_string(f.n()) +
                         " exceeds the limit " + std::to_string(limit));
  }
}

// f on every mask, rejecting negative values.
std::vector<double> Tabulate(const SetFunctionOracle& f) {
  const int n = f.n();
  std::vector<double> v(size_t{1} << n);
  for (uint64_t mask = 0; mask < v.size(); ++mask) {
    v[mask] = f(Subset::FromMask(n, mask));
    if (v[mask] < 0.0) {
      throw PreconditionError(
          "ratio: f" + Subset::FromMask(n, mask).ToString() + " is negative");
    }
  }
  return v;
}

}  // namespace

RatioReport ExactMonotonicityRatio(const SetFunctionOracle& f, int limit) {
  CheckLimit(f, limit, "ExactMonotonicityRatio");
  SetFunctionOracle g = f.Fork();
  const int n = g.n();
  const std::vector<double> v = Tabulate(g);
  const uint64_t count = v.size();
  std::vector<double> low(v);
  std::vector<uint64_t> arg(count);
  for (uint64_t mask = count; mask-- > 0;) {
    arg[mask] = mask;
    for (int u = 0; u < n; ++u) {
      const uint64_t up = mask | (uint64_t{1} << u);
      if (up == mask) continue;
      if (low[up] < low[mask] ||
          (low[up] == low[mask] && arg[up] < arg[mask])) {
        low[mask] = low[up];
        arg[mask] = arg[up];
      }
    }
  }
  RatioReport r;
  r.witness_s = Subset(n);
  r.witness_t = Subset(n);
  for (uint64_t s = 0; s < count; ++s) {
    const double ratio = ValueRatio(low[s], v[s]);
    if (ratio < r.ratio) {
      r.ratio = ratio;
      r.witness_s = Subset::FromMask(n, s);
      r.witness_t = Subset::FromMask(n, arg[s]);
    }
  }
  r.eval_count = g.eval_count();
  return r;
}

RatioReport NaiveMonotonicityRatio(const SetFunctionOracle& f, int limit) {
  CheckLimit(f, limit, "NaiveMonotonicityRatio");
  SetFunctionOracle g = f.Fork();
  const int n = g.n();
  const std::vector<double> v = Tabulate(g);
  const uint64_t count = v.size();
  RatioReport r;
  r.witness_s = Subset(n);
  r.witness_t = Subset(n);
  for (uint64_t s = 0; s < count; ++s) {
    for (uint64_t t = 0; t < count; ++t) {
      if ((s & t) != s) continue;
      const double ratio = ValueRatio(v[t], v[s]);
      if (ratio < r.ratio) {
        r.ratio = ratio;
        r.witness_s = Subset::FromMask(n, s);
        r.witness_t = Subset::FromMask(n, t);
      }
    }
  }
  r.eval_count = g.eval_count();
  return r;
}

RatioReport ExactWeakMonotonicityRatio(const SetFunctionOracle& f,
                                       const FeasiblePredicate& feasible,
                                       int limit) {
  CheckLimit(f, limit, "ExactWeakMonotonicityRatio");
  SetFunctionOracle g = f.Fork();
  const int n = g.n();
  const uint64_t count = uint64_t{1} << n;
  std::vector<uint64_t> family;
  for (uint64_t mask = 0; mask < count; ++mask) {
    if (feasible(Subset::FromMask(n, mask))) family.push_back(mask);
  }
  const double kUnknown = -1.0;
  std::vector<double> cache(count, kUnknown);
  auto value = [&](uint64_t mask) {
    if (cache[mask] == kUnknown) {
      cache[mask] = g(Subset::FromMask(n, mask));
      if (cache[mask] < 0.0) {
        throw PreconditionError("weak ratio: f" +
                                Subset::FromMask(n, mask).ToString() +
                                " is negative");
      }
    }
    return cache[mask];
  };
  RatioReport r;
  r.witness_s = Subset(n);
  r.witness_t = Subset(n);
  for (uint64_t s : family) {
    const double fs = value(s);
    if (fs == 0.0) continue;
    for (uint64_t t : family) {
      const double ratio = value(s | t) / fs;
      if (ratio < r.ratio) {
        r.ratio = ratio;
        r.witness_s = Subset::FromMask(n, s);
        r.witness_t = Subset::FromMask(n, t);
      }
    }
  }
  r.eval_count = g.eval_count();
  return r;
}

SubmodularityReport CheckSubmodular(const SetFunctionOracle& f, int limit) {
  CheckLimit(f, limit, "CheckSubmodular");
  const int n = f.n();
  const uint64_t count = uint64_t{1} << n;
  std::vector<double> v(count);
  double scale = 1.0;
  for (uint64_t mask = 0; mask < count; ++mask) {
    v[mask] = f(Subset::FromMask(n, mask));
    scale = std::max(scale, std::abs(v[mask]));
  }
  const double tol = 1e-9 * scale;
  SubmodularityReport rep;
  for (uint64_t t = 0; t < count; ++t) {
    for (int u = 0; u < n; ++u) {
      const uint64_t bit = uint64_t{1} << u;
      if (t & bit) continue;
      const double gain_t = v[t | bit] - v[t];
      // All submasks s of t, including t itself and 0.
      for (uint64_t s = t;; s = (s - 1) & t) {
        const double gain_s = v[s | bit] - v[s];
        if (gain_s < gain_t - tol) {
          rep.submodular = false;
          rep.s = Subset::FromMask(n, s);
          rep.t = Subset::FromMask(n, t);
          rep.element = u;
          rep.violation = gain_t - gain_s;
          return rep;
        }
        if (s == 0) break;
      }
    }
  }
  return rep;
}

double MovieRatioBound(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw PreconditionError("lambda must lie in [0, 1]");
  }
  return lambda <= 0.5 ? 1.0 : 2.0 * (1.0 - lambda);
}

double ImageWeakRatioBound(int k, int n) {
  if (k < 1 || k > n) throw PreconditionError("need 1 <= k <= n");
  return std::max(0.0, 1.0 - 2.0 * k / n);
}

double QuadraticRatioBound(double alpha, double beta, bool min_nonneg) {
  if (!(beta > 0.0 && beta < 0.5)) {
    throw PreconditionError("beta must lie in (0, 0.5)");
  }
  if (!(alpha > 0.0)) throw PreconditionError("alpha must be positive");
  const double base = 1.0 - 2.0 * beta;
  return min_nonneg ? base : base * alpha / (1.0 + alpha);
}

GridRatioReport GridMonotonicityRatio(
    const std::function<double(std::span<const double>)>& value,
    std::span<const double> upper, int per_axis) {
  const int n = static_cast<int>(upper.size());
  if (n < 1 || per_axis < 2) {
    throw PreconditionError("grid ratio needs n >= 1 and >= 2 points per axis");
  }
  double total = 1.0;
  for (int j = 0; j < n; ++j) total *= per_axis;
  if (total > 2e7) throw SizeLimitError("grid ratio: too many grid points");
  const int64_t points = static_cast<int64_t>(total);
  std::vector<int64_t> stride(n);
  int64_t acc = 1;
  for (int j = 0; j < n; ++j) {
    stride[j] = acc;
    acc *= per_axis;
  }
  auto point = [&](int64_t idx) {
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j) {
      const int c = static_cast<int>((idx / stride[j]) % per_axis);
      x[j] = upper[j] * c / (per_axis - 1);
    }
    return x;
  };
  std::vector<double> fv(points);
  for (int64_t idx = 0; idx < points; ++idx) fv[idx] = value(point(idx));
  // Upper-set minimum: suffix min along each axis in turn.
  std::vector<double> low(fv);
  std::vector<int64_t> arg(points);
  for (int64_t idx = 0; idx < points; ++idx) arg[idx] = idx;
  for (int j = 0; j < n; ++j) {
    for (int64_t idx = points; idx-- > 0;) {
      const int c = static_cast<int>((idx / stride[j]) % per_axis);
      if (c + 1 == per_axis) continue;
      const int64_t up = idx + stride[j];
      if (low[up] < low[idx]) {
        low[idx] = low[up];
        arg[idx] = arg[up];
      }
    }
  }
  GridRatioReport rep;
  rep.points = points;
  int64_t best = 0;
  for (int64_t idx = 0; idx < points; ++idx) {
    const double r = ValueRatio(low[idx], fv[idx]);
    if (r < rep.ratio) {
      rep.ratio = r;
      best = idx;
    }
  }
  rep.x = point(best);
  rep.y = point(arg[best]);
  return rep;
}

std::string RatioReportCsvHeader() {
  return CsvRow()
      .Add("ratio")
      .Add("witness_s")
      .Add("witness_t")
      .Add("eval_count")
      .ToString();
}

std::string RatioReportCsvRow(const RatioReport& r) {
  return CsvRow()
      .Add(r.ratio)
      .Add(r.witness_s.ToString())
      .Add(r.witness_t.ToString())
      .Add(r.eval_count)
      .ToString();
}

}  // namespace monoratio
