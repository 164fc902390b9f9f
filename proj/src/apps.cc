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

#include "monoratio/apps.h"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "monoratio/csv.h"
#include "monoratio/errors.h"

namespace monoratio {
namespace {

using json = nlohmann::json;

double ParseCell(const std::string& cell, int line) {
  if (cell.empty()) throw ParseError("empty numeric cell", line);
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size() || errno == ERANGE) {
    throw ParseError("non-numeric cell '" + cell + "'", line);
  }
  if (!std::isfinite(v))
    throw ParseError("non-finite cell '" + cell + "'", line);
  return v;
}

std::string StripCr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

double Quad(const Matrix& H, std::span<const double> h,
            std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  double v = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += H[i][j] * x[j];
    v += 0.5 * x[i] * row + h[i] * x[i];
  }
  return v;
}

std::vector<double> QuadGradient(const Matrix& H, std::span<const double> h,
                                 std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  std::vector<double> g(h.begin(), h.end());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g[i] += H[i][j] * x[j];
  }
  return g;
}

// Exact coordinate line searches until a sweep stops improving.
void Polish(const Matrix& H, std::span<const double> h,
            std::span<const double> u, std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<double> g = QuadGradient(H, h, x);
  for (int sweep = 0; sweep < 200; ++sweep) {
    double gain = 0.0;
    for (int j = 0; j < n; ++j) {
      const double a = H[j][j];
      // q(x + t e_j) - q(x) = g_j t + a t^2 / 2 for x_j + t in [0, u_j].
      auto change = [&](double t) { return g[j] * t + 0.5 * a * t * t; };
      double best_t = 0.0;
      double best = 0.0;
      std::vector<double> cands = {-x[j], u[j] - x[j]};
      if (a > 0) cands.push_back(std::clamp(-g[j] / a, -x[j], u[j] - x[j]));
      for (double t : cands) {
        if (change(t) < best) {
          best = change(t);
          best_t = t;
        }
      }
      if (best_t != 0.0) {
        x[j] += best_t;
        for (int i = 0; i < n; ++i) g[i] += H[i][j] * best_t;
        gain -= best;
      }
    }
    if (gain <= 1e-15) break;
  }
}

void CheckSquare(const Matrix& m, int n, const char* what) {
  if (static_cast<int>(m.size()) != n) {
    throw PreconditionError(std::string(what) + " has the wrong size");
  }
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) {
      throw PreconditionError(std::string(what) + " is not square");
    }
  }
}

}  // namespace

FeatureMatrix ParseFeaturesCsv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  size_t width = 0;
  FeatureMatrix out;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripCr(line);
    if (line.empty()) continue;
    const std::vector<std::string> cells = SplitCsvLine(line);
    if (!header) {
      if (cells.empty() || cells[0] != "label") {
        throw ParseError("header must start with 'label'", line_no);
      }
      if (cells.size() < 2) {
        throw ParseError("at least one feature column is required", line_no);
      }
      width = cells.size();
      header = true;
      continue;
    }
    if (cells.size() != width) {
      throw ParseError("expected " + std::to_string(width) + " cells, got " +
                           std::to_string(cells.size()),
                       line_no);
    }
    out.labels.push_back(cells[0]);
    std::vector<double> row;
    for (size_t i = 1; i < cells.size(); ++i) {
      row.push_back(ParseCell(cells[i], line_no));
    }
    out.rows.push_back(std::move(row));
  }
  if (!header) throw ParseError("missing header", std::max(1, line_no));
  if (out.rows.empty()) throw ParseError("no data rows", std::max(1, line_no));
  return out;
}

FeatureMatrix LoadFeaturesCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open feature file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseFeaturesCsv(buf.str());
}

std::string FeaturesToCsv(const FeatureMatrix& x) {
  std::ostringstream out;
  CsvRow header;
  header.Add("label");
  for (int j = 0; j < x.d(); ++j) header.Add("f" + std::to_string(j + 1));
  out << header;
  for (int i = 0; i < x.n(); ++i) {
    CsvRow row;
    row.Add(x.labels[i]);
    for (double v : x.rows[i]) row.Add(v);
    out << row;
  }
  return out.str();
}

Matrix InnerProductSimilarity(const FeatureMatrix& x, bool clip_negative) {
  const int n = x.n();
  Matrix s(n, std::vector<double>(n, 0.0));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      double dot = 0.0;
      for (int j = 0; j < x.d(); ++j) dot += x.rows[a][j] * x.rows[b][j];
      if (dot < 0.0) {
        if (!clip_negative) {
          throw ValidationError(
              "negative inner product between items " + std::to_string(a) +
              " and " + std::to_string(b) +
              "; nonnegative features are required (or enable clipping)");
        }
        dot = 0.0;
      }
      s[a][b] = s[b][a] = dot;
    }
  }
  return s;
}

void ValidateSimilarity(const Matrix& s) {
  const int n = static_cast<int>(s.size());
  for (const auto& row : s) {
    if (static_cast<int>(row.size()) != n) {
      throw ValidationError("similarity matrix is not square");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double v = s[a][b];
      if (!std::isfinite(v) || v < 0.0) {
        throw ValidationError("similarity entries must be finite and >= 0");
      }
      if (std::abs(v - s[b][a]) > 1e-12 * std::max(1.0, std::abs(v))) {
        throw ValidationError("similarity matrix is not symmetric");
      }
    }
  }
}

SetFunctionOracle MovieObjective(Matrix s, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw PreconditionError("lambda must lie in [0, 1]");
  }
  ValidateSimilarity(s);
  const int n = static_cast<int>(s.size());
  std::vector<double> coverage(n, 0.0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) coverage[v] += s[u][v];
  }
  return SetFunctionOracle(n, [s = std::move(s), coverage = std::move(coverage),
                               lambda](const Subset& set) {
    const std::vector<int> e = set.Elements();
    double cover = 0.0;
    double diversity = 0.0;
    for (int v : e) {
      cover += coverage[v];
      for (int w : e) diversity += s[v][w];
    }
    return cover - lambda * diversity;
  });
}

SetFunctionOracle ImageObjective(Matrix s) {
  ValidateSimilarity(s);
  const int n = static_cast<int>(s.size());
  return SetFunctionOracle(n, [s = std::move(s), n](const Subset& set) {
    const std::vector<int> e = set.Elements();
    if (e.empty()) return 0.0;
    double rep = 0.0;
    for (int u = 0; u < n; ++u) {
      double best = 0.0;
      for (int v : e) best = std::max(best, s[u][v]);
      rep += best;
    }
    double diversity = 0.0;
    for (int v : e) {
      for (int w : e) diversity += s[v][w];
    }
    return rep - diversity / n;
  });
}

FeatureMatrix SyntheticMovieFeatures(int n, int d, uint64_t seed) {
  if (n < 1 || d < 1) throw PreconditionError("need n >= 1 and d >= 1");
  Rng rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_int_distribution<int> genre(0, d - 1);
  std::uniform_int_distribution<int> count(1, std::min(3, d));
  FeatureMatrix out;
  for (int i = 0; i < n; ++i) {
    std::vector<double> row(d);
    for (double& v : row) v = 0.05 * unif(rng);
    const int picks = count(rng);
    for (int p = 0; p < picks; ++p) row[genre(rng)] += 0.2 + 0.8 * unif(rng);
    out.labels.push_back("movie" + std::to_string(i));
    out.rows.push_back(std::move(row));
  }
  return out;
}

FeatureMatrix SyntheticImageFeatures(int clusters, int per_cluster, int d,
                                     uint64_t seed) {
  if (clusters < 1 || per_cluster < 1 || d < 1) {
    throw PreconditionError("need clusters, per_cluster, d >= 1");
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  FeatureMatrix out;
  for (int c = 0; c < clusters; ++c) {
    // Sparse centers keep the clusters apart.
    std::vector<double> center(d, 0.0);
    center[std::uniform_int_distribution<int>(0, d - 1)(rng)] = 1.0;
    for (double& v : center) {
      if (unif(rng) < 0.3) v = std::max(v, unif(rng));
    }
    for (int i = 0; i < per_cluster; ++i) {
      std::vector<double> row(center);
      double norm = 0.0;
      for (double& v : row) {
        v += 0.3 * unif(rng);
        norm += v * v;
      }
      norm = std::sqrt(norm);
      for (double& v : row) v /= norm;
      out.labels.push_back("c" + std::to_string(c) + "_" + std::to_string(i));
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

BoxQpResult MinBoxQuadratic(const Matrix& H, std::span<const double> h,
                            std::span<const double> u, uint64_t seed,
                            int starts) {
  const int n = static_cast<int>(u.size());
  if (n < 1) throw PreconditionError("box QP needs n >= 1");
  if (n > 16) throw SizeLimitError("box QP minimizer supports n <= 16");
  CheckSquare(H, n, "H");
  if (static_cast<int>(h.size()) != n)
    throw PreconditionError("h size mismatch");
  for (double v : u) {
    if (!(v >= 0.0)) throw PreconditionError("box bounds must be >= 0");
  }
  BoxQpResult best;
  best.x.assign(n, 0.0);
  best.value = Quad(H, h, best.x);
  auto consider = [&](std::vector<double> x) {
    Polish(H, h, u, x);
    const double v = Quad(H, h, x);
    if (v < best.value) {
      best.value = v;
      best.x = std::move(x);
    }
  };
  // Vertices. The best one is polished; concave directions end there anyway.
  std::vector<double> x(n);
  std::vector<double> best_vertex(n, 0.0);
  double best_vertex_value = best.value;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    for (int j = 0; j < n; ++j) x[j] = (mask >> j) & 1 ? u[j] : 0.0;
    const double v = Quad(H, h, x);
    if (v < best_vertex_value) {
      best_vertex_value = v;
      best_vertex = x;
    }
  }
  consider(best_vertex);
  // Multistart projected gradient descent.
  const double lip = std::max(SpectralNormEstimate(H) * 1.01, 1e-12);
  Rng rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int s = 0; s < starts; ++s) {
    for (int j = 0; j < n; ++j) x[j] = u[j] * unif(rng);
    for (int it = 0; it < 300; ++it) {
      const std::vector<double> g = QuadGradient(H, h, x);
      double moved = 0.0;
      for (int j = 0; j < n; ++j) {
        const double next = std::clamp(x[j] - g[j] / lip, 0.0, u[j]);
        moved = std::max(moved, std::abs(next - x[j]));
        x[j] = next;
      }
      if (moved < 1e-13) break;
    }
    consider(x);
  }
  return best;
}

double SpectralNormEstimate(const Matrix& H, int iterations) {
  const int n = static_cast<int>(H.size());
  if (n == 0) return 0.0;
  CheckSquare(H, n, "H");
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = 1.0 + 0.01 * i;
  double estimate = 0.0;
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> w(n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) w[i] += H[i][j] * v[j];
    }
    double norm_w = 0.0;
    double norm_v = 0.0;
    for (int i = 0; i < n; ++i) {
      norm_w += w[i] * w[i];
      norm_v += v[i] * v[i];
    }
    norm_w = std::sqrt(norm_w);
    norm_v = std::sqrt(norm_v);
    if (norm_w == 0.0) return estimate;
    estimate = std::max(estimate, norm_w / norm_v);
    for (int i = 0; i < n; ++i) v[i] = w[i] / norm_w;
  }
  return estimate;
}

double QuadraticInstance::Value(std::span<const double> x) const {
  return Quad(H, h, x) + c;
}

std::vector<double> QuadraticInstance::Gradient(
    std::span<const double> x) const {
  return QuadGradient(H, h, x);
}

DownClosedPolytope QuadraticInstance::Polytope() const {
  DownClosedPolytope p;
  p.upper = u;
  p.rows = A;
  p.rhs = b;
  return p;
}

ContinuousObjective QuadraticInstance::Objective() const {
  return {[q = *this](std::span<const double> x) { return q.Value(x); },
          [q = *this](std::span<const double> x) { return q.Gradient(x); }};
}

QuadraticInstance GenerateQuadraticInstance(int n, double v, double beta,
                                            double alpha, uint64_t seed) {
  if (n < 1) throw PreconditionError("quadratic instance needs n >= 1");
  if (!(beta > 0.0 && beta < 0.5)) {
    throw PreconditionError("beta must lie in (0, 0.5)");
  }
  if (!(alpha > 0.0)) throw PreconditionError("alpha must be positive");
  if (!(v > 0.0)) throw PreconditionError("v must be positive");
  QuadraticInstance q;
  q.n = n;
  q.alpha = alpha;
  q.beta = beta;
  q.v = v;
  q.seed = seed;
  Rng rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  q.H.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) q.H[i][j] = q.H[j][i] = -unif(rng);
  }
  q.A.assign(n, std::vector<double>(n, 0.0));
  for (auto& row : q.A) {
    for (double& a : row) a = v + unif(rng);
  }
  q.b.assign(n, 1.0);
  q.u.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    double bound = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) bound = std::min(bound, q.b[i] / q.A[i][j]);
    q.u[j] = bound;
  }
  q.h.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) q.h[j] -= beta * q.H[i][j] * q.u[i];
  }
  q.M = MinBoxQuadratic(q.H, q.h, q.u, seed).value;
  q.c = -q.M + alpha * std::abs(q.M);
  q.L = 1.01 * SpectralNormEstimate(q.H);
  double d2 = 0.0;
  for (double x : q.u) d2 += x * x;
  q.D = std::sqrt(d2);
  return q;
}

std::string QuadraticInstanceToJson(const QuadraticInstance& q) {
  json j;
  j["n"] = q.n;
  j["H"] = q.H;
  j["A"] = q.A;
  j["b"] = q.b;
  j["u"] = q.u;
  j["h"] = q.h;
  j["c"] = q.c;
  j["alpha"] = q.alpha;
  j["beta"] = q.beta;
  j["v"] = q.v;
  j["seed"] = q.seed;
  j["M"] = q.M;
  j["L"] = q.L;
  j["D"] = q.D;
  return j.dump(2);
}

QuadraticInstance QuadraticInstanceFromJson(std::string_view text) {
  try {
    const json j = json::parse(text);
    QuadraticInstance q;
    q.n = j.at("n").get<int>();
    q.H = j.at("H").get<Matrix>();
    q.A = j.at("A").get<Matrix>();
    q.b = j.at("b").get<std::vector<double>>();
    q.u = j.at("u").get<std::vector<double>>();
    q.h = j.at("h").get<std::vector<double>>();
    q.c = j.at("c").get<double>();
    q.alpha = j.at("alpha").get<double>();
    q.beta = j.at("beta").get<double>();
    q.v = j.value("v", 0.0);
    q.seed = j.at("seed").get<uint64_t>();
    q.M = j.value("M", 0.0);
    q.L = j.value("L", 0.0);
    q.D = j.value("D", 0.0);
    if (static_cast<int>(q.H.size()) != q.n ||
        static_cast<int>(q.u.size()) != q.n ||
        static_cast<int>(q.h.size()) != q.n || q.A.size() != q.b.size()) {
      throw ParseError("inconsistent quadratic instance dimensions", 1);
    }
    CheckSquare(q.H, q.n, "H");
    return q;
  } catch (const json::parse_error& e) {
    const size_t upto = std::min(e.byte, text.size());
    const int line = 1 + static_cast<int>(std::count(
                             text.begin(), text.begin() + upto, '\n'));
    throw ParseError(e.what(), line);
  } catch (const json::exception& e) {
    throw ParseError(e.what(), 1);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), 1);
  }
}

}  // namespace monoratio
