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

#include "monoratio/constraints.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "monoratio/csv.h"
#include "monoratio/errors.h"

namespace monoratio {
namespace {

std::vector<int> OrderByWeight(std::span<const double> w) {
  std::vector<int> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return w[a] > w[b]; });
  return order;
}

void CheckWeights(const MatroidConstraint& m, std::span<const double> w) {
  if (static_cast<int>(w.size()) != m.n()) {
    throw PreconditionError("weight vector size does not match ground set");
  }
}

// Kuhn's augmenting-path matching: left vertex i may take right vertex j when
// adj[i][j]. Returns match_of_left or empty when no perfect matching exists.
std::vector<int> PerfectMatching(const std::vector<std::vector<char>>& adj) {
  const int k = static_cast<int>(adj.size());
  std::vector<int> right_owner(k, -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int i) {
    for (int j = 0; j < k; ++j) {
      if (!adj[i][j] || seen[j]) continue;
      seen[j] = 1;
      if (right_owner[j] < 0 || augment(right_owner[j])) {
        right_owner[j] = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < k; ++i) {
    seen.assign(k, 0);
    if (!augment(i)) return {};
  }
  std::vector<int> left(k, -1);
  for (int j = 0; j < k; ++j) left[right_owner[j]] = j;
  return left;
}

std::string Trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int ParseInt(const std::string& text, int line) {
  if (text.empty()) throw ParseError("expected an integer", line);
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(text, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + text + "'", line);
  }
  if (pos != text.size()) throw ParseError("bad integer '" + text + "'", line);
  return value;
}

}  // namespace

CardinalityConstraint::CardinalityConstraint(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 0 || k > n) {
    throw PreconditionError("cardinality constraint requires 0 <= k <= n");
  }
}

MatroidConstraint MatroidConstraint::Uniform(int n, int k) {
  if (n < 1 || k < 0 || k > n) {
    throw PreconditionError("uniform matroid requires 0 <= k <= n");
  }
  MatroidConstraint m;
  m.kind_ = Kind::kUniform;
  m.n_ = n;
  m.rank_ = k;
  return m;
}

MatroidConstraint MatroidConstraint::Partition(
    int n, std::vector<PartitionBlock> blocks) {
  if (n < 1) throw PreconditionError("partition matroid requires n >= 1");
  MatroidConstraint m;
  m.kind_ = Kind::kPartition;
  m.n_ = n;
  m.block_index_.assign(n, -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    auto& block = blocks[b];
    if (block.capacity < 0) {
      throw PreconditionError("block '" + block.name +
                              "' has negative capacity");
    }
    std::sort(block.elements.begin(), block.elements.end());
    for (int u : block.elements) {
      if (u < 0 || u >= n) {
        throw PreconditionError("block '" + block.name + "' has id " +
                                std::to_string(u) + " outside the ground set");
      }
      if (m.block_index_[u] >= 0) {
        throw PreconditionError("element " + std::to_string(u) +
                                " appears in more than one block");
      }
      m.block_index_[u] = static_cast<int>(b);
    }
    m.rank_ +=
        std::min<int>(block.capacity, static_cast<int>(block.elements.size()));
  }
  m.blocks_ = std::move(blocks);
  return m;
}

MatroidConstraint MatroidConstraint::FromOracle(
    int n, IndependenceOracle independent) {
  if (n < 1) throw PreconditionError("matroid requires n >= 1");
  MatroidConstraint m;
  m.kind_ = Kind::kOracle;
  m.n_ = n;
  m.oracle_ =
      std::make_shared<const IndependenceOracle>(std::move(independent));
  Subset s(n);
  for (int u = 0; u < n; ++u) {
    if ((*m.oracle_)(s.With(u))) s.Insert(u);
  }
  m.rank_ = s.Count();
  return m;
}

int MatroidConstraint::block_of(int u) const {
  if (kind_ != Kind::kPartition || u < 0 || u >= n_) return -1;
  return block_index_[u];
}

bool MatroidConstraint::IsIndependent(const Subset& s) const {
  if (s.universe_size() != n_) {
    throw PreconditionError("subset universe does not match matroid");
  }
  switch (kind_) {
    case Kind::kUniform:
      return s.Count() <= rank_;
    case Kind::kPartition: {
      std::vector<int> used(blocks_.size(), 0);
      bool ok = true;
      s.ForEach([&](int u) {
        const int b = block_index_[u];
        if (b < 0 || ++used[b] > blocks_[b].capacity) ok = false;
      });
      return ok;
    }
    case Kind::kOracle:
      return (*oracle_)(s);
  }
  return false;
}

MatroidConstraint MatroidConstraint::WithDummies(int count) const {
  if (count < 0) throw PreconditionError("dummy count must be nonnegative");
  auto base = std::make_shared<const MatroidConstraint>(*this);
  const int n = n_;
  const int r = rank_;
  return FromOracle(n + count, [base, n, r](const Subset& s) {
    return s.Count() <= r && base->IsIndependent(s.Resized(n));
  });
}

bool IsIndependent(const MatroidConstraint& m, const Subset& s) {
  return m.IsIndependent(s);
}

Subset MaxWeightBaseDisjoint(const MatroidConstraint& m,
                             std::span<const double> weights,
                             const Subset& exclude) {
  CheckWeights(m, weights);
  Subset s(m.n());
  for (int u : OrderByWeight(weights)) {
    if (s.Count() == m.rank()) break;
    if (exclude.Contains(u)) continue;
    Subset t = s.With(u);
    if (m.IsIndependent(t)) s = std::move(t);
  }
  if (s.Count() != m.rank()) {
    throw InfeasibleError("no base avoids the excluded set " +
                          exclude.ToString());
  }
  return s;
}

Subset MaxWeightIndependentSet(const MatroidConstraint& m,
                               std::span<const double> weights) {
  CheckWeights(m, weights);
  Subset s(m.n());
  for (int u : OrderByWeight(weights)) {
    if (!(weights[u] > 0.0) || s.Count() == m.rank()) break;
    Subset t = s.With(u);
    if (m.IsIndependent(t)) s = std::move(t);
  }
  return s;
}

std::vector<std::pair<int, int>> ExchangeMap(const MatroidConstraint& m,
                                             const Subset& s, const Subset& b) {
  if (!m.IsBase(s) || !m.IsBase(b)) {
    throw PreconditionError("exchange map requires two bases");
  }
  if (!s.Intersection(b).Empty()) {
    throw PreconditionError("exchange map requires disjoint bases");
  }
  std::vector<std::pair<int, int>> out;
  const std::vector<int> se = s.Elements();
  const std::vector<int> be = b.Elements();
  switch (m.kind()) {
    case MatroidConstraint::Kind::kUniform:
      for (size_t i = 0; i < be.size(); ++i) out.emplace_back(be[i], se[i]);
      break;
    case MatroidConstraint::Kind::kPartition: {
      std::vector<std::vector<int>> s_by_block(m.blocks().size());
      for (int u : se) s_by_block[m.block_of(u)].push_back(u);
      std::vector<size_t> next(m.blocks().size(), 0);
      for (int u : be) {
        const int blk = m.block_of(u);
        out.emplace_back(u, s_by_block[blk][next[blk]++]);
      }
      break;
    }
    case MatroidConstraint::Kind::kOracle: {
      const int k = static_cast<int>(be.size());
      std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          adj[i][j] = m.IsIndependent(s.Without(se[j]).With(be[i]));
        }
      }
      const std::vector<int> match = PerfectMatching(adj);
      if (match.empty() && k > 0) {
        throw PreconditionError(
            "exchange graph has no perfect matching; oracle is not a matroid");
      }
      for (int i = 0; i < k; ++i) out.emplace_back(be[i], se[match[i]]);
      break;
    }
  }
  return out;
}

MatroidConstraint ParsePartitionSpec(std::string_view text, int n) {
  std::vector<PartitionBlock> blocks;
  int max_id = -1;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const size_t colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError("expected 'name: ids capacity=c'", line_no);
    }
    PartitionBlock block;
    block.name = Trim(std::string_view(line).substr(0, colon));
    if (block.name.empty()) throw ParseError("empty block name", line_no);
    std::string rest = line.substr(colon + 1);
    const size_t cap = rest.find("capacity=");
    if (cap == std::string::npos) {
      throw ParseError("missing capacity=", line_no);
    }
    block.capacity = ParseInt(Trim(rest.substr(cap + 9)), line_no);
    if (block.capacity < 0) throw ParseError("negative capacity", line_no);
    const std::string ids = Trim(rest.substr(0, cap));
    if (!ids.empty()) {
      for (const std::string& field : SplitCsvLine(ids)) {
        const int id = ParseInt(Trim(field), line_no);
        if (id < 0 || (n > 0 && id >= n)) {
          throw ParseError("id " + std::to_string(id) + " out of range",
                           line_no);
        }
        max_id = std::max(max_id, id);
        block.elements.push_back(id);
      }
    }
    blocks.push_back(std::move(block));
  }
  if (n <= 0) n = max_id + 1;
  if (n < 1) throw ParseError("partition spec lists no elements", line_no);
  try {
    return MatroidConstraint::Partition(n, std::move(blocks));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), line_no);
  }
}

MatroidConstraint LoadPartitionSpec(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open partition spec '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return ParsePartitionSpec(buf.str(), n);
}

std::string FormatPartitionSpec(const MatroidConstraint& m) {
  std::string out;
  for (const auto& block : m.blocks()) {
    out += block.name + ":";
    for (size_t i = 0; i < block.elements.size(); ++i) {
      out += (i == 0 ? " " : ",") + std::to_string(block.elements[i]);
    }
    out += " capacity=" + std::to_string(block.capacity) + "\n";
  }
  return out;
}

void DownClosedPolytope::Validate() const {
  const int n = this->n();
  if (n < 1) throw PreconditionError("polytope needs at least one coordinate");
  if (rows.size() != rhs.size()) {
    throw PreconditionError("polytope rows and rhs differ in length");
  }
  for (double v : upper) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw PreconditionError("polytope upper bounds must be finite and >= 0");
    }
  }
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != n) {
      throw PreconditionError("polytope row has the wrong width");
    }
    if (!(rhs[r] >= 0.0)) throw PreconditionError("polytope rhs must be >= 0");
    for (double a : rows[r]) {
      if (!(a >= 0.0)) throw PreconditionError("polytope rows must be >= 0");
    }
  }
}

bool DownClosedPolytope::Contains(std::span<const double> x, double tol) const {
  if (static_cast<int>(x.size()) != n()) return false;
  for (int j = 0; j < n(); ++j) {
    if (x[j] < -tol || x[j] > upper[j] + tol) return false;
  }
  for (size_t r = 0; r < rows.size(); ++r) {
    double lhs = 0.0;
    for (int j = 0; j < n(); ++j) lhs += rows[r][j] * x[j];
    if (lhs > rhs[r] + tol) return false;
  }
  return true;
}

DownClosedPolytope DownClosedPolytope::Box(std::vector<double> upper) {
  DownClosedPolytope p;
  p.upper = std::move(upper);
  p.Validate();
  return p;
}

DownClosedPolytope DownClosedPolytope::UniformMatroid(int n, int k) {
  DownClosedPolytope p;
  p.upper.assign(n, 1.0);
  p.rows.push_back(std::vector<double>(n, 1.0));
  p.rhs.push_back(k);
  p.Validate();
  return p;
}

LpSolution LinearMaximizePolytope(const DownClosedPolytope& p,
                                  std::span<const double> w) {
  p.Validate();
  const int n = p.n();
  if (static_cast<int>(w.size()) != n) {
    throw PreconditionError("LP weight vector has the wrong size");
  }
  constexpr double kEps = 1e-11;
  std::vector<int> cols;
  for (int j = 0; j < n; ++j) {
    if (w[j] > 0.0 && p.upper[j] > 0.0) cols.push_back(j);
  }
  LpSolution sol;
  sol.x.assign(n, 0.0);
  if (cols.empty()) return sol;

  // Constraint rows: original rows restricted to active columns, then one
  // box row per active column. All rhs >= 0, so the slack basis is feasible.
  const int nv = static_cast<int>(cols.size());
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (size_t r = 0; r < p.rows.size(); ++r) {
    std::vector<double> row(nv);
    bool any = false;
    for (int c = 0; c < nv; ++c) {
      row[c] = p.rows[r][cols[c]];
      any |= row[c] > 0.0;
    }
    if (any) {
      a.push_back(std::move(row));
      b.push_back(p.rhs[r]);
    }
  }
  for (int c = 0; c < nv; ++c) {
    std::vector<double> row(nv, 0.0);
    row[c] = 1.0;
    a.push_back(std::move(row));
    b.push_back(p.upper[cols[c]]);
  }
  const int mr = static_cast<int>(a.size());
  const int width = nv + mr;
  std::vector<std::vector<double>> t(mr, std::vector<double>(width + 1, 0.0));
  std::vector<int> basis(mr);
  for (int r = 0; r < mr; ++r) {
    for (int c = 0; c < nv; ++c) t[r][c] = a[r][c];
    t[r][nv + r] = 1.0;
    t[r][width] = b[r];
    basis[r] = nv + r;
  }
  std::vector<double> reduced(width + 1, 0.0);
  for (int c = 0; c < nv; ++c) reduced[c] = w[cols[c]];

  std::ostringstream trace;
  auto fail = [&](const std::string& why) {
    throw LpError("simplex failed: " + why + "\ntrace:\n" + trace.str());
  };
  const int max_iter = 50 * (width + 1);
  int iter = 0;
  while (true) {
    int enter = -1;
    for (int c = 0; c < width; ++c) {
      if (reduced[c] > kEps) {
        enter = c;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    double best = 0.0;
    for (int r = 0; r < mr; ++r) {
      if (t[r][enter] <= kEps) continue;
      const double ratio = t[r][width] / t[r][enter];
      if (leave < 0 || ratio < best - kEps ||
          (ratio <= best + kEps && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0)
      fail("unbounded direction on column " + std::to_string(enter));
    trace << "  iter " << iter << ": enter " << enter << " leave "
          << basis[leave] << " step " << FormatDouble(best) << " objective "
          << FormatDouble(-reduced[width]) << "\n";
    const double piv = t[leave][enter];
    for (double& v : t[leave]) v /= piv;
    for (int r = 0; r < mr; ++r) {
      if (r == leave || t[r][enter] == 0.0) continue;
      const double f = t[r][enter];
      for (int c = 0; c <= width; ++c) t[r][c] -= f * t[leave][c];
    }
    const double f = reduced[enter];
    for (int c = 0; c <= width; ++c) reduced[c] -= f * t[leave][c];
    basis[leave] = enter;
    if (!std::isfinite(reduced[width])) fail("non-finite objective");
    if (++iter > max_iter) fail("iteration limit reached");
  }
  sol.iterations = iter;
  for (int r = 0; r < mr; ++r) {
    if (basis[r] < nv) {
      const int j = cols[basis[r]];
      sol.x[j] = std::clamp(t[r][width], 0.0, p.upper[j]);
    }
  }
  for (int j = 0; j < n; ++j) sol.value += w[j] * sol.x[j];
  return sol;
}

}  // namespace monoratio
