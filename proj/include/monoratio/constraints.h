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

// Cardinality and matroid constraints, plus linear maximization over
// down-closed polytopes {x >= 0 : Ax <= b, x <= u}.

#ifndef MONORATIO_CONSTRAINTS_H_
#define MONORATIO_CONSTRAINTS_H_

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monoratio/subset.h"

namespace monoratio {

class CardinalityConstraint {
 public:
  CardinalityConstraint(int n, int k);
  int n() const { return n_; }
  int k() const { return k_; }
  bool IsFeasible(const Subset& s) const { return s.Count() <= k_; }

 private:
  int n_;
  int k_;
};

struct PartitionBlock {
  std::string name;
  std::vector<int> elements;
  int capacity = 0;
};

class MatroidConstraint {
 public:
  enum class Kind { kUniform, kPartition, kOracle };
  using IndependenceOracle = std::function<bool(const Subset&)>;

  // Sets of size <= k.
  static MatroidConstraint Uniform(int n, int k);
  // At most `capacity` elements from each block. Elements outside every block
  // can never be selected. Blocks must be disjoint.
  static MatroidConstraint Partition(int n, std::vector<PartitionBlock> blocks);
  // Arbitrary independence test; it must describe a matroid. The rank is
  // computed by greedy augmentation in id order.
  static MatroidConstraint FromOracle(int n, IndependenceOracle independent);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<PartitionBlock>& blocks() const { return blocks_; }
  // Block index of `u` for the partition kind, -1 otherwise.
  int block_of(int u) const;

  bool IsIndependent(const Subset& s) const;
  bool IsBase(const Subset& s) const {
    return s.Count() == rank_ && IsIndependent(s);
  }

  // The matroid over N + D (`count` extra ids n..n+count-1) in which S is
  // independent iff S \ D is independent here and |S| <= rank. Dummies make
  // an all-dummy base available whenever count >= rank.
  MatroidConstraint WithDummies(int count) const;

 private:
  MatroidConstraint() = default;

  Kind kind_ = Kind::kUniform;
  int n_ = 0;
  int rank_ = 0;
  std::vector<PartitionBlock> blocks_;
  std::vector<int> block_index_;
  std::shared_ptr<const IndependenceOracle> oracle_;
};

bool IsIndependent(const MatroidConstraint& m, const Subset& s);

// A base avoiding `exclude` of maximum total weight, built greedily by
// descending weight (ties by smaller id). Throws InfeasibleError when no such
// base exists.
Subset MaxWeightBaseDisjoint(const MatroidConstraint& m,
                             std::span<const double> weights,
                             const Subset& exclude);

// Max-weight independent set restricted to strictly positive weights; the
// exact linear maximizer over the matroid polytope.
Subset MaxWeightIndependentSet(const MatroidConstraint& m,
                               std::span<const double> weights);

// For disjoint bases S and B, a bijection u -> g(u) from B onto S such that
// S - g(u) + u is independent for every u. Pairs are sorted by u. Uniform and
// partition matroids pair id-sorted elements (within blocks); other matroids
// use a perfect matching on the exchange graph.
std::vector<std::pair<int, int>> ExchangeMap(const MatroidConstraint& m,
                                             const Subset& s, const Subset& b);

// Parses lines of the form `name: id,id,... capacity=c`. Blank lines and
// lines starting with '#' are ignored. n = 0 infers the ground set size from
// the largest id.
MatroidConstraint ParsePartitionSpec(std::string_view text, int n = 0);
MatroidConstraint LoadPartitionSpec(const std::string& path, int n = 0);
std::string FormatPartitionSpec(const MatroidConstraint& m);

// {x in R^n : x >= 0, Ax <= b, x <= u} with A, b, u nonnegative.
struct DownClosedPolytope {
  std::vector<double> upper;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;

  int n() const { return static_cast<int>(upper.size()); }
  // Throws PreconditionError on negative or ragged data.
  void Validate() const;
  bool Contains(std::span<const double> x, double tol = 1e-9) const;

  static DownClosedPolytope Box(std::vector<double> upper);
  // The matroid polytope of the uniform matroid: sum x <= k, 0 <= x <= 1.
  static DownClosedPolytope UniformMatroid(int n, int k);
};

struct LpSolution {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
};

// An optimal vertex of max{w.x : x in P}. Coordinates with w_j <= 0 are fixed
// at 0 (valid by down-closedness); the rest go through a dense simplex with
// Bland's rule. Throws LpError with the pivot trace on numerical failure.
LpSolution LinearMaximizePolytope(const DownClosedPolytope& p,
                                  std::span<const double> w);

}  // namespace monoratio

#endif  // MONORATIO_CONSTRAINTS_H_
