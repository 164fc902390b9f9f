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

// Standard set functions used by fixtures, tests and the synthetic CLI
// objectives.

#ifndef MONORATIO_SET_FUNCTIONS_H_
#define MONORATIO_SET_FUNCTIONS_H_

#include <vector>

#include "monoratio/oracle.h"

namespace monoratio {

struct WeightedEdge {
  int from;
  int to;
  double weight;
};

// f(S) = sum_{u in S} w_u.
SetFunctionOracle ModularFunction(std::vector<double> weights);

SetFunctionOracle ConstantFunction(int n, double value);

// f(S) = |S|^2 (supermodular; used as a negative control).
SetFunctionOracle SquaredCardinality(int n);

// f(S) = total weight of universe points covered by the sets indexed by S.
// covers[u] lists the universe points covered by element u.
SetFunctionOracle CoverageFunction(std::vector<std::vector<int>> covers,
                                   std::vector<double> point_weights);

// f(S) = total weight of edges leaving S.
SetFunctionOracle DirectedCutFunction(int n, std::vector<WeightedEdge> edges);

// f(S) = total weight of edges with exactly one endpoint in S.
SetFunctionOracle UndirectedCutFunction(int n, std::vector<WeightedEdge> edges);

// Two-element f(S) = m * [S != {}] + (1 - m) * (|S| mod 2). Its monotonicity
// ratio is exactly m and it drives the 1/(2 - m) symmetry gap.
SetFunctionOracle SymmetricPairFunction(double m);

// Pointwise combinations (nonnegative coefficients preserve submodularity).
SetFunctionOracle SumFunction(const SetFunctionOracle& f,
                              const SetFunctionOracle& g);
SetFunctionOracle ScaledFunction(const SetFunctionOracle& f, double c);
SetFunctionOracle ShiftedFunction(const SetFunctionOracle& f, double c);

}  // namespace monoratio

#endif  // MONORATIO_SET_FUNCTIONS_H_
