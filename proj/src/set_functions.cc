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

#include "monoratio/set_functions.h"

#include <algorithm>

#include "monoratio/errors.h"

namespace monoratio {

SetFunctionOracle ModularFunction(std::vector<double> weights) {
  const int n = static_cast<int>(weights.size());
  return SetFunctionOracle(n, [w = std::move(weights)](const Subset& s) {
    double total = 0.0;
    s.ForEach([&](int u) { total += w[u]; });
    return total;
  });
}

SetFunctionOracle ConstantFunction(int n, double value) {
  return SetFunctionOracle(n, [value](const Subset&) { return value; });
}

SetFunctionOracle SquaredCardinality(int n) {
  return SetFunctionOracle(n, [](const Subset& s) {
    const double c = s.Count();
    return c * c;
  });
}

SetFunctionOracle CoverageFunction(std::vector<std::vector<int>> covers,
                                   std::vector<double> point_weights) {
  const int n = static_cast<int>(covers.size());
  const int universe = static_cast<int>(point_weights.size());
  for (const auto& c : covers) {
    for (int p : c) {
      if (p < 0 || p >= universe) {
        throw PreconditionError("CoverageFunction: point id out of range");
      }
    }
  }
  return SetFunctionOracle(
      n, [covers = std::move(covers), w = std::move(point_weights),
          universe](const Subset& s) {
        std::vector<char> hit(universe, 0);
        double total = 0.0;
        s.ForEach([&](int u) {
          for (int p : covers[u]) {
            if (!hit[p]) {
              hit[p] = 1;
              total += w[p];
            }
          }
        });
        return total;
      });
}

SetFunctionOracle DirectedCutFunction(int n, std::vector<WeightedEdge> edges) {
  return SetFunctionOracle(n, [e = std::move(edges)](const Subset& s) {
    double total = 0.0;
    for (const auto& edge : e) {
      if (s.Contains(edge.from) && !s.Contains(edge.to)) total += edge.weight;
    }
    return total;
  });
}

SetFunctionOracle UndirectedCutFunction(int n,
                                        std::vector<WeightedEdge> edges) {
  return SetFunctionOracle(n, [e = std::move(edges)](const Subset& s) {
    double total = 0.0;
    for (const auto& edge : e) {
      if (s.Contains(edge.from) != s.Contains(edge.to)) total += edge.weight;
    }
    return total;
  });
}

SetFunctionOracle SymmetricPairFunction(double m) {
  if (!(m >= 0.0 && m <= 1.0)) {
    throw PreconditionError("SymmetricPairFunction: m outside [0,1]");
  }
  return SetFunctionOracle(2, [m](const Subset& s) {
    const int c = s.Count();
    return m * (c > 0 ? 1.0 : 0.0) + (1.0 - m) * (c % 2);
  });
}

SetFunctionOracle SumFunction(const SetFunctionOracle& f,
                              const SetFunctionOracle& g) {
  if (f.n() != g.n()) throw PreconditionError("SumFunction: size mismatch");
  return SetFunctionOracle(
      f.ground(),
      [f = f.Fork(), g = g.Fork()](const Subset& s) { return f(s) + g(s); });
}

SetFunctionOracle ScaledFunction(const SetFunctionOracle& f, double c) {
  return SetFunctionOracle(
      f.ground(), [f = f.Fork(), c](const Subset& s) { return c * f(s); });
}

SetFunctionOracle ShiftedFunction(const SetFunctionOracle& f, double c) {
  return SetFunctionOracle(
      f.ground(), [f = f.Fork(), c](const Subset& s) { return f(s) + c; });
}

}  // namespace monoratio
