// Copyright 2026 The noisy-qaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nqaoa/stats.hpp"

#include <cmath>

#include "nqaoa/error.hpp"

namespace nqaoa {

double ci_cost(std::size_t shots, const WeightedGraph& graph) {
  if (shots == 0) throw ValidationError("shot count must be at least 1");
  return 2.0 * std::sqrt(graph.total_squared_weight() / static_cast<double>(shots));
}

GradientIntervals ci_gradient(std::size_t shots, const WeightedGraph& graph) {
  return ci_gradient(shots, graph, graph.num_nodes());
}

GradientIntervals ci_gradient(std::size_t shots, const WeightedGraph& graph, std::size_t qubits) {
  if (shots == 0) throw ValidationError("shot count must be at least 1");
  const double m_shots = static_cast<double>(shots);
  const double c2 = graph.total_squared_weight();
  return {2.0 * std::sqrt(2.0 / m_shots) * c2,
          2.0 * std::sqrt(2.0 * static_cast<double>(qubits) * c2 / m_shots)};
}

}  // namespace nqaoa
