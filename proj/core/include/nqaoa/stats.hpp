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

#pragma once

#include <cstddef>

#include "nqaoa/maxcut.hpp"

namespace nqaoa {

/// Worst-case interval length for a measured cost with `shots` runs per
/// term: 2 sqrt(sum C_ij^2 / M).
double ci_cost(std::size_t shots, const WeightedGraph& graph);

struct GradientIntervals {
  double gamma;  ///< 2 sqrt(2 / M) * sum C_ij^2
  double beta;   ///< 2 sqrt(2 m sum C_ij^2 / M)
};

/// Worst-case interval lengths for shift-rule derivatives, evaluated as
/// printed (the gamma form keeps the weight sum outside the square root).
GradientIntervals ci_gradient(std::size_t shots, const WeightedGraph& graph);

/// Same with an explicit qubit count m.
GradientIntervals ci_gradient(std::size_t shots, const WeightedGraph& graph, std::size_t qubits);

}  // namespace nqaoa
