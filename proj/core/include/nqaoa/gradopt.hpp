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
#include <cstdint>
#include <optional>
#include <vector>

#include "nqaoa/maxcut.hpp"
#include "nqaoa/noise.hpp"
#include "nqaoa/qaoa.hpp"
#include "nqaoa/rng.hpp"

namespace nqaoa {

enum class EvaluatorKind { ExactIdeal, ExactNoisy, Sampled };

/// How a cost value is obtained for a compiled circuit.
class Evaluator {
 public:
  static Evaluator ideal();
  static Evaluator exact_noisy(NoiseChannel channel);
  static Evaluator sampled(NoiseChannel channel, std::size_t shots, std::uint64_t seed);

  EvaluatorKind kind() const { return kind_; }
  const std::optional<NoiseChannel>& channel() const { return channel_; }
  std::size_t shots() const { return shots_; }
  std::uint64_t seed() const { return seed_; }

  /// True when the evaluator reduces to the noiseless state-vector path
  /// (ideal, or exact-noisy with a channel that is exactly the identity).
  bool is_noiseless_exact() const;

  /// Same evaluator drawing from the sub-stream `stream` of this seed.
  Evaluator substream(std::uint64_t stream) const;

  double cost(const GateSequence& circuit, const ProblemHamiltonian& h) const;

 private:
  Evaluator(EvaluatorKind kind, std::optional<NoiseChannel> channel, std::size_t shots,
            std::uint64_t seed)
      : kind_(kind), channel_(std::move(channel)), shots_(shots), seed_(seed) {}

  EvaluatorKind kind_;
  std::optional<NoiseChannel> channel_;
  std::size_t shots_;
  std::uint64_t seed_;
};

/// d f / d gamma_k and d f / d beta_k.
struct Gradient {
  std::vector<double> d_gamma;
  std::vector<double> d_beta;

  double norm() const;
  std::vector<double> flatten() const;
};

struct CostAndGradient {
  double cost;
  Gradient gradient;
};

/// Parameter-shift gradient. Each compiled gate contributes the difference
/// of two costs with only that gate's generator angle moved by +-pi/4:
///   cost gate exp(-i theta ZZ), theta = gamma_k C_ij:
///       d f/d gamma_k += C_ij [f(theta + pi/4) - f(theta - pi/4)]
///   mixer gate exp(+i beta_k X):
///       d f/d beta_k  += f(beta_k + pi/4) - f(beta_k - pi/4)
/// Contributions are summed in gate order.
///
/// Exact evaluators reuse cached forward states (and, with noise, backward
/// Heisenberg-evolved observables) so each shifted cost costs one gate
/// application instead of a whole circuit; the values are the same shifted
/// costs. The sampled evaluator re-runs every shifted circuit with the
/// evaluator's shot budget, shift s using sub-stream s.
CostAndGradient shift_rule_cost_and_gradient(const WeightedGraph& graph, const QaoaParams& params,
                                             const Evaluator& evaluator);

Gradient shift_rule_gradient(const WeightedGraph& graph, const QaoaParams& params,
                             const Evaluator& evaluator);

/// Central differences on the exact ideal cost, step h.
Gradient finite_difference_gradient(const WeightedGraph& graph, const QaoaParams& params,
                                    double h = 1e-5);

struct OptimizationStep {
  QaoaParams params;
  double cost;
  double gradient_norm;
};

struct OptimizationTrace {
  std::vector<OptimizationStep> iterations;
  double learning_rate = 0.0;
  bool converged = false;

  const QaoaParams& final_params() const { return iterations.back().params; }
  double final_cost() const { return iterations.back().cost; }
  /// Index of the iterate with the largest gradient norm.
  std::size_t max_gradient_index() const;
};

inline constexpr double kConvergenceGradientNorm = 1e-4;

/// Vanilla gradient descent theta <- theta - lr * grad f. Iterate 0 is `init`;
/// at most `num_iters` updates are made. Stops early (converged = true) once
/// the gradient norm drops below kConvergenceGradientNorm. Iteration t of a
/// sampled evaluator draws from sub-stream t. Throws SimulationError on a
/// non-finite cost or gradient.
OptimizationTrace gradient_descent(const WeightedGraph& graph, const QaoaParams& init,
                                   const Evaluator& evaluator, double learning_rate,
                                   std::size_t num_iters);

/// All 2n angles i.i.d. uniform on [-0.01, 0.01].
QaoaParams random_init(std::size_t steps, Rng& rng);

/// sqrt((|gamma_a - gamma_b|^2 + |beta_a - beta_b|^2) / (2n))
double param_distance(const QaoaParams& a, const QaoaParams& b);

namespace detail {

/// Shift-rule gradient that rebuilds and re-evaluates the full circuit for
/// every shifted cost. Reference for the cached implementation.
Gradient shift_rule_gradient_full_rerun(const WeightedGraph& graph, const QaoaParams& params,
                                        const Evaluator& evaluator);

}  // namespace detail

}  // namespace nqaoa
