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
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nqaoa/gradopt.hpp"
#include "nqaoa/maxcut.hpp"
#include "nqaoa/noise.hpp"
#include "nqaoa/qaoa.hpp"
#include "nqaoa/result_table.hpp"

namespace nqaoa {

enum class EvaluatorMode { ExactNoisy, Sampled };

std::string_view to_string(EvaluatorMode mode);

/// Shared settings of the batch studies. Every random quantity is derived
/// from `seed`.
struct ExperimentConfig {
  std::string graph_source = "table1";
  WeightedGraph graph = table1_graph();
  ChannelKind channel = ChannelKind::Dephasing;
  std::vector<double> p_values = noise_grid();
  std::vector<std::size_t> steps = {1, 2, 3, 4};
  std::size_t shots = 5000;
  std::size_t trajectories = 2000;
  std::uint64_t seed = 7;
  EvaluatorMode mode = EvaluatorMode::ExactNoisy;
  double learning_rate = 0.02;
  std::size_t iterations = 500;
  std::size_t threads = 1;
  /// Optimisation study only: also run the noisy descent for rows with
  /// N p >= 0.5 (otherwise their distance is reported as nan).
  bool optimize_out_of_scope = true;

  /// Throws ValidationError on empty grids, p outside [0, 1], zero shots or
  /// trajectories, or a non-positive learning rate.
  void validate() const;
  nlohmann::json to_json() const;
};

/// Evaluator used for noisy costs at strength `p` in the configured mode.
/// `stream` selects the sampled sub-stream.
Evaluator noisy_evaluator(const ExperimentConfig& config, double p, std::uint64_t stream);

/// Fixed random angles for the fidelity study: gamma ~ U[0, pi),
/// beta ~ U[0, pi/2), drawn once for the largest step count. Smaller step
/// counts use the leading entries.
QaoaParams fidelity_params(const ExperimentConfig& config);

/// Initial point for step count n: random_init from stream (seed, n).
QaoaParams initial_params(const ExperimentConfig& config, std::size_t steps);

/// Ideal-evaluator gradient descent per configured step count.
std::map<std::size_t, OptimizationTrace> ideal_optimizations(const ExperimentConfig& config);

/// Rows (p, n, N, F, F_std_error). Exact mode uses the density-matrix
/// fidelity; sampled mode the trajectory mean over `trajectories` runs.
/// Fitted delta per n and pooled go to metadata["fits"].
ResultTable run_fidelity_experiment(const ExperimentConfig& config);

/// Rows (p, n, N, f_noise, f_ideal, y, ci_half_width, undefined) at the
/// given parameters per n. alpha per n and the intercept of f_noise against
/// (1-p)^(alpha N) f_ideal go to metadata["fits"].
ResultTable run_cost_experiment(const ExperimentConfig& config,
                                const std::map<std::size_t, QaoaParams>& params);

/// Rows (p, n, N, param, ideal_derivative, noisy_derivative, y, unreliable,
/// cosine) at fixed parameters. param indexes [gamma..., beta...].
ResultTable run_gradient_experiment(const ExperimentConfig& config, const QaoaParams& params);

/// Rows (p, n, N, Np, distance, ideal_final_cost, noisy_final_cost,
/// in_scope). Ideal and noisy descents share init, learning rate and budget.
ResultTable run_optimization_experiment(const ExperimentConfig& config);

/// Cost over a (gamma, beta) grid for a single-step circuit.
struct Landscape {
  std::vector<double> gamma;
  std::vector<double> beta;
  std::vector<double> values;  ///< values[i * beta.size() + j] at (gamma[i], beta[j])

  std::size_t argmin() const;
};

Landscape scan_landscape(const WeightedGraph& graph, const Evaluator& evaluator,
                         std::vector<double> gamma, std::vector<double> beta);

/// `count` evenly spaced values from lo; hi included iff `endpoint`.
std::vector<double> linspace(double lo, double hi, std::size_t count, bool endpoint = true);

/// Element-wise cosine similarity; 0 when either vector is zero.
double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace nqaoa
