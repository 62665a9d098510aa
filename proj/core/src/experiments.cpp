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

#include "nqaoa/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nqaoa/error.hpp"
#include "nqaoa/fit.hpp"
#include "nqaoa/stats.hpp"
#include "parallel.hpp"

namespace nqaoa {

std::string_view to_string(EvaluatorMode mode) {
  return mode == EvaluatorMode::ExactNoisy ? "exact" : "sampled";
}

void ExperimentConfig::validate() const {
  if (p_values.empty()) throw ValidationError("config: p value list is empty");
  for (double p : p_values)
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("config: p values must lie in [0, 1]");
  if (steps.empty()) throw ValidationError("config: step list is empty");
  for (std::size_t n : steps)
    if (n < 1) throw ValidationError("config: step counts must be >= 1");
  if (shots < 1) throw ValidationError("config: shots must be >= 1");
  if (trajectories < 1) throw ValidationError("config: trajectories must be >= 1");
  if (!(learning_rate > 0.0)) throw ValidationError("config: learning rate must be positive");
  if (iterations < 1) throw ValidationError("config: iterations must be >= 1");
  if (channel == ChannelKind::Custom) throw ValidationError("config: channel must be a named kind");
}

nlohmann::json ExperimentConfig::to_json() const {
  return {{"graph", graph_source},
          {"channel", std::string(to_string(channel))},
          {"p_values", p_values},
          {"steps", steps},
          {"shots", shots},
          {"trajectories", trajectories},
          {"seed", seed},
          {"mode", std::string(to_string(mode))},
          {"learning_rate", learning_rate},
          {"iterations", iterations},
          {"threads", threads}};
}

Evaluator noisy_evaluator(const ExperimentConfig& config, double p, std::uint64_t stream) {
  NoiseChannel ch = NoiseChannel::make(config.channel, p);
  if (config.mode == EvaluatorMode::ExactNoisy) return Evaluator::exact_noisy(std::move(ch));
  return Evaluator::sampled(std::move(ch), config.shots, derive_seed(config.seed, {stream}));
}

QaoaParams fidelity_params(const ExperimentConfig& config) {
  const std::size_t n_max = *std::max_element(config.steps.begin(), config.steps.end());
  Rng rng(derive_seed(config.seed, {0xF1DE}));
  QaoaParams p{std::vector<double>(n_max), std::vector<double>(n_max)};
  for (double& g : p.gamma) g = rng.uniform(0.0, std::numbers::pi);
  for (double& b : p.beta) b = rng.uniform(0.0, std::numbers::pi / 2.0);
  return p;
}

QaoaParams initial_params(const ExperimentConfig& config, std::size_t steps) {
  Rng rng(derive_seed(config.seed, {0x1417, steps}));
  return random_init(steps, rng);
}

std::map<std::size_t, OptimizationTrace> ideal_optimizations(const ExperimentConfig& config) {
  config.validate();
  std::vector<OptimizationTrace> traces(config.steps.size());
  detail::parallel_for(config.steps.size(), config.threads, [&](std::size_t i) {
    const std::size_t n = config.steps[i];
    traces[i] = gradient_descent(config.graph, initial_params(config, n), Evaluator::ideal(),
                                 config.learning_rate, config.iterations);
  });
  std::map<std::size_t, OptimizationTrace> out;
  for (std::size_t i = 0; i < config.steps.size(); ++i)
    out.emplace(config.steps[i], std::move(traces[i]));
  return out;
}

namespace {

QaoaParams leading(const QaoaParams& p, std::size_t n) {
  return {{p.gamma.begin(), p.gamma.begin() + static_cast<std::ptrdiff_t>(n)},
          {p.beta.begin(), p.beta.begin() + static_cast<std::ptrdiff_t>(n)}};
}

nlohmann::json fit_json(const DecayFit& f) {
  return {{"constant", f.constant}, {"r_squared", f.r_squared}, {"points", f.used}};
}

void add_warnings(ResultTable& table, const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) table.metadata()["warnings"].push_back(w);
}

double gate_count(const WeightedGraph& g, std::size_t n) {
  return static_cast<double>(n * (g.num_edges() + g.num_nodes()));
}

nlohmann::json base_metadata(const ExperimentConfig& config) {
  return {{"config", config.to_json()}, {"seed", config.seed}, {"fits", nlohmann::json::object()}};
}

}  // namespace

// --- Fidelity ---------------------------------------------------------------

ResultTable run_fidelity_experiment(const ExperimentConfig& config) {
  config.validate();
  const QaoaParams full = fidelity_params(config);
  const std::size_t np = config.p_values.size();
  const std::size_t nn = config.steps.size();

  std::vector<std::array<double, 2>> cells(np * nn);
  detail::parallel_for(np * nn, config.threads, [&](std::size_t idx) {
    const std::size_t ni = idx / np;
    const std::size_t pi = idx % np;
    const GateSequence circuit = build_circuit(config.graph, leading(full, config.steps[ni]));
    const NoiseChannel ch = NoiseChannel::make(config.channel, config.p_values[pi]);
    if (config.mode == EvaluatorMode::ExactNoisy) {
      cells[idx] = {output_fidelity(run_ideal(circuit), run_exact_noisy(circuit, ch)), 0.0};
    } else {
      const TrajectoryEstimate est = trajectory_fidelity(
          circuit, ch, config.trajectories, derive_seed(config.seed, {pi, ni}));
      cells[idx] = {est.mean, est.std_error};
    }
  });

  ResultTable table("fidelity", {{"p", "noise strength"},
                                 {"n", "QAOA step count"},
                                 {"N", "gate count n (E + m)"},
                                 {"F", "fidelity <phi_ideal|rho_noisy|phi_ideal>"},
                                 {"F_std_error", "trajectory standard error (0 in exact mode)"}});
  table.metadata() = base_metadata(config);
  table.metadata()["params"] = {{"gamma", full.gamma}, {"beta", full.beta}};

  std::vector<DecayPoint> pooled;
  for (std::size_t ni = 0; ni < nn; ++ni) {
    const std::size_t n = config.steps[ni];
    const double N = gate_count(config.graph, n);
    std::vector<DecayPoint> pts;
    for (std::size_t pi = 0; pi < np; ++pi) {
      const auto& c = cells[ni * np + pi];
      table.add_row({config.p_values[pi], static_cast<double>(n), N, c[0], c[1]});
      pts.push_back({config.p_values[pi], N, c[0]});
      pooled.push_back(pts.back());
    }
    if (pts.size() >= 2) {
      const DecayFit f = fit_decay(pts);
      table.metadata()["fits"]["delta"]["n=" + std::to_string(n)] = fit_json(f);
      add_warnings(table, f.warnings);
    }
  }
  if (pooled.size() >= 2) table.metadata()["fits"]["delta"]["pooled"] = fit_json(fit_decay(pooled));
  return table;
}

// --- Cost -------------------------------------------------------------------

ResultTable run_cost_experiment(const ExperimentConfig& config,
                                const std::map<std::size_t, QaoaParams>& params) {
  config.validate();
  const ProblemHamiltonian h = problem_hamiltonian(config.graph);
  const std::size_t np = config.p_values.size();
  const std::size_t nn = config.steps.size();

  std::vector<double> ideal(nn);
  std::vector<GateSequence> circuits;
  for (std::size_t ni = 0; ni < nn; ++ni) {
    const auto it = params.find(config.steps[ni]);
    if (it == params.end() || it->second.steps() != config.steps[ni])
      throw ValidationError("cost experiment: missing parameters for n = " +
                            std::to_string(config.steps[ni]));
    circuits.push_back(build_circuit(config.graph, it->second));
    ideal[ni] = cost_exact(circuits.back(), h);
  }

  std::vector<double> noisy(np * nn);
  detail::parallel_for(np * nn, config.threads, [&](std::size_t idx) {
    const std::size_t ni = idx / np;
    const std::size_t pi = idx % np;
    noisy[idx] = noisy_evaluator(config, config.p_values[pi], (pi << 16) | ni)
                     .cost(circuits[ni], h);
  });

  const double half_width =
      config.mode == EvaluatorMode::Sampled ? ci_cost(config.shots, config.graph) / 2.0 : 0.0;
  ResultTable table("cost", {{"p", "noise strength"},
                             {"n", "QAOA step count"},
                             {"N", "gate count n (E + m)"},
                             {"f_noise", "noisy cost"},
                             {"f_ideal", "noiseless cost at the same parameters"},
                             {"y", "f_noise / f_ideal (nan when f_ideal ~ 0)"},
                             {"ci_half_width", "half of the worst-case cost interval (0 in exact mode)"},
                             {"undefined", "1 when |f_ideal| < 1e-9 and y is undefined"}});
  table.metadata() = base_metadata(config);
  for (std::size_t ni = 0; ni < nn; ++ni) {
    const std::size_t n = config.steps[ni];
    const double N = gate_count(config.graph, n);
    table.metadata()["params"]["n=" + std::to_string(n)] = params.at(n).flatten();
    std::vector<DecayPoint> pts;
    std::vector<double> fn;
    for (std::size_t pi = 0; pi < np; ++pi) {
      const double f = noisy[ni * np + pi];
      const bool undefined = std::abs(ideal[ni]) < 1e-9;
      const double y = undefined ? std::nan("") : f / ideal[ni];
      table.add_row({config.p_values[pi], static_cast<double>(n), N, f, ideal[ni], y, half_width,
                     undefined ? 1.0 : 0.0});
      if (!undefined) pts.push_back({config.p_values[pi], N, y});
      fn.push_back(f);
    }
    if (pts.size() < 2) continue;
    const DecayFit f = fit_decay(pts);
    add_warnings(table, f.warnings);
    nlohmann::json entry = fit_json(f);
    // Intercept A of f_noise = s * (1-p)^(alpha N) f_ideal + A.
    std::vector<double> x;
    for (double p : config.p_values) x.push_back(std::pow(1.0 - p, f.constant * N) * ideal[ni]);
    const bool spread = std::any_of(x.begin(), x.end(), [&](double v) { return v != x.front(); });
    if (spread) {
      const LineFit line = fit_line(x, fn);
      entry["intercept"] = line.intercept;
      entry["slope"] = line.slope;
      entry["line_r_squared"] = line.r_squared;
    }
    table.metadata()["fits"]["alpha"]["n=" + std::to_string(n)] = std::move(entry);
  }
  return table;
}

// --- Gradient ---------------------------------------------------------------

ResultTable run_gradient_experiment(const ExperimentConfig& config, const QaoaParams& params) {
  config.validate();
  params.validate();
  const std::size_t n = params.steps();
  const double N = gate_count(config.graph, n);
  const std::size_t np = config.p_values.size();

  const std::vector<double> ideal =
      shift_rule_gradient(config.graph, params, Evaluator::ideal()).flatten();
  std::vector<std::vector<double>> noisy(np);
  detail::parallel_for(np, config.threads, [&](std::size_t pi) {
    noisy[pi] = shift_rule_gradient(config.graph, params,
                                    noisy_evaluator(config, config.p_values[pi], pi))
                    .flatten();
  });

  const GradientIntervals L = ci_gradient(config.shots, config.graph);
  ResultTable table("gradient",
                    {{"p", "noise strength"},
                     {"n", "QAOA step count"},
                     {"N", "gate count n (E + m)"},
                     {"param", "parameter index: 0..n-1 gamma, n..2n-1 beta"},
                     {"ideal_derivative", "noiseless shift-rule derivative"},
                     {"noisy_derivative", "noisy shift-rule derivative"},
                     {"y", "noisy_derivative / ideal_derivative"},
                     {"unreliable", "1 when |ideal_derivative| is below the interval half-width"},
                     {"cosine", "cosine similarity of the full noisy and ideal gradients at this p"}});
  table.metadata() = base_metadata(config);
  table.metadata()["params"] = params.flatten();
  table.metadata()["interval_length"] = {{"gamma", L.gamma}, {"beta", L.beta}};

  std::vector<std::vector<DecayPoint>> per_param(2 * n);
  for (std::size_t pi = 0; pi < np; ++pi) {
    const double cosine = cosine_similarity(noisy[pi], ideal);
    for (std::size_t k = 0; k < 2 * n; ++k) {
      const double half = (k < n ? L.gamma : L.beta) / 2.0;
      const double y = noisy[pi][k] / ideal[k];
      table.add_row({config.p_values[pi], static_cast<double>(n), N, static_cast<double>(k),
                     ideal[k], noisy[pi][k], y, std::abs(ideal[k]) < half ? 1.0 : 0.0, cosine});
      per_param[k].push_back({config.p_values[pi], N, y});
    }
  }
  if (np >= 2) {
    for (std::size_t k = 0; k < 2 * n; ++k) {
      try {
        const DecayFit f = fit_decay(per_param[k]);
        add_warnings(table, f.warnings);
        table.metadata()["fits"]["alpha"]["param=" + std::to_string(k)] = fit_json(f);
      } catch (const SimulationError& e) {
        table.metadata()["warnings"].push_back("param " + std::to_string(k) + ": " + e.what());
      }
    }
  }
  return table;
}

// --- Optimisation -------------------------------------------------------------

ResultTable run_optimization_experiment(const ExperimentConfig& config) {
  config.validate();
  const std::size_t np = config.p_values.size();
  const std::size_t nn = config.steps.size();
  const auto ideal = ideal_optimizations(config);

  struct Cell {
    double distance = std::nan("");
    double noisy_cost = std::nan("");
  };
  std::vector<Cell> cells(np * nn);
  detail::parallel_for(np * nn, config.threads, [&](std::size_t idx) {
    const std::size_t ni = idx / np;
    const std::size_t pi = idx % np;
    const std::size_t n = config.steps[ni];
    const double p = config.p_values[pi];
    if (!config.optimize_out_of_scope && !(gate_count(config.graph, n) * p < 0.5)) return;
    const OptimizationTrace noisy =
        gradient_descent(config.graph, initial_params(config, n),
                         noisy_evaluator(config, p, (pi << 16) | ni), config.learning_rate,
                         config.iterations);
    cells[idx] = {param_distance(noisy.final_params(), ideal.at(n).final_params()),
                  noisy.final_cost()};
  });

  ResultTable table("optimization",
                    {{"p", "noise strength"},
                     {"n", "QAOA step count"},
                     {"N", "gate count n (E + m)"},
                     {"Np", "N * p"},
                     {"distance", "RMS distance between noisy and ideal optimised parameters"},
                     {"ideal_final_cost", "noiseless cost at the ideal optimum"},
                     {"noisy_final_cost", "noisy-evaluator cost at the noisy optimum"},
                     {"in_scope", "1 when N p < 0.5"}});
  table.metadata() = base_metadata(config);
  for (std::size_t ni = 0; ni < nn; ++ni) {
    const std::size_t n = config.steps[ni];
    const double N = gate_count(config.graph, n);
    const OptimizationTrace& it = ideal.at(n);
    table.metadata()["ideal"]["n=" + std::to_string(n)] = {
        {"params", it.final_params().flatten()},
        {"iterations", it.iterations.size()},
        {"converged", it.converged}};
    for (std::size_t pi = 0; pi < np; ++pi) {
      const double p = config.p_values[pi];
      const Cell& c = cells[ni * np + pi];
      table.add_row({p, static_cast<double>(n), N, N * p, c.distance, it.final_cost(), c.noisy_cost,
                     N * p < 0.5 ? 1.0 : 0.0});
    }
  }
  return table;
}

// --- Landscape ----------------------------------------------------------------

std::size_t Landscape::argmin() const {
  return static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
}

Landscape scan_landscape(const WeightedGraph& graph, const Evaluator& evaluator,
                         std::vector<double> gamma, std::vector<double> beta) {
  const ProblemHamiltonian h = problem_hamiltonian(graph);
  Landscape out{std::move(gamma), std::move(beta), {}};
  out.values.reserve(out.gamma.size() * out.beta.size());
  for (std::size_t i = 0; i < out.gamma.size(); ++i)
    for (std::size_t j = 0; j < out.beta.size(); ++j)
      out.values.push_back(
          evaluator.cost(build_circuit(graph, QaoaParams{{out.gamma[i]}, {out.beta[j]}}), h));
  return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t count, bool endpoint) {
  std::vector<double> v(count);
  if (count == 0) return v;
  const double denom = static_cast<double>(endpoint ? std::max<std::size_t>(count - 1, 1) : count);
  for (std::size_t i = 0; i < count; ++i) v[i] = lo + (hi - lo) * static_cast<double>(i) / denom;
  return v;
}

double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw ValidationError("cosine similarity: length mismatch");
  double ab = 0.0, aa = 0.0, bb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ab += a[i] * b[i];
    aa += a[i] * a[i];
    bb += b[i] * b[i];
  }
  if (aa == 0.0 || bb == 0.0) return 0.0;
  return ab / std::sqrt(aa * bb);
}

}  // namespace nqaoa
