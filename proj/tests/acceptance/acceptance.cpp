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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "nqaoa/experiments.hpp"
#include "nqaoa/fit.hpp"
#include "nqaoa/gradopt.hpp"
#include "nqaoa/maxcut.hpp"
#include "nqaoa/noise.hpp"
#include "nqaoa/qaoa.hpp"
#include "nqaoa/rng.hpp"
#include "nqaoa/stats.hpp"

namespace {

using namespace nqaoa;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> check;
};

const std::vector<ChannelKind> kChannels = {ChannelKind::Dephasing, ChannelKind::BitFlip,
                                            ChannelKind::Depolarizing};

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double round_to(double v, int decimals) {
  const double s = std::pow(10.0, decimals);
  return std::round(v * s) / s;
}

ExperimentConfig config_for(ChannelKind kind) {
  ExperimentConfig c;
  c.channel = kind;
  return c;
}

std::map<std::size_t, QaoaParams> final_params(const ExperimentConfig& c) {
  std::map<std::size_t, QaoaParams> out;
  for (const auto& [n, trace] : ideal_optimizations(c)) out.emplace(n, trace.final_params());
  return out;
}

// 1 --------------------------------------------------------------------------
Outcome cptp_suite() {
  int passed = 0, total = 0;
  double worst = 0.0;
  for (ChannelKind kind : kChannels) {
    for (double p : noise_grid()) {
      const CptpCheck c = validate_cptp(NoiseChannel::make(kind, p));
      ++total;
      passed += c.pass && c.residual < 1e-12;
      worst = std::max(worst, c.residual);
    }
  }
  return {passed == 33 && total == 33,
          std::to_string(passed) + "/" + std::to_string(total) + " checks, max residual " + fmt(worst)};
}

// 2 --------------------------------------------------------------------------
Outcome interval_numerics() {
  const WeightedGraph g = table1_graph();
  const double cost = ci_cost(5000, g);
  const GradientIntervals L = ci_gradient(5000, g, g.num_nodes());
  const bool ok = round_to(cost, 3) == 0.051 && round_to(L.gamma, 3) == 0.130 &&
                  round_to(L.beta, 4) == 0.1906;
  return {ok, "ci_cost " + fmt(cost) + ", L_gamma " + fmt(L.gamma) + ", L_beta " + fmt(L.beta) +
                  " (reference value 0.186)"};
}

// 3 --------------------------------------------------------------------------
Outcome gradient_correctness() {
  const WeightedGraph g = table1_graph();
  Rng rng(derive_seed(7, {3}));
  double worst = 0.0;
  int points = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 0; t < 20; ++t) {
      QaoaParams p{std::vector<double>(n), std::vector<double>(n)};
      for (auto& v : p.gamma) v = rng.uniform(-std::numbers::pi, std::numbers::pi);
      for (auto& v : p.beta) v = rng.uniform(-std::numbers::pi, std::numbers::pi);
      const auto a = shift_rule_gradient(g, p, Evaluator::ideal()).flatten();
      const auto b = finite_difference_gradient(g, p, 1e-5).flatten();
      for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
      ++points;
    }
  }
  return {worst < 1e-6, std::to_string(points) + " points (20 per n), max abs error " + fmt(worst)};
}

// 4 --------------------------------------------------------------------------
Outcome trajectory_equivalence() {
  const std::vector<WeightedGraph> graphs = {
      WeightedGraph(2, {{0, 1, 1.0}}),
      WeightedGraph(3, {{0, 1, 0.7}, {1, 2, 1.2}, {0, 2, 0.4}}),
      WeightedGraph(4, {{0, 1, 0.73}, {1, 2, 0.36}, {2, 3, 0.88}, {0, 3, 0.5}, {0, 2, 0.67}}),
  };
  const std::size_t T = 2000;
  const int reps = 50;
  int worst_hits = reps;
  int configs = 0;
  for (ChannelKind kind : kChannels) {
    const NoiseChannel ch = NoiseChannel::make(kind, 0.01);
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const WeightedGraph& g = graphs[gi];
      const ProblemHamiltonian h = problem_hamiltonian(g);
      const double sigma = ci_cost(T, g) / 2.0;
      for (std::size_t n = 1; n <= 2; ++n) {
        Rng prng(derive_seed(7, {4, gi, n}));
        QaoaParams p{std::vector<double>(n), std::vector<double>(n)};
        for (auto& v : p.gamma) v = prng.uniform(0, std::numbers::pi);
        for (auto& v : p.beta) v = prng.uniform(0, std::numbers::pi / 2);
        const GateSequence c = build_circuit(g, p);
        const double exact = cost_exact(c, h, ch);
        int hits = 0;
        for (int r = 0; r < reps; ++r) {
          const auto seed = derive_seed(7, {4, static_cast<std::uint64_t>(kind), gi, n,
                                            static_cast<std::uint64_t>(r)});
          hits += std::abs(trajectory_mean_cost(c, h, ch, T, seed).mean - exact) <= 4 * sigma;
        }
        worst_hits = std::min(worst_hits, hits);
        ++configs;
      }
    }
  }
  return {worst_hits >= 48,
          std::to_string(configs) + " (channel, graph, n) settings; worst coverage " +
              std::to_string(worst_hits) + "/" + std::to_string(reps) + " within 4 sigma"};
}

// 5 --------------------------------------------------------------------------
Outcome fidelity_decay() {
  bool ok = true;
  std::ostringstream detail;
  for (ChannelKind kind : kChannels) {
    const ExperimentConfig c = config_for(kind);
    const ResultTable t = run_fidelity_experiment(c);
    const std::size_t np = c.p_values.size();
    bool mono = true;
    for (std::size_t ni = 0; ni < c.steps.size(); ++ni)
      for (std::size_t pi = 0; pi < np; ++pi) {
        const double f = t.value(ni * np + pi, "F");
        if (pi > 0) mono = mono && f < t.value(ni * np + pi - 1, "F");
        if (ni > 0) mono = mono && f < t.value((ni - 1) * np + pi, "F");
      }
    const double r2 = t.metadata()["fits"]["delta"]["pooled"]["r_squared"].get<double>();
    const double delta = t.metadata()["fits"]["delta"]["pooled"]["constant"].get<double>();
    ok = ok && mono && r2 >= 0.98;
    detail << to_string(kind) << ": monotone " << (mono ? "yes" : "no") << ", delta "
           << fmt(delta) << ", R2 " << fmt(r2, 5) << "; ";
  }
  return {ok, detail.str()};
}

// 6 --------------------------------------------------------------------------
Outcome cost_flattening() {
  bool ok = true;
  std::ostringstream detail;
  const double bound = 2 * ci_cost(5000, table1_graph());
  for (ChannelKind kind : kChannels) {
    const ExperimentConfig c = config_for(kind);
    const ResultTable t = run_cost_experiment(c, final_params(c));
    double min_r2 = 1.0, max_a = 0.0;
    for (std::size_t n : c.steps) {
      const auto& f = t.metadata()["fits"]["alpha"]["n=" + std::to_string(n)];
      min_r2 = std::min(min_r2, f["r_squared"].get<double>());
      max_a = std::max(max_a, std::abs(f["intercept"].get<double>()));
    }
    ok = ok && min_r2 >= 0.98 && max_a <= bound;
    detail << to_string(kind) << ": min R2 " << fmt(min_r2, 5) << ", max |A| " << fmt(max_a, 3)
           << "; ";
  }
  detail << "|A| bound " << fmt(bound, 3);
  return {ok, detail.str()};
}

// 7 --------------------------------------------------------------------------
Outcome gradient_scaling() {
  bool ok = true;
  std::ostringstream detail;
  for (ChannelKind kind : kChannels) {
    ExperimentConfig c = config_for(kind);
    c.steps = {4};
    const OptimizationTrace trace = ideal_optimizations(c).at(4);
    const ResultTable t =
        run_gradient_experiment(c, trace.iterations[trace.max_gradient_index()].params);
    const std::size_t np = c.p_values.size();
    bool positive = true, monotone = true;
    double worst_spread = 0.0, min_cos = 1.0;
    double first_bad_spread_p = -1.0;
    for (std::size_t pi = 0; pi < np; ++pi) {
      double lo = 1e300, hi = -1e300, sum = 0.0;
      for (std::size_t k = 0; k < 8; ++k) {
        const double y = t.value(pi * 8 + k, "y");
        positive = positive && y > 0;
        if (pi > 0) monotone = monotone && y < t.value((pi - 1) * 8 + k, "y");
        lo = std::min(lo, y);
        hi = std::max(hi, y);
        sum += y;
      }
      const double spread = (hi - lo) / (sum / 8);
      if (spread > 0.20 && first_bad_spread_p < 0) first_bad_spread_p = c.p_values[pi];
      worst_spread = std::max(worst_spread, spread);
      min_cos = std::min(min_cos, t.value(pi * 8, "cosine"));
    }
    const bool channel_ok = positive && monotone && worst_spread <= 0.20 && min_cos >= 0.99;
    ok = ok && channel_ok;
    detail << to_string(kind) << ": positive " << (positive ? "yes" : "no") << ", monotone "
           << (monotone ? "yes" : "no") << ", max spread " << fmt(worst_spread, 3);
    if (first_bad_spread_p > 0) detail << " (above 0.2 from p=" << fmt(first_bad_spread_p, 3) << ")";
    detail << ", min cosine " << fmt(min_cos, 5) << "; ";
  }
  return {ok, detail.str()};
}

// 8 --------------------------------------------------------------------------
Outcome optimization_robustness() {
  bool ok = true;
  std::ostringstream detail;
  for (ChannelKind kind : kChannels) {
    ExperimentConfig c = config_for(kind);
    c.p_values.insert(c.p_values.begin(), 0.0);
    c.optimize_out_of_scope = false;
    const ResultTable t = run_optimization_experiment(c);
    double worst = 0.0;
    bool control = true;
    int rows = 0;
    for (std::size_t r = 0; r < t.row_count(); ++r) {
      if (t.value(r, "in_scope") == 0.0) continue;
      if (t.value(r, "p") == 0.0) {
        control = control && t.value(r, "distance") == 0.0;
        continue;
      }
      worst = std::max(worst, t.value(r, "distance"));
      ++rows;
    }
    ok = ok && control && worst < 0.05;
    detail << to_string(kind) << ": " << rows << " rows, max distance " << fmt(worst, 3)
           << ", p=0 control " << (control ? "exact" : "nonzero") << "; ";
  }
  return {ok, detail.str()};
}

// 9 --------------------------------------------------------------------------
Outcome oracle_ground_truth() {
  const GroundStates g = brute_force_ground(table1_graph());
  bool found = false;
  for (std::uint64_t idx : g.optima) found = found || partition_string(idx, 7) == "{0,1,2,3}|{4,5,6}";
  const bool ok = std::abs(g.energy + 5.17) < 1e-9 && found;
  return {ok, "energy " + fmt(g.energy, 6) + ", " + std::to_string(g.optima.size()) +
                  " optima, {0,1,2,3}|{4,5,6} " + (found ? "present" : "missing")};
}

// 10 -------------------------------------------------------------------------
Outcome landscape_invariance() {
  const WeightedGraph g = table1_graph();
  const auto gamma = linspace(0.0, std::numbers::pi, 21, true);
  const auto beta = linspace(-std::numbers::pi / 4, std::numbers::pi / 4, 21, false);
  const Landscape ideal = scan_landscape(g, Evaluator::ideal(), gamma, beta);
  const std::size_t target = ideal.argmin();
  int matches = 0, total = 0;
  for (ChannelKind kind : kChannels) {
    for (double p : noise_grid()) {
      const Landscape noisy =
          scan_landscape(g, Evaluator::exact_noisy(NoiseChannel::make(kind, p)), gamma, beta);
      matches += noisy.argmin() == target;
      ++total;
    }
  }
  return {matches == total,
          std::to_string(matches) + "/" + std::to_string(total) + " (channel, p) landscapes share argmin cell (" +
              std::to_string(target / 21) + ", " + std::to_string(target % 21) + ")"};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "CPTP suite", 1, cptp_suite},
      {2, "interval numerics", 1, interval_numerics},
      {3, "gradient correctness", 60, gradient_correctness},
      {4, "trajectory/exact equivalence", 300, trajectory_equivalence},
      {5, "fidelity decay", 300, fidelity_decay},
      {6, "cost flattening", 600, cost_flattening},
      {7, "gradient scaling", 600, gradient_scaling},
      {8, "optimization robustness", 900, optimization_robustness},
      {9, "oracle ground truth", 1, oracle_ground_truth},
      {10, "landscape argmin invariance", 300, landscape_invariance},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      selected.push_back(std::stoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--only N]...\n", argv[0]);
      return 2;
    }
  }
  bool all_pass = true;
  for (const Criterion& c : criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end())
      continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    while (!out.detail.empty() && (out.detail.back() == ' ' || out.detail.back() == ';'))
      out.detail.pop_back();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = out.pass && in_time;
    all_pass = all_pass && pass;
    std::printf("%s criterion %d (%s): %s [%.2f s, limit %.0f s%s]\n", pass ? "PASS" : "FAIL", c.id,
                c.name, out.detail.c_str(), secs, c.limit_seconds, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
