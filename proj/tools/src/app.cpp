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

#include "nqaoa/cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "nqaoa/cli/graph_io.hpp"
#include "nqaoa/cli/run_config.hpp"
#include "nqaoa/error.hpp"
#include "nqaoa/experiments.hpp"
#include "nqaoa/fit.hpp"
#include "nqaoa/stats.hpp"

#ifndef NQAOA_VERSION
#define NQAOA_VERSION "unknown"
#endif

namespace nqaoa::cli {
namespace {

struct Options {
  std::string config_path;
  std::string graph = "table1";
  std::string channel;
  std::vector<double> p;
  bool grid = false;
  std::vector<std::size_t> steps;
  std::size_t shots = 0;
  std::size_t trajectories = 0;
  std::uint64_t seed = 0;
  std::string mode;
  std::string out;
  std::size_t threads = 0;
  double lr = 0.0;
  std::size_t iters = 0;

  std::string positional;
  std::string column;
};

std::size_t default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

bool given(const CLI::App& app, const std::string& name) { return app.count(name) > 0; }

ExperimentConfig build_config(const CLI::App& app, const Options& o) {
  ExperimentConfig c;
  c.threads = default_threads();
  if (!o.config_path.empty()) apply_run_config(read_text_file(o.config_path), c);
  if (given(app, "--graph")) {
    c.graph_source = o.graph;
    c.graph = load_graph(o.graph);
  }
  if (given(app, "--channel")) {
    const auto kind = parse_channel_kind(o.channel);
    if (!kind) throw ValidationError("unknown channel \"" + o.channel + "\"");
    c.channel = *kind;
  }
  if (given(app, "--p") && o.grid) throw ValidationError("--p and --grid are mutually exclusive");
  if (given(app, "--p")) c.p_values = o.p;
  if (o.grid) c.p_values = noise_grid();
  if (given(app, "--steps")) c.steps = o.steps;
  if (given(app, "--shots")) c.shots = o.shots;
  if (given(app, "--trajectories")) c.trajectories = o.trajectories;
  if (given(app, "--seed")) c.seed = o.seed;
  if (given(app, "--mode"))
    c.mode = o.mode == "sampled" ? EvaluatorMode::Sampled : EvaluatorMode::ExactNoisy;
  if (given(app, "--threads")) c.threads = std::max<std::size_t>(o.threads, 1);
  if (given(app, "--lr")) c.learning_rate = o.lr;
  if (given(app, "--iters")) c.iterations = o.iters;
  c.validate();
  return c;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit(ResultTable table, const std::string& out_path, const std::string& fallback,
          std::ostream& out) {
  table.metadata()["tool_version"] = NQAOA_VERSION;
  table.metadata()["timestamp"] = utc_timestamp();
  const std::string path = out_path.empty() ? fallback : out_path;
  if (path == "-") {
    out << table.to_csv();
    return;
  }
  table.write(path);
  out << "wrote " << path << " (" << table.row_count() << " rows) and "
      << sidecar_path(path).string() << '\n';
}

// --- validate ---------------------------------------------------------------

int cmd_validate(const CLI::App& app, const Options& o, std::ostream& out) {
  const ExperimentConfig c = build_config(app, o);
  bool ok = true;
  out << "graph " << c.graph_source << ": ok (" << c.graph.num_nodes() << " nodes, "
      << c.graph.num_edges() << " edges, total weight " << format_number(std::round(c.graph.total_weight() * 1e9) / 1e9)
      << ")\n";
  std::vector<ChannelKind> kinds = {ChannelKind::Dephasing, ChannelKind::BitFlip,
                                    ChannelKind::Depolarizing};
  if (given(app, "--channel")) kinds = {c.channel};
  for (ChannelKind kind : kinds) {
    for (double p : c.p_values) {
      const CptpCheck check = validate_cptp(NoiseChannel::make(kind, p));
      ok = ok && check.pass;
      out << to_string(kind) << " p=" << format_number(p) << " residual "
          << format_number(check.residual) << (check.pass ? " PASS" : " FAIL") << '\n';
    }
  }
  return ok ? kExitOk : kExitValidation;
}

// --- brute-force ------------------------------------------------------------

int cmd_brute_force(const Options& o, std::ostream& out) {
  const std::string source = o.positional.empty() ? o.graph : o.positional;
  const WeightedGraph graph = load_graph(source);
  const GroundStates g = brute_force_ground(graph);
  out << "graph: " << source << " (" << graph.num_nodes() << " nodes, " << graph.num_edges()
      << " edges)\n";
  out << "ground energy: " << format_number(std::round(g.energy * 1e9) / 1e9) << '\n';
  out << "optima: " << g.optima.size() << '\n';
  for (std::uint64_t idx : g.optima) {
    out << "  " << bitstring(idx, graph.num_nodes()) << "  "
        << partition_string(idx, graph.num_nodes()) << "  cut "
        << format_number(std::round(cut_value(graph, idx) * 1e9) / 1e9) << '\n';
  }
  return kExitOk;
}

// --- optimize ---------------------------------------------------------------

int cmd_optimize(const CLI::App& app, const Options& o, std::ostream& out) {
  const ExperimentConfig c = build_config(app, o);
  std::optional<double> p;
  if (given(app, "--channel") || given(app, "--p")) {
    if (c.p_values.size() != 1) throw ValidationError("optimize takes a single --p value");
    p = c.p_values.front();
  }
  const std::size_t width = *std::max_element(c.steps.begin(), c.steps.end());
  std::vector<Column> columns = {{"n", "QAOA step count"},
                                 {"iteration", "descent iteration (0 is the initial point)"},
                                 {"cost", "evaluator cost at this iterate"},
                                 {"gradient_norm", "Euclidean norm of the shift-rule gradient"}};
  for (std::size_t k = 0; k < width; ++k)
    columns.push_back({"gamma_" + std::to_string(k), "cost angle k (nan beyond n)"});
  for (std::size_t k = 0; k < width; ++k)
    columns.push_back({"beta_" + std::to_string(k), "mixer angle k (nan beyond n)"});
  ResultTable table("optimize", std::move(columns));
  table.metadata()["config"] = c.to_json();
  table.metadata()["evaluator"] = p ? "noisy" : "ideal";

  for (std::size_t n : c.steps) {
    const Evaluator eval = p ? noisy_evaluator(c, *p, n) : Evaluator::ideal();
    const OptimizationTrace trace =
        gradient_descent(c.graph, initial_params(c, n), eval, c.learning_rate, c.iterations);
    for (std::size_t t = 0; t < trace.iterations.size(); ++t) {
      const auto& step = trace.iterations[t];
      std::vector<double> row = {static_cast<double>(n), static_cast<double>(t), step.cost,
                                 step.gradient_norm};
      for (std::size_t k = 0; k < width; ++k)
        row.push_back(k < n ? step.params.gamma[k] : std::nan(""));
      for (std::size_t k = 0; k < width; ++k)
        row.push_back(k < n ? step.params.beta[k] : std::nan(""));
      table.add_row(std::move(row));
    }
    table.metadata()["converged"]["n=" + std::to_string(n)] = trace.converged;
  }
  emit(std::move(table), o.out, "-", out);
  return kExitOk;
}

// --- experiment -------------------------------------------------------------

int cmd_experiment(const CLI::App& app, const Options& o, std::ostream& out) {
  ExperimentConfig c = build_config(app, o);
  const std::string& kind = o.positional;
  ResultTable table = [&] {
    if (kind == "fidelity") return run_fidelity_experiment(c);
    if (kind == "optimization") return run_optimization_experiment(c);
    if (kind == "cost") {
      std::map<std::size_t, QaoaParams> params;
      for (const auto& [n, trace] : ideal_optimizations(c)) params.emplace(n, trace.final_params());
      return run_cost_experiment(c, params);
    }
    c.steps = {*std::max_element(c.steps.begin(), c.steps.end())};
    const OptimizationTrace trace = ideal_optimizations(c).at(c.steps.front());
    return run_gradient_experiment(c, trace.iterations[trace.max_gradient_index()].params);
  }();
  emit(std::move(table), o.out, kind + ".csv", out);
  return kExitOk;
}

// --- fit --------------------------------------------------------------------

int cmd_fit(const Options& o, std::ostream& out) {
  const ResultTable table = ResultTable::parse_csv(read_text_file(o.positional));
  for (const char* required : {"p", "N"})
    if (!table.has_column(required))
      throw ValidationError(std::string("fit: CSV has no \"") + required + "\" column");
  std::string column = o.column;
  if (column.empty()) column = table.has_column("y") ? "y" : "F";
  if (!table.has_column(column)) throw ValidationError("fit: CSV has no \"" + column + "\" column");

  std::map<std::pair<double, double>, std::vector<DecayPoint>> groups;
  std::vector<DecayPoint> pooled;
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    const double y = table.value(r, column);
    if (std::isnan(y)) continue;
    const double n = table.has_column("n") ? table.value(r, "n") : 0.0;
    const double param = table.has_column("param") ? table.value(r, "param") : -1.0;
    const DecayPoint pt{table.value(r, "p"), table.value(r, "N"), y};
    groups[{n, param}].push_back(pt);
    pooled.push_back(pt);
  }
  auto print = [&](const std::string& label, const std::vector<DecayPoint>& pts) {
    const DecayFit f = fit_decay(pts);
    out << label << ": constant " << format_number(f.constant) << " r_squared "
        << format_number(f.r_squared) << " points " << f.used << '\n';
    for (const auto& w : f.warnings) out << "  warning: " << w << '\n';
  };
  out << "fit of ln " << column << " = c N ln(1-p)\n";
  for (const auto& [key, pts] : groups) {
    std::string label = "n=" + format_number(key.first);
    if (key.second >= 0) label += " param=" + format_number(key.second);
    print(label, pts);
  }
  if (groups.size() > 1) print("pooled", pooled);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noisy QAOA simulation lab", "nqaoa"};
  app.set_version_flag("--version", NQAOA_VERSION);
  app.require_subcommand(1);
  Options o;

  app.add_option("--config", o.config_path, "JSON run configuration (flags override it)");
  app.add_option("--graph", o.graph, "graph file or \"table1\"");
  app.add_option("--channel", o.channel, "noise channel")
      ->check(CLI::IsMember({"dephasing", "bitflip", "depolarizing"}));
  app.add_option("--p", o.p, "noise strength(s), comma separated")->delimiter(',');
  app.add_flag("--grid", o.grid, "use the 11-point noise grid");
  app.add_option("--steps", o.steps, "QAOA step counts, comma separated")->delimiter(',');
  app.add_option("--shots", o.shots, "measurement shots per expectation term");
  app.add_option("--trajectories", o.trajectories, "trajectories per fidelity estimate");
  app.add_option("--seed", o.seed, "master seed");
  app.add_option("--mode", o.mode, "noisy evaluator")->check(CLI::IsMember({"exact", "sampled"}));
  app.add_option("--out", o.out, "output CSV path (\"-\" for stdout)");
  app.add_option("--threads", o.threads, std::string("worker threads (default $") + kThreadsEnv + ")");
  app.add_option("--lr", o.lr, "gradient-descent learning rate");
  app.add_option("--iters", o.iters, "gradient-descent iteration budget");

  auto* validate = app.add_subcommand("validate", "check CPTP conditions and the graph");
  auto* brute = app.add_subcommand("brute-force", "exhaustive Max-Cut ground state");
  brute->add_option("graph", o.positional, "graph file or \"table1\"");
  auto* optimize = app.add_subcommand("optimize", "gradient descent; prints the trace as CSV");
  auto* experiment = app.add_subcommand("experiment", "run a batch study, writing CSV + JSON");
  experiment->add_option("kind", o.positional, "study to run")
      ->required()
      ->check(CLI::IsMember({"fidelity", "cost", "gradient", "optimization"}));
  auto* fit = app.add_subcommand("fit", "fit ln y = c N ln(1-p) to an existing CSV");
  fit->add_option("csv", o.positional, "input CSV")->required();
  fit->add_option("--column", o.column, "column to fit (default y, else F)");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(app, o, out);
    if (brute->parsed()) return cmd_brute_force(o, out);
    if (optimize->parsed()) return cmd_optimize(app, o, out);
    if (experiment->parsed()) return cmd_experiment(app, o, out);
    if (fit->parsed()) return cmd_fit(o, out);
  } catch (const ValidationError& e) {
    err << "nqaoa: " << e.what() << '\n';
    return kExitValidation;
  } catch (const SizeError& e) {
    err << "nqaoa: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "nqaoa: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace nqaoa::cli
