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

#include "nqaoa/cli/run_config.hpp"

#include <nlohmann/json.hpp>

#include "nqaoa/cli/graph_io.hpp"
#include "nqaoa/error.hpp"

namespace nqaoa::cli {
namespace {

template <typename T>
T get(const nlohmann::json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError("config: key \"" + key + "\" has the wrong type");
  }
}

std::size_t get_count(const nlohmann::json& value, const std::string& key) {
  if (!value.is_number_unsigned()) throw ValidationError("config: key \"" + key + "\" must be a non-negative integer");
  return value.get<std::size_t>();
}

}  // namespace

void apply_run_config(std::string_view text, ExperimentConfig& config) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("config: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("config: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "graph") {
      config.graph_source = get<std::string>(value, key);
      config.graph = load_graph(config.graph_source);
    } else if (key == "channel") {
      const auto kind = parse_channel_kind(get<std::string>(value, key));
      if (!kind || *kind == ChannelKind::Custom)
        throw ValidationError("config: unknown channel \"" + value.dump() + "\"");
      config.channel = *kind;
    } else if (key == "p_values") {
      config.p_values = get<std::vector<double>>(value, key);
    } else if (key == "steps") {
      if (!value.is_array()) throw ValidationError("config: key \"steps\" must be an array");
      config.steps.clear();
      for (const auto& n : value) config.steps.push_back(get_count(n, key));
    } else if (key == "shots") {
      config.shots = get_count(value, key);
    } else if (key == "trajectories") {
      config.trajectories = get_count(value, key);
    } else if (key == "seed") {
      config.seed = get_count(value, key);
    } else if (key == "mode") {
      const auto mode = get<std::string>(value, key);
      if (mode == "exact") config.mode = EvaluatorMode::ExactNoisy;
      else if (mode == "sampled") config.mode = EvaluatorMode::Sampled;
      else throw ValidationError("config: mode must be \"exact\" or \"sampled\"");
    } else if (key == "learning_rate") {
      config.learning_rate = get<double>(value, key);
    } else if (key == "iterations") {
      config.iterations = get_count(value, key);
    } else if (key == "threads") {
      config.threads = get_count(value, key);
    } else if (key == "optimize_out_of_scope") {
      config.optimize_out_of_scope = get<bool>(value, key);
    } else {
      throw ValidationError("config: unknown key \"" + key + "\"");
    }
  }
}

}  // namespace nqaoa::cli
