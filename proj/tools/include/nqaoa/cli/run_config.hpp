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

#include <string_view>

#include "nqaoa/experiments.hpp"

namespace nqaoa::cli {

/// Applies a flat JSON run configuration on top of `config`. Recognised keys:
/// graph, channel, p_values, steps, shots, trajectories, seed, mode,
/// learning_rate, iterations, threads, optimize_out_of_scope. Unknown keys and
/// ill-typed values throw ValidationError; absent keys keep their value.
void apply_run_config(std::string_view text, ExperimentConfig& config);

}  // namespace nqaoa::cli
