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

#include <filesystem>
#include <string>
#include <string_view>

#include "nqaoa/maxcut.hpp"

namespace nqaoa::cli {

/// Parses {"nodes": m, "edges": [[i, j, w], ...]}. Syntax and field errors
/// throw ValidationError naming the line and the offending field.
WeightedGraph parse_graph(std::string_view text);

/// Inverse of parse_graph; edges are emitted in normalised order.
std::string serialize_graph(const WeightedGraph& graph);

/// "table1" selects the bundled graph; anything else is read as a file.
WeightedGraph load_graph(const std::string& source);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace nqaoa::cli
