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

#include "nqaoa/cli/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "nqaoa/error.hpp"
#include "nqaoa/result_table.hpp"

namespace nqaoa::cli {
namespace {

std::size_t line_of(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

// Byte offsets of the elements of the top-level "edges" array. nlohmann::json
// keeps no source positions, so this is a small scan that only tracks
// strings and nesting depth.
std::vector<std::size_t> edge_offsets(std::string_view text) {
  std::vector<std::size_t> out;
  int depth = 0;
  int edges_depth = -1;
  bool expect_element = false;
  std::string last_key;
  std::string current;
  bool pending_key = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '"') {
      const std::size_t start = i + 1;
      for (++i; i < text.size() && text[i] != '"'; ++i)
        if (text[i] == '\\') ++i;
      current = std::string(text.substr(start, i - start));
      pending_key = true;
      if (expect_element) {
        out.push_back(start - 1);
        expect_element = false;
      }
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ':') {
      if (pending_key) last_key = current;
      pending_key = false;
      continue;
    }
    pending_key = false;
    if (expect_element && c != ']') {
      out.push_back(i);
      expect_element = false;
    }
    if (c == '[' || c == '{') {
      ++depth;
      if (c == '[' && depth == 2 && edges_depth < 0 && last_key == "edges") {
        edges_depth = depth;
        expect_element = true;
      }
      last_key.clear();
    } else if (c == ']' || c == '}') {
      if (depth == edges_depth) edges_depth = -2;
      --depth;
      expect_element = false;
    } else if (c == ',' && depth == edges_depth) {
      expect_element = true;
    }
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& field, const std::string& what) {
  std::ostringstream msg;
  msg << "graph: line " << line << ": " << field << ": " << what;
  throw ValidationError(msg.str());
}

std::size_t as_index(const nlohmann::json& v, std::size_t line, const std::string& field) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    fail(line, field, "expected a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::ostringstream msg;
    msg << "graph: line " << line_of(text, e.byte == 0 ? 0 : e.byte - 1)
        << ": malformed JSON: " << e.what();
    throw ValidationError(msg.str());
  }
  if (!doc.is_object()) fail(1, "<root>", "expected an object with \"nodes\" and \"edges\"");
  for (const auto& [key, value] : doc.items())
    if (key != "nodes" && key != "edges") fail(1, key, "unknown key");
  if (!doc.contains("nodes")) fail(1, "nodes", "missing");
  if (!doc.contains("edges")) fail(1, "edges", "missing");
  const std::size_t nodes = as_index(doc["nodes"], 1, "nodes");
  if (nodes == 0) fail(1, "nodes", "graph needs at least one node");
  if (!doc["edges"].is_array()) fail(1, "edges", "expected an array");

  const std::vector<std::size_t> offsets = edge_offsets(text);
  std::vector<Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < doc["edges"].size(); ++k) {
    const auto& e = doc["edges"][k];
    const std::size_t line = k < offsets.size() ? line_of(text, offsets[k]) : 1;
    const std::string field = "edges[" + std::to_string(k) + "]";
    if (!e.is_array() || e.size() != 3) fail(line, field, "expected [i, j, weight]");
    const std::size_t i = as_index(e[0], line, field + "[0]");
    const std::size_t j = as_index(e[1], line, field + "[1]");
    if (!e[2].is_number()) fail(line, field + "[2]", "weight must be a number");
    const double w = e[2].get<double>();
    if (i >= nodes || j >= nodes) fail(line, field, "node index out of range");
    if (i == j) fail(line, field, "self-loop");
    if (!std::isfinite(w)) fail(line, field + "[2]", "non-finite weight");
    if (w == 0.0) fail(line, field + "[2]", "zero weight");
    if (!seen.emplace(std::min(i, j), std::max(i, j)).second) fail(line, field, "duplicate edge");
    edges.push_back({i, j, w});
  }
  return WeightedGraph(nodes, std::move(edges));
}

std::string serialize_graph(const WeightedGraph& graph) {
  std::ostringstream out;
  out << "{\n  \"nodes\": " << graph.num_nodes() << ",\n  \"edges\": [";
  const auto edges = graph.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    out << (k == 0 ? "\n    " : ",\n    ") << '[' << edges[k].i << ", " << edges[k].j << ", "
        << format_number(edges[k].weight) << ']';
  }
  out << (edges.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

WeightedGraph load_graph(const std::string& source) {
  if (source == "table1") return table1_graph();
  return parse_graph(read_text_file(source));
}

}  // namespace nqaoa::cli
