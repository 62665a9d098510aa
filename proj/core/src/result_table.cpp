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

#include "nqaoa/result_table.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "nqaoa/error.hpp"

namespace nqaoa {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  p.replace_extension(".json");
  return p;
}

ResultTable::ResultTable(std::string experiment, std::vector<Column> columns)
    : experiment_(std::move(experiment)), columns_(std::move(columns)) {
  if (columns_.empty()) throw ValidationError("result table needs at least one column");
}

void ResultTable::add_row(std::vector<double> values) {
  if (values.size() != columns_.size()) {
    std::ostringstream msg;
    msg << "row has " << values.size() << " values, table has " << columns_.size() << " columns";
    throw ValidationError(msg.str());
  }
  rows_.push_back(std::move(values));
}

std::size_t ResultTable::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i].name == name) return i;
  throw ValidationError("unknown column '" + std::string(name) + "'");
}

bool ResultTable::has_column(std::string_view name) const {
  for (const Column& c : columns_)
    if (c.name == name) return true;
  return false;
}

double ResultTable::value(std::size_t row, std::string_view column) const {
  return rows_.at(row)[column_index(column)];
}

std::vector<double> ResultTable::column_values(std::string_view column) const {
  const std::size_t idx = column_index(column);
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r[idx]);
  return out;
}

std::string ResultTable::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out += ',';
    out += columns_[i].name;
  }
  out += '\n';
  for (const auto& r : rows_) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ',';
      out += format_number(r[i]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json ResultTable::sidecar() const {
  nlohmann::json j = metadata_;
  j["experiment"] = experiment_;
  j["row_count"] = rows_.size();
  nlohmann::json cols = nlohmann::json::array();
  for (const Column& c : columns_) cols.push_back({{"name", c.name}, {"description", c.description}});
  j["columns"] = std::move(cols);
  return j;
}

void ResultTable::write(const std::filesystem::path& csv_path) const {
  {
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw Error("cannot open " + csv_path.string() + " for writing");
    csv << to_csv();
  }
  std::ofstream side(sidecar_path(csv_path), std::ios::binary);
  if (!side) throw Error("cannot open " + sidecar_path(csv_path).string() + " for writing");
  side << sidecar().dump(2) << '\n';
}

namespace {

std::vector<std::string> split_line(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    std::string_view field = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r'))
      field.remove_suffix(1);
    fields.emplace_back(field);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_number(const std::string& s, std::size_t line) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  double v = 0.0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  const auto res = std::from_chars(first, s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    std::ostringstream msg;
    msg << "line " << line << ": cannot parse '" << s << "' as a number";
    throw ValidationError(msg.str());
  }
  return v;
}

}  // namespace

ResultTable ResultTable::parse_csv(std::string_view text, std::string experiment) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ValidationError("CSV input is empty");

  std::vector<Column> columns;
  for (auto& name : split_line(lines.front())) {
    if (name.empty()) throw ValidationError("CSV header has an empty column name");
    columns.push_back({name, ""});
  }
  ResultTable table(std::move(experiment), std::move(columns));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto fields = split_line(lines[i]);
    if (fields.size() != table.columns_.size()) {
      std::ostringstream msg;
      msg << "line " << i + 1 << ": expected " << table.columns_.size() << " fields, got "
          << fields.size();
      throw ValidationError(msg.str());
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_number(f, i + 1));
    table.rows_.push_back(std::move(row));
  }
  return table;
}

}  // namespace nqaoa
