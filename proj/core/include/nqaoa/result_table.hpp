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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace nqaoa {

struct Column {
  std::string name;
  std::string description;
};

/// Rows of named real columns plus free-form JSON metadata. Serialises to
/// CSV (header row, '.' decimal separator, shortest round-trip digits) and a
/// JSON sidecar describing every column.
class ResultTable {
 public:
  ResultTable(std::string experiment, std::vector<Column> columns);

  const std::string& experiment() const { return experiment_; }
  std::span<const Column> columns() const { return columns_; }
  std::size_t row_count() const { return rows_.size(); }
  std::span<const double> row(std::size_t i) const { return rows_.at(i); }

  /// Throws ValidationError if the width does not match.
  void add_row(std::vector<double> values);

  /// Throws ValidationError for an unknown column.
  std::size_t column_index(std::string_view name) const;
  bool has_column(std::string_view name) const;
  double value(std::size_t row, std::string_view column) const;
  std::vector<double> column_values(std::string_view column) const;

  nlohmann::json& metadata() { return metadata_; }
  const nlohmann::json& metadata() const { return metadata_; }

  std::string to_csv() const;
  /// {"experiment", "columns": [{name, description}], "row_count", ...metadata}
  nlohmann::json sidecar() const;

  /// Writes `csv_path` and the sidecar next to it (extension ".json").
  void write(const std::filesystem::path& csv_path) const;

  /// Parses CSV produced by to_csv (or any header + numeric rows file).
  static ResultTable parse_csv(std::string_view text, std::string experiment = "imported");

 private:
  std::string experiment_;
  std::vector<Column> columns_;
  std::vector<std::vector<double>> rows_;
  nlohmann::json metadata_ = nlohmann::json::object();
};

/// Locale-independent shortest representation; "nan", "inf", "-inf".
std::string format_number(double value);

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

}  // namespace nqaoa
