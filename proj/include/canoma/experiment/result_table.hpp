// Copyright 2026 The canoma Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CANOMA_EXPERIMENT_RESULT_TABLE_HPP_
#define CANOMA_EXPERIMENT_RESULT_TABLE_HPP_

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace canoma::experiment {

inline constexpr std::string_view kArtifactVersion = "0.1.0";

// Numbers, or short labels such as case names and region codes.
using Cell = std::variant<double, std::string>;

class ResultTable {
 public:
  ResultTable() = default;
  explicit ResultTable(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }

  // Throws std::invalid_argument unless the row has one cell per column.
  void add_row(std::vector<Cell> row);

  // Throws std::out_of_range for an unknown column.
  std::size_t column_index(std::string_view name) const;
  bool has_column(std::string_view name) const;
  double number(std::size_t row, std::string_view column) const;
  const std::string& text(std::size_t row, std::string_view column) const;

  std::map<std::string, std::string>& meta() { return meta_; }
  const std::map<std::string, std::string>& meta() const { return meta_; }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::map<std::string, std::string> meta_;
};

enum class TableFormat { kCsv, kJson };

// Throws std::invalid_argument for anything but "csv" or "json".
TableFormat parse_table_format(std::string_view name);

inline constexpr int kSignificantDigits = 12;

// Shortest general-format text with 12 significant digits; "" for NaN.
std::string format_number(double value);

// Header row plus one line per row; '\n' terminated; fields quoted when they
// contain a comma, quote or newline. Meta is not written.
std::string to_csv(const ResultTable& table);

// {"columns": [...], "rows": [[...]], "meta": {...}}. NaN and infinities
// become null.
std::string to_json(const ResultTable& table);

// Inverse of to_json. Throws std::invalid_argument on malformed input.
ResultTable parse_json_table(std::string_view text);

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string render(const ResultTable& table, TableFormat format);

// Throws OutputError if the file cannot be written.
void emit(const ResultTable& table, TableFormat format, const std::filesystem::path& path);

}  // namespace canoma::experiment

#endif  // CANOMA_EXPERIMENT_RESULT_TABLE_HPP_
