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

#include "canoma/experiment/result_table.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>

namespace canoma::experiment {
namespace {

using nlohmann::json;

std::string quote_csv(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string cell_text(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  return std::get<std::string>(cell);
}

json cell_json(const Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  const double d = std::get<double>(cell);
  if (!std::isfinite(d)) return nullptr;
  // Round through the 12-digit text so JSON and CSV carry the same value.
  const std::string text = format_number(d);
  double rounded = d;
  std::from_chars(text.data(), text.data() + text.size(), rounded);
  return rounded;
}

}  // namespace

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw std::invalid_argument("ResultTable::add_row: expected " +
                                std::to_string(columns_.size()) + " cells, got " +
                                std::to_string(row.size()));
  }
  rows_.push_back(std::move(row));
}

std::size_t ResultTable::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == name) return i;
  }
  throw std::out_of_range("ResultTable: no column '" + std::string(name) + "'");
}

bool ResultTable::has_column(std::string_view name) const {
  for (const auto& c : columns_) {
    if (c == name) return true;
  }
  return false;
}

double ResultTable::number(std::size_t row, std::string_view column) const {
  return std::get<double>(rows_.at(row).at(column_index(column)));
}

const std::string& ResultTable::text(std::size_t row, std::string_view column) const {
  return std::get<std::string>(rows_.at(row).at(column_index(column)));
}

TableFormat parse_table_format(std::string_view name) {
  if (name == "csv") return TableFormat::kCsv;
  if (name == "json") return TableFormat::kJson;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected csv or json)");
}

std::string format_number(double value) {
  if (std::isnan(value)) return "";
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, kSignificantDigits);
  return std::string(buf, res.ptr);
}

std::string to_csv(const ResultTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns().size(); ++i) {
    if (i > 0) out += ',';
    out += quote_csv(table.columns()[i]);
  }
  out += '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += quote_csv(cell_text(row[i]));
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const ResultTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows()) {
    json r = json::array();
    for (const auto& cell : row) r.push_back(cell_json(cell));
    rows.push_back(std::move(r));
  }
  json meta = json::object();
  for (const auto& [k, v] : table.meta()) meta[k] = v;
  const json doc = {{"columns", table.columns()}, {"rows", std::move(rows)}, {"meta", meta}};
  return doc.dump(2) + "\n";
}

ResultTable parse_json_table(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("parse_json_table: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("columns") || !doc.contains("rows")) {
    throw std::invalid_argument("parse_json_table: expected an object with columns and rows");
  }
  ResultTable table(doc.at("columns").get<std::vector<std::string>>());
  for (const auto& r : doc.at("rows")) {
    if (!r.is_array()) throw std::invalid_argument("parse_json_table: row is not an array");
    std::vector<Cell> row;
    for (const auto& c : r) {
      if (c.is_null()) {
        row.emplace_back(std::nan(""));
      } else if (c.is_number()) {
        row.emplace_back(c.get<double>());
      } else if (c.is_string()) {
        row.emplace_back(c.get<std::string>());
      } else {
        throw std::invalid_argument("parse_json_table: unsupported cell type");
      }
    }
    table.add_row(std::move(row));
  }
  if (doc.contains("meta")) {
    for (const auto& [k, v] : doc.at("meta").items()) {
      table.meta()[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
  }
  return table;
}

std::string render(const ResultTable& table, TableFormat format) {
  return format == TableFormat::kCsv ? to_csv(table) : to_json(table);
}

void emit(const ResultTable& table, TableFormat format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw OutputError("cannot open '" + path.string() + "' for writing");
  out << render(table, format);
  out.flush();
  if (!out) throw OutputError("write to '" + path.string() + "' failed");
}

}  // namespace canoma::experiment
