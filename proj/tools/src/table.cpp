// Copyright 2026 The symres Authors
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


#include "symres/tools/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "symres/error.hpp"

namespace symres::tools {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string cell_text(const Cell& c, bool json) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (json && !std::isfinite(*d)) return "null";
    return format_double(*d);
  }
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  const auto& s = std::get<std::string>(c);
  return json ? json_string(s) : csv_field(s);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "row width does not match the columns");
  }
  rows.push_back(std::move(row));
}

double Table::number(std::size_t row, std::string_view column) const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] != column) continue;
    const Cell& cell = rows.at(row)[c];
    if (const auto* d = std::get_if<double>(&cell)) return *d;
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return static_cast<double>(*i);
    throw Error(ErrorCode::kInvalidArgument, "column '" + columns[c] + "' is not numeric");
  }
  throw Error(ErrorCode::kInvalidArgument, "no column '" + std::string(column) + "'");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const Table& table, const Header& header) {
  for (const auto& [k, v] : header) os << "# " << k << ": " << v << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    os << (c ? "," : "") << csv_field(table.columns[c]);
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? "," : "") << cell_text(row[c], false);
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& table, const Header& header) {
  os << "{\n  \"config\": {";
  for (std::size_t i = 0; i < header.size(); ++i) {
    os << (i ? ",\n    " : "\n    ") << json_string(header[i].first) << ": "
       << json_string(header[i].second);
  }
  os << "\n  },\n  \"columns\": [";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    os << (c ? ", " : "") << json_string(table.columns[c]);
  }
  os << "],\n  \"rows\": [";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    os << (r ? ",\n    [" : "\n    [");
    const auto& row = table.rows[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? ", " : "") << cell_text(row[c], true);
    }
    os << "]";
  }
  os << "\n  ]\n}\n";
}

}  // namespace symres::tools
