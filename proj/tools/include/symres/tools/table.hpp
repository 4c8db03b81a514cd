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


#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace symres::tools {

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Throws kDimensionMismatch when the row width differs from the columns.
  void add_row(std::vector<Cell> row);
  double number(std::size_t row, std::string_view column) const;
};

using Header = std::vector<std::pair<std::string, std::string>>;

/// "%.17g" for finite values, "nan"/"inf"/"-inf" otherwise.
std::string format_double(double v);

/// "# key: value" lines, then a CSV header and rows.
void write_csv(std::ostream& os, const Table& table, const Header& header);
/// {"config": {...}, "columns": [...], "rows": [[...], ...]}. Non-finite
/// numbers become null.
void write_json(std::ostream& os, const Table& table, const Header& header);

}  // namespace symres::tools
