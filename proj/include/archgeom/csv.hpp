// Copyright 2026 The archgeom Authors.
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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "archgeom/errors.hpp"
#include "archgeom/report.hpp"
#include "archgeom/stats.hpp"

namespace archgeom {

/// Bad cell in a numeric CSV. Rows and columns are 1-based, row 1 = header.
class CsvError : public InputError {
 public:
  CsvError(int row, int column, const std::string& what)
      : InputError("csv row " + std::to_string(row) + ", column " + std::to_string(column) + ": " + what),
        row_(row),
        column_(column) {}

  int row() const { return row_; }
  int column() const { return column_; }

 private:
  int row_;
  int column_;
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Header row of labels, then one numeric row per scale pair. Each column
/// becomes a DimSeries. Blank lines are ignored.
inline std::vector<DimSeries> parse_dim_csv(std::string_view text) {
  std::vector<DimSeries> cols;
  int row = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (detail::trim(line).empty()) continue;
    ++row;
    const auto fields = detail::split_fields(line);
    if (row == 1) {
      for (std::size_t c = 0; c < fields.size(); ++c) {
        const auto label = detail::trim(fields[c]);
        if (label.empty()) throw CsvError(row, static_cast<int>(c) + 1, "empty column label");
        cols.push_back({std::string(label), {}});
      }
      continue;
    }
    if (fields.size() != cols.size()) {
      throw CsvError(row, static_cast<int>(std::min(fields.size(), cols.size())) + 1,
                     "expected " + std::to_string(cols.size()) + " fields, found " + std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      const auto v = parse_double(fields[c]);
      if (!v) throw CsvError(row, static_cast<int>(c) + 1, "not a number: '" + std::string(detail::trim(fields[c])) + "'");
      cols[c].values.push_back(*v);
    }
  }
  if (cols.empty()) throw CsvError(1, 1, "missing header row");
  if (cols.front().values.size() < 2) throw CsvError(row + 1, 1, "at least 2 data rows are required");
  return cols;
}

}  // namespace archgeom
