// Copyright 2026 The qtedge Authors
//
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

#pragma once

// Tabular output: CSV with fixed formatting and a standalone SVG line chart.

#include <string>
#include <vector>

namespace qtedge::cli {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  /// Per-row status, written as a trailing "status" column when non-empty.
  std::vector<std::string> status;

  /// Index of a column; throws DomainError when absent.
  std::size_t column(const std::string& name) const;
};

/// "%.11e" (12 significant digits); nan, inf and -inf spelled out.
std::string format_number(double x);

/// Header row plus one line per row, comma-separated, LF endings.
std::string to_csv(const Table& table);

/// Inverse of to_csv for tables it produced.
Table parse_csv(const std::string& text);

struct SvgChart {
  std::string svg;
  int skipped = 0;  ///< rows dropped as non-finite (or non-positive on a log axis)
};

SvgChart render_svg_line_chart(const Table& table, const std::string& x_col,
                               const std::string& y_col, bool log_x, bool log_y);

/// Writes bytes verbatim; throws IoError on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace qtedge::cli
