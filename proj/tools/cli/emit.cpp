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

#include "emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "config.hpp"
#include "qtedge/errors.hpp"

namespace qtedge::cli {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 20.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 60.0;

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string short_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  bool log = false;

  double map(double v) const { return log ? std::log10(v) : v; }
  double unit(double v) const {
    const double a = map(lo);
    const double b = map(hi);
    return b > a ? (map(v) - a) / (b - a) : 0.5;
  }
};

}  // namespace

std::size_t Table::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw DomainError("no column named '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return buf;
}

std::string to_csv(const Table& table) {
  const bool with_status = !table.status.empty();
  std::string out;
  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    if (j) out += ',';
    out += table.columns[j];
  }
  if (with_status) out += table.columns.empty() ? "status" : ",status";
  out += '\n';
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    if (row.size() != table.columns.size()) throw DomainError("CSV: table is not rectangular");
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += format_number(row[j]);
    }
    if (with_status) {
      if (!row.empty()) out += ',';
      out += table.status.at(i);
    }
    out += '\n';
  }
  return out;
}

Table parse_csv(const std::string& text) {
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    return cells;
  };
  std::istringstream in(text);
  std::string line;
  Table t;
  if (!std::getline(in, line)) return t;
  t.columns = split(line);
  const bool with_status = !t.columns.empty() && t.columns.back() == "status";
  if (with_status) t.columns.pop_back();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split(line);
    if (cells.size() != t.columns.size() + (with_status ? 1 : 0)) {
      throw DomainError("CSV: ragged row");
    }
    if (with_status) {
      t.status.push_back(cells.back());
      cells.pop_back();
    }
    std::vector<double> row;
    for (const auto& c : cells) {
      if (c == "nan") row.push_back(std::numeric_limits<double>::quiet_NaN());
      else if (c == "inf") row.push_back(std::numeric_limits<double>::infinity());
      else if (c == "-inf") row.push_back(-std::numeric_limits<double>::infinity());
      else row.push_back(std::stod(c));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

SvgChart render_svg_line_chart(const Table& table, const std::string& x_col,
                               const std::string& y_col, bool log_x, bool log_y) {
  SvgChart chart;
  const std::size_t xi = table.column(x_col);
  const std::size_t yi = table.column(y_col);
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : table.rows) {
    const double x = row[xi];
    const double y = row[yi];
    const bool ok = std::isfinite(x) && std::isfinite(y) && (!log_x || x > 0.0) &&
                    (!log_y || y > 0.0);
    if (ok) pts.emplace_back(x, y);
    else ++chart.skipped;
  }

  Axis ax{1.0, 10.0, log_x};
  Axis ay{1.0, 10.0, log_y};
  if (!log_x) ax = {0.0, 1.0, false};
  if (!log_y) ay = {0.0, 1.0, false};
  if (!pts.empty()) {
    ax.lo = ax.hi = pts.front().first;
    ay.lo = ay.hi = pts.front().second;
    for (const auto& [x, y] : pts) {
      ax.lo = std::min(ax.lo, x);
      ax.hi = std::max(ax.hi, x);
      ay.lo = std::min(ay.lo, y);
      ay.hi = std::max(ay.hi, y);
    }
  }

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + pw * ax.unit(x); };
  auto py = [&](double y) { return kTop + ph * (1.0 - ay.unit(y)); };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
    << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
    << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" fill=\"white\"/>\n"
    << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
    << "\" fill=\"none\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int k = 0; k < kTicks; ++k) {
    const double u = static_cast<double>(k) / (kTicks - 1);
    const double xv = ax.log ? std::pow(10.0, std::log10(ax.lo) + u * (std::log10(ax.hi) - std::log10(ax.lo)))
                             : ax.lo + u * (ax.hi - ax.lo);
    const double yv = ay.log ? std::pow(10.0, std::log10(ay.lo) + u * (std::log10(ay.hi) - std::log10(ay.lo)))
                             : ay.lo + u * (ay.hi - ay.lo);
    const double tx = kLeft + pw * u;
    const double ty = kTop + ph * (1.0 - u);
    s << "<line x1=\"" << fixed(tx, 2) << "\" y1=\"" << kTop + ph << "\" x2=\"" << fixed(tx, 2)
      << "\" y2=\"" << kTop + ph + 5 << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << fixed(tx, 2) << "\" y=\"" << kTop + ph + 18
      << "\" font-size=\"11\" text-anchor=\"middle\">" << short_number(xv) << "</text>\n"
      << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fixed(ty, 2) << "\" x2=\"" << kLeft
      << "\" y2=\"" << fixed(ty, 2) << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << kLeft - 8 << "\" y=\"" << fixed(ty + 4, 2)
      << "\" font-size=\"11\" text-anchor=\"end\">" << short_number(yv) << "</text>\n";
  }
  s << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 15
    << "\" font-size=\"13\" text-anchor=\"middle\">" << escape(x_col)
    << (log_x ? " (log)" : "") << "</text>\n"
    << "<text x=\"15\" y=\"" << kTop + ph / 2 << "\" font-size=\"13\" text-anchor=\"middle\" "
    << "transform=\"rotate(-90 15 " << kTop + ph / 2 << ")\">" << escape(y_col)
    << (log_y ? " (log)" : "") << "</text>\n";
  if (!pts.empty()) {
    s << "<polyline fill=\"none\" stroke=\"#1f4e9a\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) s << ' ';
      s << fixed(px(pts[i].first), 3) << ',' << fixed(py(pts[i].second), 3);
    }
    s << "\"/>\n";
  }
  s << "</svg>\n";
  chart.svg = s.str();
  return chart;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace qtedge::cli
