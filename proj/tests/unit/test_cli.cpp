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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "config.hpp"
#include "qtedge/errors.hpp"
#include "emit.hpp"
#include "run.hpp"

namespace qtedge::cli {
namespace {

RunConfig make_config(Model model, const std::string& command,
                      const std::map<std::string, std::string>& flags = {}) {
  RunConfig c;
  c.model = model;
  c.command = command;
  c.parameters = resolve_parameters(schema(model, command), {}, flags);
  return c;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Config, DefaultsFileAndFlagsLayer) {
  const auto file = parse_config_text(
      "# opo settings\n[opo]\ng0 = 0.7 ; inline\ng1=1.5\n\n[fisher]\ngamma-norm = 0.1\n",
      Model::kOpo, "fidelity");
  EXPECT_EQ(file.at("g0"), "0.7");
  const auto p = resolve_parameters(schema(Model::kOpo, "fidelity"), file, {{"g1", "2"}});
  EXPECT_DOUBLE_EQ(p.at("g0"), 0.7);
  EXPECT_DOUBLE_EQ(p.at("g1"), 2.0);
  EXPECT_DOUBLE_EQ(p.at("t"), 1.0);
}

TEST(Config, Rejections) {
  EXPECT_THROW(parse_config_text("[nosuch]\nx=1\n", Model::kOpo, "fidelity"), DomainError);
  EXPECT_THROW(parse_config_text("[opo]\nbogus=1\n", Model::kOpo, "fidelity"), DomainError);
  EXPECT_THROW(parse_config_text("[opo]\ng0\n", Model::kOpo, "fidelity"), DomainError);
  EXPECT_THROW(resolve_parameters(schema(Model::kOpo, "fidelity"), {}, {{"g0", "abc"}}),
               DomainError);
  EXPECT_THROW(read_config_file("/nonexistent/qtedge.ini", Model::kOpo, "fidelity"), IoError);
  EXPECT_THROW(schema(Model::kIsing, "nosuch"), DomainError);
  EXPECT_THROW(parse_model("spin"), DomainError);
}

TEST(Config, KeysOfSiblingCommandsAreIgnored) {
  const auto file =
      parse_config_text("[opo]\ng0=0.7\nlambda1=0.4\n", Model::kOpo, "fidelity");
  EXPECT_EQ(file.count("lambda1"), 0u);
}

TEST(Config, ChoicesAndIntegers) {
  const auto& s = schema(Model::kIsing, "exact");
  const auto p = resolve_parameters(s, {}, {{"grid", "half-shifted"}});
  EXPECT_DOUBLE_EQ(p.at("grid"), 1.0);
  EXPECT_THROW(resolve_parameters(s, {}, {{"grid", "odd"}}), DomainError);
  EXPECT_THROW(resolve_parameters(s, {}, {{"n", "8.5"}}), DomainError);
}

TEST(Sweep, ValuesAndValidation) {
  SweepSpec s{"t", 1.0, 100.0, 3, Scale::kLog};
  const auto v = s.values();
  ASSERT_EQ(v.size(), 3u);
  EXPECT_NEAR(v[1], 10.0, 1e-12);
  s.start = 0.0;
  EXPECT_THROW(s.validate(), DomainError);
  SweepSpec lin{"t", 0.0, 1.0, 0, Scale::kLinear};
  EXPECT_THROW(lin.validate(), DomainError);
}

TEST(Csv, RoundTripIncludingNonFinite) {
  Table t;
  t.columns = {"x", "y"};
  t.rows = {{0.5, 1.25e-300}, {std::numeric_limits<double>::quiet_NaN(),
                               std::numeric_limits<double>::infinity()}};
  const std::string text = to_csv(t);
  EXPECT_EQ(text.find('\r'), std::string::npos);
  const Table back = parse_csv(text);
  ASSERT_EQ(back.rows.size(), 2u);
  EXPECT_EQ(back.columns, t.columns);
  EXPECT_DOUBLE_EQ(back.rows[0][1], 1.25e-300);
  EXPECT_TRUE(std::isnan(back.rows[1][0]));
  EXPECT_TRUE(std::isinf(back.rows[1][1]));
  EXPECT_EQ(to_csv(back), text);
}

TEST(Csv, EmptyTableHasHeaderOnly) {
  Table t;
  t.columns = {"g", "normalized_fisher"};
  EXPECT_EQ(to_csv(t), "g,normalized_fisher\n");
}

TEST(Csv, StatusColumn) {
  Table t;
  t.columns = {"t", "fidelity"};
  t.rows = {{1.0, 0.5}};
  t.status = {"ok"};
  EXPECT_NE(to_csv(t).find("status"), std::string::npos);
  EXPECT_NE(to_csv(t).find(",ok"), std::string::npos);
}

TEST(Svg, TwoPointsAndEmpty) {
  Table t;
  t.columns = {"x", "y"};
  t.rows = {{1.0, 2.0}, {2.0, 3.0}};
  const auto chart = render_svg_line_chart(t, "x", "y", false, false);
  EXPECT_EQ(chart.skipped, 0);
  EXPECT_NE(chart.svg.find("<polyline"), std::string::npos);
  EXPECT_NE(chart.svg.find("</svg>"), std::string::npos);

  t.rows.clear();
  const auto empty = render_svg_line_chart(t, "x", "y", false, false);
  EXPECT_EQ(empty.svg.find("<polyline"), std::string::npos);
  EXPECT_NE(empty.svg.find("<line"), std::string::npos);
}

TEST(Svg, LogAxisSkipsNonPositive) {
  Table t;
  t.columns = {"x", "y"};
  t.rows = {{1.0, 1e-3}, {2.0, 0.0}, {3.0, 1e3}};
  const auto chart = render_svg_line_chart(t, "x", "y", false, true);
  EXPECT_EQ(chart.skipped, 1);
}

TEST(Run, HelstromScalar) {
  std::ostringstream out, err;
  EXPECT_EQ(run(make_config(Model::kHelstrom, ""), out, err), kExitOk);
  EXPECT_NE(out.str().find("min_error = 0.146446609407"), std::string::npos);
}

TEST(Run, StandardModelQfi) {
  const Row row = evaluate(Model::kStandard, "qfi",
                           resolve_parameters(schema(Model::kStandard, "qfi"), {},
                                              {{"n", "50"}, {"var-q", "0.7"}, {"t", "1.3"}}),
                           false);
  ASSERT_EQ(row[0].first, "qfi");
  EXPECT_NEAR(row[0].second, 4 * 50 * 0.7 * 1.3 * 1.3, 1e-6);
}

TEST(Run, InvalidInputAndIoExitCodes) {
  std::ostringstream out, err;
  EXPECT_EQ(run(make_config(Model::kOpo, "fidelity", {{"g0", "1.5"}}), out, err),
            kExitInvalidInput);
  auto c = make_config(Model::kHelstrom, "");
  c.csv_path = "/nonexistent-dir/out.csv";
  EXPECT_EQ(run(c, out, err), kExitIo);
}

TEST(Run, SweepCarriesStatusColumn) {
  auto c = make_config(Model::kOpo, "fidelity");
  c.sweep = SweepSpec{"g0", 0.8, 1.2, 3, Scale::kLinear};
  std::ostringstream err;
  int warnings = 0;
  const Table t = build_table(c, err, warnings);
  ASSERT_EQ(t.rows.size(), 3u);
  ASSERT_EQ(t.status.size(), 3u);
  EXPECT_EQ(t.status[0], "ok");
  EXPECT_EQ(t.status[2], "invalid");
  EXPECT_GT(warnings, 0);
}

TEST(Run, FisherSweepIsByteDeterministic) {
  const auto dir = std::filesystem::temp_directory_path() / "qtedge_cli_test";
  std::filesystem::create_directories(dir);
  std::string csv[2], svg[2];
  for (int i = 0; i < 2; ++i) {
    auto c = make_config(Model::kFisher, "sweep");
    c.threads = i == 0 ? 1 : 4;
    c.log_x = c.log_y = true;
    c.csv_path = (dir / ("fig" + std::to_string(i) + ".csv")).string();
    c.svg_path = (dir / ("fig" + std::to_string(i) + ".svg")).string();
    std::ostringstream out, err;
    ASSERT_EQ(run(c, out, err), kExitOk) << err.str();
    csv[i] = slurp(c.csv_path);
    svg[i] = slurp(c.svg_path);
  }
  EXPECT_EQ(csv[0], csv[1]);
  EXPECT_EQ(svg[0], svg[1]);
  const Table t = parse_csv(csv[0]);
  EXPECT_EQ(t.rows.size(), 200u);
  EXPECT_EQ(csv[0].rfind("g,normalized_fisher\n", 0), 0u);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace qtedge::cli
