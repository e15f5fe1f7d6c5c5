// Copyright 2026 The unruhent Authors
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

#include "unruhent/errors.hpp"
#include "unruhent/harness.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

namespace unruhent {
namespace {

using nlohmann::json;

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("unruhent_test_" + name)).string();
}

TEST(ParseComplex, Examples) {
  EXPECT_EQ(parse_complex("0.5"), Complex(0.5, 0.0));
  EXPECT_EQ(parse_complex("-1"), Complex(-1.0, 0.0));
  EXPECT_EQ(parse_complex("0.3+0.4j"), Complex(0.3, 0.4));
  EXPECT_EQ(parse_complex("2e-1-1j"), Complex(0.2, -1.0));
  EXPECT_EQ(parse_complex("j"), Complex(0.0, 1.0));
  EXPECT_EQ(parse_complex("-0.5j"), Complex(0.0, -0.5));
  EXPECT_EQ(parse_complex(" 0.25i "), Complex(0.0, 0.25));
  EXPECT_THROW(parse_complex(""), UsageError);
  EXPECT_THROW(parse_complex("abc"), UsageError);
  EXPECT_THROW(parse_complex("1+2"), UsageError);
}

TEST(FormatComplex, RoundTrips) {
  for (Complex z : {Complex(0.1, 0.0), Complex(-0.3, 0.7), Complex(1.0 / 3.0, -2.0 / 7.0)})
    EXPECT_EQ(parse_complex(format_complex(z)), z);
}

TEST(ParseFamily, Examples) {
  const double s = 1.0 / std::numbers::sqrt2;
  const StateFamily f = parse_family("0.7071067811865476,0.7071067811865476,1,0,0,1");
  EXPECT_NEAR(f.p.real(), s, 1e-15);
  EXPECT_EQ(f.a1, Complex(1.0, 0.0));
  EXPECT_EQ(f.b2, Complex(1.0, 0.0));

  EXPECT_THROW(parse_family("1,1,1,0,0,1"), UsageError);
  EXPECT_THROW(parse_family("1,0,1,0,0"), UsageError);
  const StateFamily n = parse_family("1,1,3,4j,0,2", true);
  EXPECT_NEAR(std::norm(n.p) + std::norm(n.q), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(n.a1 - 0.6), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(n.a2 - Complex(0.0, 0.8)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(n.b2 - 1.0), 0.0, 1e-14);
  EXPECT_THROW(parse_family("0,0,1,0,0,1", true), UsageError);

  const StateFamily bell = StateFamily::bell_like();
  const StateFamily back = parse_family(format_family(bell));
  EXPECT_EQ(back.p, bell.p);
  EXPECT_EQ(back.b2, bell.b2);
}

TEST(SweepConfig, DefaultsAndValidation) {
  SweepConfig c;
  EXPECT_EQ(c.r_points, 50);
  EXPECT_EQ(c.q_right_values.size(), 8u);
  ASSERT_EQ(c.orderings.size(), 2u);
  EXPECT_NO_THROW(c.validate());
  c.r_points = 0;
  EXPECT_THROW(c.validate(), UsageError);
  c = SweepConfig{};
  c.q_right_values = {1.5};
  EXPECT_THROW(c.validate(), UsageError);
  c = SweepConfig{};
  c.orderings.clear();
  EXPECT_THROW(c.validate(), UsageError);
}

TEST(ConfigText, ParsesKeysAndComments) {
  SweepConfig c;
  apply_config_text(c, "# comment\nr_points = 5\nqr=0.5,1\n\nordering=physical,02134\nthreads=3\nout=x.csv\n");
  EXPECT_EQ(c.r_points, 5);
  EXPECT_EQ(c.q_right_values, (std::vector<double>{0.5, 1.0}));
  ASSERT_EQ(c.orderings.size(), 2u);
  EXPECT_EQ(c.orderings[1].digits(), "02134");
  EXPECT_EQ(c.threads, 3u);
  EXPECT_EQ(c.output_path, "x.csv");

  EXPECT_THROW(apply_config_text(c, "colour=blue\n"), UsageError);
  EXPECT_THROW(apply_config_text(c, "r_points\n"), UsageError);
  EXPECT_THROW(apply_config_text(c, "threads=0\n"), UsageError);
  EXPECT_THROW(apply_config_text(c, "r_points=many\n"), UsageError);
}

TEST(ConfigText, DescribeRoundTrips) {
  SweepConfig c;
  c.r_points = 7;
  c.q_right_values = {0.1, 1.0 / 3.0};
  c.orderings = {OperatorOrdering::legacy_interleaved(), OperatorOrdering::parse("04321")};
  c.output_path = "out.csv";
  SweepConfig back;
  apply_config_text(back, describe_config(c));
  EXPECT_EQ(describe_config(back), describe_config(c));
  EXPECT_EQ(back.q_right_values, c.q_right_values);
}

TEST(ConfigFile, MissingFileIsIoError) {
  SweepConfig c;
  EXPECT_THROW(apply_config_file(c, "/nonexistent/dir/none.cfg"), IoError);
  const std::string path = temp_path("cfg.txt");
  std::ofstream(path) << "r_points=3\n";
  apply_config_file(c, path);
  EXPECT_EQ(c.r_points, 3);
  std::filesystem::remove(path);
}

TEST(WriteTextFile, Errors) {
  EXPECT_THROW(write_text_file("/nonexistent/dir/out.txt", "x"), IoError);
  const std::string path = temp_path("write.txt");
  write_text_file(path, "hello\n");
  std::ifstream in(path);
  std::string s;
  std::getline(in, s);
  EXPECT_EQ(s, "hello");
  std::filesystem::remove(path);
}

TEST(Sweep, DefaultGridShape) {
  const SweepConfig c;
  const auto rows = run_sweep(c);
  ASSERT_EQ(rows.size(), 800u);
  EXPECT_EQ(rows.front().ordering, "physical");
  EXPECT_EQ(rows.front().r, 0.0);
  EXPECT_EQ(rows.front().q_right, 0.0);
  EXPECT_EQ(rows[49].r, kInfiniteAcceleration);
  EXPECT_EQ(rows[50].q_right, 0.3);
  EXPECT_EQ(rows[400].ordering, "legacy-interleaved");
  for (const auto& row : rows) {
    EXPECT_GE(row.negativity, 0.0);
    EXPECT_LE(row.negativity, 0.5 + 1e-9);
  }

  std::vector<double> phys, legacy;
  for (const auto& row : rows) {
    if (row.q_right == 1.0 && row.r == 0.0 && row.ordering == "physical") EXPECT_NEAR(row.negativity, 0.5, 1e-12);
    if (row.r != kInfiniteAcceleration) continue;
    (row.ordering == "physical" ? phys : legacy).push_back(row.negativity);
  }
  ASSERT_EQ(phys.size(), 8u);
  for (double v : phys) EXPECT_NEAR(v, phys.front(), 1e-10);
  const auto [lo, hi] = std::minmax_element(legacy.begin(), legacy.end());
  EXPECT_GT(*hi - *lo, 0.01);
}

TEST(Sweep, CsvFormat) {
  SweepConfig c;
  c.r_points = 2;
  c.q_right_values = {1.0};
  c.orderings = {OperatorOrdering::physical()};
  const auto lines = lines_of(sweep_csv(run_sweep(c)));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "r,q_R,ordering,negativity");
  EXPECT_EQ(lines[1], "0,1,physical,0.5");
  EXPECT_EQ(lines[2], "0.785398163397,1,physical,0.25");
}

TEST(Sweep, DeterministicAcrossRunsAndThreads) {
  SweepConfig c;
  c.r_points = 12;
  c.orderings = {OperatorOrdering::physical(), OperatorOrdering::legacy_interleaved(), OperatorOrdering::parse("03412")};
  const std::string first = sweep_csv(run_sweep(c));
  EXPECT_EQ(sweep_csv(run_sweep(c)), first);
  c.threads = 4;
  EXPECT_EQ(sweep_csv(run_sweep(c)), first);
}

TEST(Gnuplot, OneCurvePerPair) {
  SweepConfig c;
  c.q_right_values = {0.5, 1.0};
  const std::string script = gnuplot_script(c, "data.csv");
  EXPECT_NE(script.find("data.csv"), std::string::npos);
  std::size_t curves = 0;
  for (std::size_t pos = script.find("title"); pos != std::string::npos; pos = script.find("title", pos + 1)) ++curves;
  EXPECT_GE(curves, 4u);
}

TEST(SingleReport, RoutesAgreeAtInfiniteAcceleration) {
  const json j = json::parse(single_report_json(StateFamily::bell_like(),
                                                UnruhParams::from_real(kInfiniteAcceleration, 0.8),
                                                OperatorOrdering::physical()));
  EXPECT_EQ(j["parameters"]["ordering"], "physical");
  EXPECT_EQ(j["reduced_density_matrix"]["dims"], json::array({2, 4}));
  EXPECT_EQ(j["reduced_density_matrix"]["row_major"].size(), 64u);
  EXPECT_EQ(j["partial_transpose_spectrum"].size(), 8u);
  EXPECT_NEAR(j["negativity"]["qubit_trace"].get<double>(), 0.25, 1e-12);
  EXPECT_NEAR(j["negativity"]["subalgebra"].get<double>(), 0.25, 1e-12);
  EXPECT_NEAR(j["negativity"]["infinite_acceleration"].get<double>(), 0.25, 1e-12);
  EXPECT_LE(j["max_route_difference"].get<double>(), 1e-10);
}

TEST(SingleReport, FiniteAccelerationOmitsLimitRoute) {
  const json j = json::parse(single_report_json(StateFamily::bell_like(), UnruhParams::from_real(0.3, 0.8),
                                                OperatorOrdering::legacy_interleaved()));
  EXPECT_FALSE(j["negativity"].contains("infinite_acceleration"));
  EXPECT_EQ(j["parameters"]["permutation"], "01423");
}

TEST(OrderingsReport, TextAndJsonCarrySameRows) {
  const auto grid = default_q_right_grid();
  const auto rows = classify_orderings(StateFamily::bell_like(), grid);
  const json j = json::parse(orderings_json(StateFamily::bell_like(), grid, rows));
  ASSERT_EQ(j["orderings"].size(), rows.size());
  const auto text = lines_of(orderings_text(StateFamily::bell_like(), grid, rows));
  std::size_t data_lines = 0;
  for (const auto& line : text)
    if (!line.empty() && line[0] != '#' && line.rfind("permutation", 0) != 0) ++data_lines;
  EXPECT_EQ(data_lines, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(j["orderings"][i]["permutation"], rows[i].ordering.digits());
    EXPECT_EQ(j["orderings"][i]["spread"].get<double>(), rows[i].spread);
    EXPECT_EQ(j["orderings"][i]["convergent"].get<bool>(), rows[i].convergent);
  }
}

TEST(Checks, AllPass) {
  const CheckReport report = run_checks();
  EXPECT_GT(report.results.size(), 20u);
  for (const auto& r : report.results) EXPECT_TRUE(r.passed) << r.name << " measured " << r.measured;
  EXPECT_TRUE(report.all_passed());
  const json j = json::parse(report.to_json());
  EXPECT_TRUE(j.is_object() || j.is_array());
  EXPECT_NE(report.to_text().find("PASS"), std::string::npos);
}

}  // namespace
}  // namespace unruhent
