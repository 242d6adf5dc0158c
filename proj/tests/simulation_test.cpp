// Copyright 2026 The Orthoglide Dynamics Authors
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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "orthoglide/plot.hpp"
#include "orthoglide/simulation.hpp"

namespace orthoglide {
namespace {

namespace fs = std::filesystem;

const RobotModel<double> kModel = default_model<double>();

std::vector<SimulationRow> reference_rows(int samples = 201) {
  return simulate(kModel, CosineTrajectory<double>{}, 2.0, samples);
}

std::string to_csv(const std::vector<SimulationRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("orthoglide_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(TrajectoryTest, StartsAtRest) {
  const auto s = CosineTrajectory<double>{}(0.0);
  EXPECT_EQ(s.r, Vec3d::Zero());
  EXPECT_EQ(s.v, Vec3d::Zero());
  const double w2 = std::pow(std::numbers::pi / 3, 2);
  EXPECT_LT((s.a - w2 * Vec3d(0.05, 0.10, -0.20)).norm(), 1e-15);
}

TEST(TrajectoryTest, HalfAmplitudeAtOneSecond) {
  const auto s = CosineTrajectory<double>{}(1.0);
  EXPECT_LT((s.r - Vec3d(0.025, 0.05, -0.10)).norm(), 1e-15);
}

TEST(TrajectoryTest, FullAmplitudeAtThreeSeconds) {
  const auto s = CosineTrajectory<double>{}(3.0);
  EXPECT_LT((s.r - Vec3d(0.10, 0.20, -0.40)).norm(), 1e-15);
  EXPECT_LT(s.v.norm(), 1e-15);
}

TEST(TrajectoryTest, DerivativesMatchFiniteDifferences) {
  const CosineTrajectory<double> traj;
  const double h = 1e-5;
  for (double t : {0.2, 1.0, 1.7}) {
    EXPECT_LT(((traj(t + h).r - traj(t - h).r) / (2 * h) - traj(t).v).norm(), 1e-9);
    EXPECT_LT(((traj(t + h).v - traj(t - h).v) / (2 * h) - traj(t).a).norm(), 1e-9);
  }
}

TEST(SimulateTest, RowCountAndTimes) {
  const auto rows = reference_rows();
  ASSERT_EQ(rows.size(), 201u);
  EXPECT_EQ(rows.front().t, 0.0);
  EXPECT_EQ(rows.back().t, 2.0);
  EXPECT_NEAR(rows[100].t, 1.0, 1e-15);
  EXPECT_EQ(reference_rows(2).size(), 2u);
  EXPECT_THROW(reference_rows(1), Error);
}

TEST(SimulateTest, FigureShape) {
  const auto rows = reference_rows();
  EXPECT_EQ(rows.front().power, Vec3d::Zero());
  EXPECT_NEAR(rows[100].lambda(0), 0.032385, 1e-5);
  EXPECT_NEAR(rows[100].lambda(1), 0.056273, 1e-5);
  EXPECT_NEAR(rows[100].lambda(2), -0.098160, 1e-5);
  for (std::size_t n = 1; n < rows.size(); ++n) {
    EXPECT_GT(rows[n].lambda(0), rows[n - 1].lambda(0)) << "row " << n;
  }
}

TEST(SimulateTest, RowsAreConsistent) {
  for (const auto& row : reference_rows()) {
    EXPECT_LT(constraint_residuals(row.r, row.lambda, kModel).cwiseAbs().maxCoeff(), 1e-10);
    for (int j = 0; j < 3; ++j) {
      EXPECT_DOUBLE_EQ(row.power(j), row.force(j) * row.lambda_dot(j));
    }
  }
}

TEST(SimulateTest, OutOfWorkspaceReportsTime) {
  CosineTrajectory<double> wide;
  wide.amplitude = Vec3d(0.5, 0.0, 0.0);
  try {
    simulate(kModel, wide, 3.0, 31);
    FAIL() << "expected OutOfWorkspace";
  } catch (const OutOfWorkspace& e) {
    EXPECT_NE(std::string(e.what()).find("t = "), std::string::npos);
  }
}

TEST(CsvTest, LayoutAndRoundTrip) {
  const auto rows = reference_rows();
  const std::string text = to_csv(rows);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 202);
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(text.substr(0, text.find('\n')).rfind("t,x,y,z,lamA,lamB,lamC", 0), 0u);
  std::istringstream in(text);
  const auto back = read_csv(in);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t n = 0; n < rows.size(); ++n) {
    EXPECT_NEAR(back[n].lambda(0), rows[n].lambda(0), 1e-9 * (1 + std::abs(rows[n].lambda(0))));
    EXPECT_NEAR(back[n].force(2), rows[n].force(2), 1e-8 * std::abs(rows[n].force(2)));
    EXPECT_NEAR(back[n].phi[3], rows[n].phi[3], 1e-9);
  }
}

TEST(CsvTest, EmptyRowsGiveHeaderOnly) {
  const std::string text = to_csv({});
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
  std::istringstream in(text);
  EXPECT_TRUE(read_csv(in).empty());
}

TEST(CsvTest, Deterministic) { EXPECT_EQ(to_csv(reference_rows()), to_csv(reference_rows())); }

TEST(CsvTest, MalformedInput) {
  std::istringstream empty("");
  EXPECT_THROW(read_csv(empty), MalformedCsv);
  std::istringstream header("a,b,c\n");
  EXPECT_THROW(read_csv(header), MalformedCsv);
  std::string text = to_csv(reference_rows(2));
  text += "1,2,3\n";
  std::istringstream short_row(text);
  EXPECT_THROW(read_csv(short_row), MalformedCsv);
  std::string bad = to_csv({});
  bad += "x" + std::string(24, ',') + "\n";
  std::istringstream bad_number(bad);
  EXPECT_THROW(read_csv(bad_number), MalformedCsv);
}

TEST(CsvTest, FileErrors) {
  EXPECT_THROW(read_csv(fs::path("/nonexistent/sim.csv")), IoError);
  EXPECT_THROW(emit_csv(reference_rows(2), "/nonexistent/dir/sim.csv"), IoError);
}

TEST(PlotTest, WritesSixSvgFiles) {
  const fs::path dir = scratch_dir("plots");
  const fs::path csv = dir / "sim.csv";
  emit_csv(reference_rows(), csv);
  const auto paths = render_plots(csv, dir);
  ASSERT_EQ(paths.size(), 6u);
  for (const char* name : {"plot_lamA.svg", "plot_lamB.svg", "plot_lamC.svg", "plot_pA.svg",
                           "plot_pB.svg", "plot_pC.svg"}) {
    const fs::path p = dir / name;
    ASSERT_TRUE(fs::exists(p)) << name;
    EXPECT_GT(fs::file_size(p), 500u) << name;
    std::ifstream in(p);
    std::stringstream content;
    content << in.rdbuf();
    EXPECT_NE(content.str().find("<svg"), std::string::npos);
    EXPECT_NE(content.str().find("<polyline"), std::string::npos);
  }
  fs::remove_all(dir);
}

TEST(PlotTest, SvgIsSelfContained) {
  Series s{"lambda A", "lambda [m]", {0.0, 1.0, 2.0}, {0.0, 0.5, 0.25}};
  const std::string svg = render_svg(s);
  EXPECT_EQ(svg.find("href"), std::string::npos);
  EXPECT_NE(svg.find("lambda A"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(PlotTest, MissingCsv) {
  EXPECT_THROW(render_plots(fs::path("/nonexistent/sim.csv"), fs::temp_directory_path()),
               IoError);
}

}  // namespace
}  // namespace orthoglide
