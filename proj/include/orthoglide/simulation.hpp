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

#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "orthoglide/dynamics.hpp"
#include "orthoglide/trajectory.hpp"

namespace orthoglide {

struct SimulationRow {
  double t = 0.0;
  Vec3d r = Vec3d::Zero();
  Vec3d lambda = Vec3d::Zero();
  Vec3d lambda_dot = Vec3d::Zero();
  Vec3d lambda_ddot = Vec3d::Zero();
  std::array<double, 6> phi{};  // phi21A, phi32A, phi21B, phi32B, phi21C, phi32C
  Vec3d force = Vec3d::Zero();
  Vec3d power = Vec3d::Zero();
};

/// Column names of the CSV output, in order.
inline constexpr std::array<std::string_view, 25> kCsvColumns = {
    "t",      "x",      "y",      "z",      "lamA",   "lamB",   "lamC",
    "dlamA",  "dlamB",  "dlamC",  "ddlamA", "ddlamB", "ddlamC", "phi21A",
    "phi32A", "phi21B", "phi32B", "phi21C", "phi32C", "fA",     "fB",
    "fC",     "pA",     "pB",     "pC"};

/// Evaluates the full inverse kinematics and dynamics at `samples` uniform
/// times on [0, t_end]. Errors are rethrown with the offending time.
std::vector<SimulationRow> simulate(const RobotModel<double>& model,
                                    const Trajectory& trajectory, double t_end,
                                    int samples);

SimulationRow make_row(double t, const DynamicsSample<double>& sample,
                       const PlatformState<double>& state);

void write_csv(std::ostream& out, const std::vector<SimulationRow>& rows);
void emit_csv(const std::vector<SimulationRow>& rows, const std::filesystem::path& path);

std::vector<SimulationRow> read_csv(std::istream& in);
std::vector<SimulationRow> read_csv(const std::filesystem::path& path);

}  // namespace orthoglide
