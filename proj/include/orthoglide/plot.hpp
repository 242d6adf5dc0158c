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

#include <filesystem>
#include <string>
#include <vector>

#include "orthoglide/simulation.hpp"

namespace orthoglide {

struct Series {
  std::string title;
  std::string y_label;
  std::vector<double> t;
  std::vector<double> y;
};

/// Standalone SVG 1.1 line chart of one time series.
std::string render_svg(const Series& series);

/// Writes plot_lamA/B/C.svg and plot_pA/B/C.svg for `rows` into out_dir and
/// returns the written paths.
std::vector<std::filesystem::path> render_plots(const std::vector<SimulationRow>& rows,
                                                const std::filesystem::path& out_dir);

/// Reads a simulation CSV and renders its plots.
std::vector<std::filesystem::path> render_plots(const std::filesystem::path& csv,
                                                const std::filesystem::path& out_dir);

}  // namespace orthoglide
