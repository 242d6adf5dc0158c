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

// Command-line front end: ik, simulate, plot, verify.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "orthoglide/plot.hpp"
#include "orthoglide/simulation.hpp"
#include "orthoglide/verify.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitWorkspace = 2;

orthoglide::RobotModel<double> model_from(const std::string& config) {
  return config.empty() ? orthoglide::default_model<double>() : orthoglide::load_model(config);
}

int run_ik(double x, double y, double z, const std::string& config) {
  const auto model = model_from(config);
  const orthoglide::Vec3d r(x, y, z);
  const auto q = orthoglide::inverse_geometry(r, model);
  const auto jp = orthoglide::jacobians(r, orthoglide::slider_positions(q), model);
  const auto res = orthoglide::constraint_residuals(r, orthoglide::slider_positions(q), model);
  std::printf("%-4s %16s %16s %16s\n", "leg", "lambda [m]", "phi21 [rad]", "phi32 [rad]");
  for (auto leg : orthoglide::kLegs) {
    const auto& ql = q[orthoglide::leg_index(leg)];
    std::printf("%-4c %16.9e %16.9e %16.9e\n", orthoglide::leg_name(leg), ql.lambda, ql.phi21,
                ql.phi32);
  }
  std::printf("det(J1) = %.9e\ndet(J2) = %.9e\n", jp.det_J1(), jp.det_J2());
  std::printf("max |residual| = %.3e m^2\n", res.cwiseAbs().maxCoeff());
  return 0;
}

int run_simulate(const std::string& config, double t_end, int samples, const std::string& out) {
  const auto model = model_from(config);
  orthoglide::CosineTrajectory<double> traj;
  traj.duration = t_end;
  const auto rows = orthoglide::simulate(model, traj, t_end, samples);
  if (out.empty() || out == "-") {
    orthoglide::write_csv(std::cout, rows);
  } else {
    orthoglide::emit_csv(rows, out);
    std::cerr << "wrote " << rows.size() << " rows to " << out << "\n";
  }
  return 0;
}

int run_plot(const std::string& csv, const std::string& out_dir) {
  for (const auto& path : orthoglide::render_plots(csv, out_dir)) {
    std::cout << path.string() << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite_name, const std::string& config) {
  const auto model = model_from(config);
  orthoglide::Suite suite = orthoglide::Suite::kAll;
  if (suite_name == "kin") suite = orthoglide::Suite::kKinematics;
  if (suite_name == "dyn") suite = orthoglide::Suite::kDynamics;
  const auto reports = orthoglide::run_suite(suite, model);
  orthoglide::print_reports(std::cout, reports);
  for (const auto& r : reports) {
    if (!r.pass) return kExitError;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthoglide inverse kinematics and dynamics"};
  app.require_subcommand(1);

  std::string config;

  auto* ik = app.add_subcommand("ik", "inverse geometry for one platform position");
  double x = 0.0, y = 0.0, z = 0.0;
  ik->add_option("x", x, "x of G [m]")->required();
  ik->add_option("y", y, "y of G [m]")->required();
  ik->add_option("z", z, "z of G [m]")->required();
  ik->add_option("--config", config, "robot parameter file (key=value)")
      ->check(CLI::ExistingFile);

  auto* sim = app.add_subcommand("simulate", "sweep the reference trajectory, emit CSV");
  double t_end = 2.0;
  int samples = 201;
  std::string out_csv;
  sim->add_option("--config", config, "robot parameter file (key=value)")
      ->check(CLI::ExistingFile);
  sim->add_option("--t-end", t_end, "end of the time window [s]")->check(CLI::PositiveNumber);
  sim->add_option("--samples", samples, "number of uniform samples")->check(CLI::Range(2, 10000000));
  sim->add_option("--out", out_csv, "output CSV path (stdout when omitted)");

  auto* plot = app.add_subcommand("plot", "render SVG plots from a simulation CSV");
  std::string csv;
  std::string out_dir = ".";
  plot->add_option("csv", csv, "simulation CSV")->required()->check(CLI::ExistingFile);
  plot->add_option("--out", out_dir, "output directory");

  auto* verify = app.add_subcommand("verify", "run the numerical oracle suite");
  std::string suite = "all";
  verify->add_option("--suite", suite, "all | kin | dyn")
      ->check(CLI::IsMember({"all", "kin", "dyn"}));
  verify->add_option("--config", config, "robot parameter file (key=value)")
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ik) return run_ik(x, y, z, config);
    if (*sim) return run_simulate(config, t_end, samples, out_csv);
    if (*plot) return run_plot(csv, out_dir);
    if (*verify) return run_verify(suite, config);
  } catch (const orthoglide::OutOfWorkspace& e) {
    std::cerr << "out of workspace: " << e.what() << "\n";
    return kExitWorkspace;
  } catch (const orthoglide::NearSingular& e) {
    std::cerr << "singular configuration: " << e.what() << "\n";
    return kExitWorkspace;
  } catch (const orthoglide::SingularMatrix& e) {
    std::cerr << "singular configuration: " << e.what() << "\n";
    return kExitWorkspace;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
