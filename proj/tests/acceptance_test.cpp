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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orthoglide/simulation.hpp"
#include "orthoglide/verify.hpp"

namespace {

using namespace orthoglide;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

const RobotModel<double>& model() {
  static const RobotModel<double> m = default_model<double>();
  return m;
}

Outcome zero_pose() {
  const auto q = inverse_geometry(Vec3d::Zero().eval(), model());
  double err = 0.0;
  for (const auto& leg : q) {
    err = std::max({err, std::abs(leg.lambda), std::abs(leg.phi21), std::abs(leg.phi32)});
  }
  return {err < 1e-14, fmt("max |q| = %.3e (tol 1e-14)", err)};
}

Outcome random_round_trip() {
  std::mt19937 rng(2026);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Vec3d r(u(rng), u(rng), u(rng));
    const auto q = inverse_geometry(r, model());
    worst = std::max(worst,
                     constraint_residuals(r, slider_positions(q), model()).cwiseAbs().maxCoeff());
  }
  return {worst < 1e-12, fmt("1000 poses, max residual %.3e (tol 1e-12)", worst)};
}

Outcome jacobian_identity() {
  const CosineTrajectory<double> traj;
  double worst = 0.0;
  for (int n = 0; n <= 200; ++n) {
    const auto s = traj(0.01 * n);
    const auto q = joint_rates(inverse_geometry(s.r, model()), s.v, model());
    const auto jp = jacobians(s.r, slider_positions(q), model());
    worst = std::max(worst, (jp.J1 * slider_rates(q) - jp.J2 * s.v).norm());
  }
  return {worst < 1e-10, fmt("201 samples, max |J1 l' - J2 r'| = %.3e (tol 1e-10)", worst)};
}

Outcome fd_kinematics() {
  const auto reports = fd_kinematics_check(CosineTrajectory<double>{}, model(), 1e-5);
  return {reports[0].pass && reports[1].pass,
          fmt("rates rel %.3e (tol 1e-6), accels rel %.3e (tol 1e-4)", reports[0].max_rel_error,
              reports[1].max_rel_error)};
}

Outcome static_forces() {
  const auto report = static_equivalence(model(), 50, 1e-6);
  return {report.pass, fmt("50 poses, max |f - f_static| = %.3e N (tol 1e-6 N)",
                           report.max_abs_error)};
}

Outcome lagrangian() {
  const auto report = lagrangian_equivalence(CosineTrajectory<double>{}, model(), 21, 2.0, 1e-3);
  return {report.pass, fmt("21 samples, max rel error %.3e (tol 1e-3) at t = %.2f s",
                           report.max_rel_error, report.worst_time)};
}

Outcome energy() {
  const auto report = energy_balance(CosineTrajectory<double>{}, 201, model(), 2.0, 1e-5, 1e-4);
  return {report.pass, fmt("201 samples, max rel error %.3e (tol 1e-4) at t = %.2f s",
                           report.max_rel_error, report.worst_time)};
}

Outcome figure_shape() {
  const auto rows = simulate(model(), CosineTrajectory<double>{}, 2.0, 201);
  const SimulationRow& mid = rows[100];
  const Vec3d expected(0.032385, 0.056273, -0.098160);
  const double lam_err = (mid.lambda - expected).cwiseAbs().maxCoeff();
  bool monotone = true;
  for (std::size_t n = 1; n < rows.size(); ++n) monotone &= rows[n].lambda(0) > rows[n - 1].lambda(0);
  const double p0 = rows.front().power.cwiseAbs().maxCoeff();
  const bool pass = std::abs(mid.t - 1.0) < 1e-12 && lam_err <= 1e-5 && monotone && p0 == 0.0;
  return {pass, fmt("|p(0)| = %.1e W, lambda(1 s) off by %.2e m", p0, lam_err) +
                    (monotone ? ", lamA monotone" : ", lamA NOT monotone")};
}

Outcome determinism() {
  auto render = [] {
    std::ostringstream out;
    write_csv(out, simulate(model(), CosineTrajectory<double>{}, 2.0, 201));
    return out.str();
  };
  const std::string a = render();
  const std::string b = render();
  return {a == b && !a.empty(), fmt("%.0f bytes, identical runs", static_cast<double>(a.size()))};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"zero-pose inverse geometry", zero_pose},
      {"random-pose round trip", random_round_trip},
      {"Jacobian identity along trajectory", jacobian_identity},
      {"finite-difference kinematics", fd_kinematics},
      {"static virtual-work equivalence", static_forces},
      {"Lagrangian equivalence", lagrangian},
      {"energy balance", energy},
      {"actuator curve shape", figure_shape},
      {"deterministic output", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    std::printf("[%s] %d. %-36s %s (%.0f ms)\n", outcome.pass ? "PASS" : "FAIL", index, name,
                outcome.detail.c_str(), ms);
    if (!outcome.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
