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

#include "orthoglide/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>

namespace orthoglide {

namespace {

constexpr double kTiny = std::numeric_limits<double>::min();

/// Tracks the worst deviation of a swept quantity against a global scale.
class ErrorTracker {
 public:
  explicit ErrorTracker(std::string name) { report_.name = std::move(name); }

  void add(double analytic, double reference, double t) {
    scale_ = std::max(scale_, std::abs(analytic));
    const double err = std::abs(analytic - reference);
    if (err > report_.max_abs_error || !std::isfinite(err)) {
      report_.max_abs_error = err;
      report_.worst_time = t;
    }
  }

  OracleReport finish(double tol) {
    report_.tolerance = tol;
    report_.max_rel_error =
        report_.max_abs_error == 0.0 ? 0.0 : report_.max_abs_error / std::max(scale_, kTiny);
    report_.finalize();
    return report_;
  }

 private:
  OracleReport report_;
  double scale_ = 0.0;
};

std::array<double, 12> rate_vector(const JointState<double>& q) {
  std::array<double, 12> out{};
  for (int i = 0; i < 3; ++i) {
    out[4 * i + 0] = q[i].lambda_dot;
    out[4 * i + 1] = q[i].omega21;
    out[4 * i + 2] = q[i].omega32;
    out[4 * i + 3] = q[i].omega54;
  }
  return out;
}

std::array<double, 12> position_vector(const JointState<double>& q) {
  std::array<double, 12> out{};
  for (int i = 0; i < 3; ++i) {
    out[4 * i + 0] = q[i].lambda;
    out[4 * i + 1] = q[i].phi21;
    out[4 * i + 2] = q[i].phi32;
    out[4 * i + 3] = q[i].phi54;
  }
  return out;
}

std::array<double, 12> accel_vector(const JointState<double>& q) {
  std::array<double, 12> out{};
  for (int i = 0; i < 3; ++i) {
    out[4 * i + 0] = q[i].lambda_ddot;
    out[4 * i + 1] = q[i].eps21;
    out[4 * i + 2] = q[i].eps32;
    out[4 * i + 3] = q[i].eps54;
  }
  return out;
}

JointState<double> rates_at(const Trajectory& traj, double t, const RobotModel<double>& model) {
  const auto s = traj(t);
  return joint_rates(inverse_geometry(s.r, model), s.v, model);
}

Vec3d vee(const Mat3d& m) {
  // Antisymmetric part only; differencing noise lands in the symmetric part.
  return 0.5 * Vec3d(m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1));
}

double sample_time(int i, int samples, double t_end) {
  return samples > 1 ? t_end * static_cast<double>(i) / (samples - 1) : 0.0;
}

}  // namespace

std::vector<BodyPose> body_poses(const Vec3d& r, const RobotModel<double>& model) {
  const auto q = inverse_geometry(r, model);
  std::vector<BodyPose> poses;
  poses.reserve(16);
  for (Leg leg : kLegs) {
    const int i = leg_index(leg);
    const auto frames = leg_frames(leg, model.geometry);
    const auto links = link_states(leg, q[i], model);
    for (int k = 1; k <= kBodiesPerLeg; ++k) {
      if (!in_open_tree(leg, k)) continue;
      const auto props = body_properties(k, frames, model);
      const auto& body = links.body(k);
      BodyPose pose;
      pose.mass = props.mass;
      pose.a_k0 = body.a_k0;
      pose.centre = body.p + body.a_k0.transpose() * props.r_c;
      pose.J_c = shift_inertia<double>(props.J, -props.mass, props.r_c);
      poses.push_back(pose);
    }
  }
  return poses;
}

double potential_energy(const Vec3d& r, const RobotModel<double>& model) {
  double v = 0.0;
  for (const auto& pose : body_poses(r, model)) {
    v -= pose.mass * model.masses.g * model.masses.g_dir.dot(pose.centre);
  }
  return v;
}

namespace {

template <typename Fn>
void for_each_body(const std::array<LegKinematics<double>, 3>& links,
                   const RobotModel<double>& model, Fn&& fn) {
  for (Leg leg : kLegs) {
    const auto& leg_links = links[leg_index(leg)];
    const auto frames = leg_frames(leg, model.geometry);
    for (int k = 1; k <= kBodiesPerLeg; ++k) {
      if (!in_open_tree(leg, k)) continue;
      fn(leg_links.body(k), body_properties(k, frames, model));
    }
  }
}

}  // namespace

double kinetic_energy(const std::array<LegKinematics<double>, 3>& links,
                      const RobotModel<double>& model) {
  double t = 0.0;
  for_each_body(links, model, [&](const LinkKinematics<double>& b,
                                  const BodyProperties<double>& p) {
    t += 0.5 * p.mass * b.v.squaredNorm() + p.mass * b.v.dot(b.omega.cross(p.r_c)) +
         0.5 * b.omega.dot(p.J * b.omega);
  });
  return t;
}

double gravity_power(const std::array<LegKinematics<double>, 3>& links,
                     const RobotModel<double>& model) {
  double power = 0.0;
  for_each_body(links, model, [&](const LinkKinematics<double>& b,
                                  const BodyProperties<double>& p) {
    const Vec3d g_body = b.a_k0 * model.masses.g_dir;
    power += p.mass * model.masses.g * g_body.dot(b.v + b.omega.cross(p.r_c));
  });
  return power;
}

double kinetic_energy_from_poses(const Vec3d& r, const Vec3d& r_dot,
                                 const RobotModel<double>& model, double tau) {
  if (!(tau > 0.0)) throw Error("pose differencing step must be positive");
  std::vector<BodyPose> ahead;
  std::vector<BodyPose> behind;
  try {
    ahead = body_poses(r + tau * r_dot, model);
    behind = body_poses(r - tau * r_dot, model);
  } catch (const OutOfWorkspace& e) {
    throw StepTooLarge(std::string("pose differencing left the workspace: ") + e.what());
  }
  const auto here = body_poses(r, model);
  double t = 0.0;
  for (std::size_t b = 0; b < here.size(); ++b) {
    const Vec3d v_c = (ahead[b].centre - behind[b].centre) / (2.0 * tau);
    // R = a_k0^T maps body to fixed; w~ (fixed) = R_dot R^T.
    const Mat3d r_dot_m = (ahead[b].a_k0 - behind[b].a_k0).transpose() / (2.0 * tau);
    const Vec3d w_fixed = vee(r_dot_m * here[b].a_k0);
    const Vec3d w_body = here[b].a_k0 * w_fixed;
    t += 0.5 * here[b].mass * v_c.squaredNorm() + 0.5 * w_body.dot(here[b].J_c * w_body);
  }
  return t;
}

Vec3d cartesian_to_actuator(const Vec3d& r, const Vec3d& q,
                            const RobotModel<double>& model) {
  const auto joints = inverse_geometry(r, model);
  const auto jp = jacobians(r, slider_positions(joints), model);
  try {
    return jp.J1 * solve3(jp.J2.transpose(), q);
  } catch (const SingularMatrix& e) {
    throw NearSingular(std::string("forward Jacobian: ") + e.what());
  }
}

std::array<OracleReport, 2> fd_kinematics_check(const Trajectory& trajectory,
                                                const RobotModel<double>& model, double h,
                                                double t_end, int samples,
                                                double rate_tol, double accel_tol) {
  ErrorTracker rates("joint rates vs d/dt inverse geometry");
  ErrorTracker accels("joint accels vs d/dt joint rates");
  for (int n = 0; n < samples; ++n) {
    const double t = sample_time(n, samples, t_end);
    const auto q = solve_kinematics(trajectory(t), model);
    const auto pos_ahead = position_vector(inverse_geometry(trajectory(t + h).r, model));
    const auto pos_behind = position_vector(inverse_geometry(trajectory(t - h).r, model));
    const auto rate_ahead = rate_vector(rates_at(trajectory, t + h, model));
    const auto rate_behind = rate_vector(rates_at(trajectory, t - h, model));
    const auto analytic_rates = rate_vector(q);
    const auto analytic_accels = accel_vector(q);
    for (std::size_t c = 0; c < analytic_rates.size(); ++c) {
      rates.add(analytic_rates[c], (pos_ahead[c] - pos_behind[c]) / (2.0 * h), t);
      accels.add(analytic_accels[c], (rate_ahead[c] - rate_behind[c]) / (2.0 * h), t);
    }
  }
  return {rates.finish(rate_tol), accels.finish(accel_tol)};
}

Vec3d static_force_oracle(const Vec3d& r, const RobotModel<double>& model, double step) {
  Vec3d grad;
  for (int i = 0; i < 3; ++i) {
    const Vec3d e = step * Vec3d::Unit(i);
    grad(i) = (potential_energy(r + e, model) - potential_energy(r - e, model)) / (2.0 * step);
  }
  return cartesian_to_actuator(r, grad, model);
}

Vec3d lagrangian_oracle(const Trajectory& trajectory, double t,
                        const RobotModel<double>& model, const DifferenceSteps& steps) {
  const double tau = steps.nested;
  auto kinetic = [&](const Vec3d& r, const Vec3d& r_dot) {
    return kinetic_energy_from_poses(r, r_dot, model, tau);
  };
  // dT/d(r_dot) at the trajectory state of time s.
  auto momentum = [&](double s) {
    const auto st = trajectory(s);
    Vec3d p;
    for (int i = 0; i < 3; ++i) {
      const Vec3d e = steps.velocity * Vec3d::Unit(i);
      p(i) = (kinetic(st.r, st.v + e) - kinetic(st.r, st.v - e)) / (2.0 * steps.velocity);
    }
    return p;
  };

  const auto st = trajectory(t);
  const Vec3d dp_dt = (momentum(t + steps.time) - momentum(t - steps.time)) / (2.0 * steps.time);
  Vec3d dT_dr;
  Vec3d dV_dr;
  for (int i = 0; i < 3; ++i) {
    const Vec3d e = steps.nested * Vec3d::Unit(i);
    dT_dr(i) = (kinetic(st.r + e, st.v) - kinetic(st.r - e, st.v)) / (2.0 * steps.nested);
    const Vec3d g = steps.space * Vec3d::Unit(i);
    dV_dr(i) = (potential_energy(st.r + g, model) - potential_energy(st.r - g, model)) /
               (2.0 * steps.space);
  }
  return cartesian_to_actuator(st.r, dp_dt - dT_dr + dV_dr, model);
}

OracleReport energy_balance(const Trajectory& trajectory, int samples,
                            const RobotModel<double>& model, double t_end, double h,
                            double tol) {
  OracleReport report;
  report.name = "energy balance sum(p) + P_g = dT/dt";
  report.tolerance = tol;
  auto energy_at = [&](double s) {
    const auto q = solve_kinematics(trajectory(s), model);
    return kinetic_energy(all_link_states(q, model), model);
  };
  double scale = 0.0;
  for (int n = 1; n + 1 < samples; ++n) {
    const double t = sample_time(n, samples, t_end);
    const auto sample = inverse_dynamics(trajectory(t), model);
    const double input = sample.powers().sum() + gravity_power(sample.links, model);
    const double dT_dt = (energy_at(t + h) - energy_at(t - h)) / (2.0 * h);
    scale = std::max(scale, std::abs(dT_dt));
    const double err = std::abs(input - dT_dt);
    if (err > report.max_abs_error) {
      report.max_abs_error = err;
      report.worst_time = t;
    }
  }
  report.max_rel_error =
      report.max_abs_error == 0.0 ? 0.0 : report.max_abs_error / std::max(scale, kTiny);
  report.finalize();
  return report;
}

OracleReport static_equivalence(const RobotModel<double>& model, int poses, double tol,
                                unsigned seed) {
  OracleReport report;
  report.name = "static forces vs potential-energy oracle [N]";
  report.tolerance = tol;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> box(-0.2, 0.2);
  for (int n = 0; n < poses; ++n) {
    PlatformState<double> rest;
    rest.r = Vec3d(box(rng), box(rng), box(rng));
    const Vec3d f = inverse_dynamics(rest, model).forces();
    const Vec3d oracle = static_force_oracle(rest.r, model);
    const double err = (f - oracle).cwiseAbs().maxCoeff();
    if (err > report.max_abs_error) {
      report.max_abs_error = err;
      report.worst_time = n;
    }
  }
  report.max_rel_error = report.max_abs_error;
  report.finalize();
  return report;
}

OracleReport lagrangian_equivalence(const Trajectory& trajectory,
                                    const RobotModel<double>& model, int samples,
                                    double t_end, double tol) {
  OracleReport report;
  report.name = "actuator forces vs Lagrangian oracle";
  report.tolerance = tol;
  for (int n = 0; n < samples; ++n) {
    const double t = sample_time(n, samples, t_end);
    const Vec3d f = inverse_dynamics(trajectory(t), model).forces();
    const Vec3d oracle = lagrangian_oracle(trajectory, t, model);
    const double err = (f - oracle).cwiseAbs().maxCoeff();
    const double rel = err / std::max(oracle.cwiseAbs().maxCoeff(), kTiny);
    report.max_abs_error = std::max(report.max_abs_error, err);
    if (rel > report.max_rel_error) {
      report.max_rel_error = rel;
      report.worst_time = t;
    }
  }
  report.finalize();
  return report;
}

namespace {

OracleReport loop_closure_report(const Trajectory& trajectory, const RobotModel<double>& model,
                                 int samples, double t_end) {
  OracleReport report;
  report.name = "loop-closure residual [m^2]";
  report.tolerance = 1e-12;
  for (int n = 0; n < samples; ++n) {
    const double t = sample_time(n, samples, t_end);
    const Vec3d r = trajectory(t).r;
    const auto q = inverse_geometry(r, model);
    const double err = constraint_residuals(r, slider_positions(q), model).cwiseAbs().maxCoeff();
    if (err > report.max_abs_error) {
      report.max_abs_error = err;
      report.worst_time = t;
    }
  }
  report.max_rel_error = report.max_abs_error;
  report.finalize();
  return report;
}

OracleReport jacobian_identity_report(const Trajectory& trajectory,
                                      const RobotModel<double>& model, int samples,
                                      double t_end) {
  OracleReport report;
  report.name = "|J1 lambda_dot - J2 r_dot| [m^2/s]";
  report.tolerance = 1e-10;
  for (int n = 0; n < samples; ++n) {
    const double t = sample_time(n, samples, t_end);
    const auto s = trajectory(t);
    const auto q = joint_rates(inverse_geometry(s.r, model), s.v, model);
    const auto jp = jacobians(s.r, slider_positions(q), model);
    const double err = (jp.J1 * slider_rates(q) - jp.J2 * s.v).norm();
    if (err > report.max_abs_error) {
      report.max_abs_error = err;
      report.worst_time = t;
    }
  }
  report.max_rel_error = report.max_abs_error;
  report.finalize();
  return report;
}

}  // namespace

std::vector<OracleReport> run_suite(Suite suite, const RobotModel<double>& model) {
  const CosineTrajectory<double> reference;
  const Trajectory traj = reference;
  const double t_end = reference.duration;
  std::vector<OracleReport> out;
  if (suite != Suite::kDynamics) {
    out.push_back(loop_closure_report(traj, model, 201, t_end));
    out.push_back(jacobian_identity_report(traj, model, 201, t_end));
    const auto fd = fd_kinematics_check(traj, model, 1e-5, t_end, 201);
    out.push_back(fd[0]);
    out.push_back(fd[1]);
  }
  if (suite != Suite::kKinematics) {
    out.push_back(static_equivalence(model));
    out.push_back(lagrangian_equivalence(traj, model, 21, t_end));
    out.push_back(energy_balance(traj, 201, model, t_end));
  }
  return out;
}

void print_reports(std::ostream& out, const std::vector<OracleReport>& reports) {
  char line[256];
  std::snprintf(line, sizeof line, "%-46s %12s %12s %9s %10s  %s\n", "check", "max_abs",
                "max_rel", "worst_t", "tol", "result");
  out << line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-46s %12.3e %12.3e %9.3f %10.1e  %s\n", r.name.c_str(),
                  r.max_abs_error, r.max_rel_error, r.worst_time, r.tolerance,
                  r.pass ? "PASS" : "FAIL");
    out << line;
  }
}

}  // namespace orthoglide
