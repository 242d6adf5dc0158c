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

// Numerical oracles for the kinematics and dynamics.
//
// None of these routines touch the wrench recursion or the virtual-work sum.
// The static and Lagrangian oracles only use body poses (orientation and
// mass-centre position as functions of the platform position) together with
// central differences; actuator forces follow from Cartesian generalized
// forces through f = J1 J2^-T Q, which is the dual of J1 lambda_dot = J2 r_dot.

#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "orthoglide/dynamics.hpp"
#include "orthoglide/trajectory.hpp"

namespace orthoglide {

struct OracleReport {
  std::string name;
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;
  double worst_time = 0.0;
  double tolerance = 0.0;
  bool pass = true;

  /// Sets `pass` from the recorded errors.
  void finalize() { pass = max_rel_error <= tolerance; }
};

/// Differencing steps used by the oracles.
struct DifferenceSteps {
  double time = 1e-5;      // s, d/dt of trajectory quantities
  double space = 1e-6;     // m, gradient of the potential
  double nested = 1e-5;    // m for dT/dr, s for pose differencing along r_dot
  double velocity = 1e-2;  // m/s, probe for dT/d(r_dot); T is quadratic in r_dot
};

/// Pose of one rigid body of the mechanism.
struct BodyPose {
  double mass = 0.0;
  Vec3d centre;   // fixed-frame mass centre
  Mat3d a_k0;     // fixed -> body
  Mat3d J_c;      // central inertia, body frame
};

/// Every body of the closed mechanism (platform counted once) at platform
/// position r. Throws OutOfWorkspace outside the workspace.
std::vector<BodyPose> body_poses(const Vec3d& r, const RobotModel<double>& model);

/// Gravitational potential energy at platform position r.
double potential_energy(const Vec3d& r, const RobotModel<double>& model);

/// Kinetic energy from propagated link states.
double kinetic_energy(const std::array<LegKinematics<double>, 3>& links,
                      const RobotModel<double>& model);

/// Power of gravity on every body from propagated link states.
double gravity_power(const std::array<LegKinematics<double>, 3>& links,
                     const RobotModel<double>& model);

/// Kinetic energy at (r, r_dot) built only from body poses: mass-centre
/// velocities and angular velocities come from central differences of the
/// pose map along r_dot with time step `tau`.
double kinetic_energy_from_poses(const Vec3d& r, const Vec3d& r_dot,
                                 const RobotModel<double>& model, double tau);

/// Maps Cartesian generalized forces on G to actuator forces.
Vec3d cartesian_to_actuator(const Vec3d& r, const Vec3d& q,
                            const RobotModel<double>& model);

/// Compares joint rates with central differences of inverse geometry and
/// joint accelerations with central differences of joint rates over
/// `samples` uniform times on [0, t_end]. Returns {rates, accelerations}.
std::array<OracleReport, 2> fd_kinematics_check(const Trajectory& trajectory,
                                                const RobotModel<double>& model,
                                                double h, double t_end = 2.0,
                                                int samples = 201,
                                                double rate_tol = 1e-6,
                                                double accel_tol = 1e-4);

/// Actuator forces holding the robot at rest at r: J1 J2^-T grad V.
Vec3d static_force_oracle(const Vec3d& r, const RobotModel<double>& model,
                          double step = 1e-6);

/// Actuator forces from Lagrange's equations in the platform coordinates,
/// evaluated at time t of `trajectory` by nested central differences.
Vec3d lagrangian_oracle(const Trajectory& trajectory, double t,
                        const RobotModel<double>& model,
                        const DifferenceSteps& steps = {});

/// Checks sum(p) + P_gravity = dT/dt at every interior sample.
OracleReport energy_balance(const Trajectory& trajectory, int samples,
                            const RobotModel<double>& model, double t_end = 2.0,
                            double h = 1e-5, double tol = 1e-4);

/// Static equivalence at `poses` random positions (fixed seed). Errors are
/// in newtons (reference scale 1 N).
OracleReport static_equivalence(const RobotModel<double>& model, int poses = 50,
                                double tol = 1e-6, unsigned seed = 7);

/// Lagrangian equivalence at `samples` uniform times on [0, t_end].
OracleReport lagrangian_equivalence(const Trajectory& trajectory,
                                    const RobotModel<double>& model,
                                    int samples = 21, double t_end = 2.0,
                                    double tol = 1e-3);

enum class Suite { kAll, kKinematics, kDynamics };

/// Runs the oracle suite on the reference trajectory.
std::vector<OracleReport> run_suite(Suite suite, const RobotModel<double>& model);

void print_reports(std::ostream& out, const std::vector<OracleReport>& reports);

}  // namespace orthoglide
