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

// Inverse kinematics of the Orthoglide: closed-form inverse geometry,
// loop-closure residuals, Jacobians, joint rate/acceleration solvers and the
// recursive propagation of body velocities and accelerations along a leg.

#pragma once

#include <array>
#include <cmath>
#include <sstream>

#include "orthoglide/core_math.hpp"
#include "orthoglide/robot_model.hpp"

namespace orthoglide {

template <typename Scalar>
struct PlatformState {
  Vec3<Scalar> r = Vec3<Scalar>::Zero();  // position of G
  Vec3<Scalar> v = Vec3<Scalar>::Zero();
  Vec3<Scalar> a = Vec3<Scalar>::Zero();
};

/// Joint coordinates of one leg with their first and second derivatives.
/// phi54 mirrors phi21 (and likewise for rates and accelerations); the
/// parallelogram joint A4 mirrors phi32.
template <typename Scalar>
struct LegJointState {
  Scalar lambda{0}, phi21{0}, phi32{0}, phi54{0};
  Scalar lambda_dot{0}, omega21{0}, omega32{0}, omega54{0};
  Scalar lambda_ddot{0}, eps21{0}, eps32{0}, eps54{0};
};

template <typename Scalar>
using JointState = std::array<LegJointState<Scalar>, 3>;

inline constexpr int kBodiesPerLeg = 6;

/// Kinematic state of one body. Vectors are body-frame components; `p` is
/// the fixed-frame position of the link origin A_k.
template <typename Scalar>
struct LinkKinematics {
  Mat3<Scalar> a_k0 = Mat3<Scalar>::Identity();
  Vec3<Scalar> p = Vec3<Scalar>::Zero();
  Vec3<Scalar> omega = Vec3<Scalar>::Zero();
  Vec3<Scalar> eps = Vec3<Scalar>::Zero();
  Vec3<Scalar> v = Vec3<Scalar>::Zero();
  Vec3<Scalar> gamma = Vec3<Scalar>::Zero();
};

template <typename Scalar>
struct LegKinematics {
  Leg leg = Leg::A;
  std::array<LinkKinematics<Scalar>, kBodiesPerLeg> bodies;

  /// Body k in 1..6.
  const LinkKinematics<Scalar>& body(int k) const { return bodies[k - 1]; }
  LinkKinematics<Scalar>& body(int k) { return bodies[k - 1]; }
};

template <typename Scalar>
struct JacobianPair {
  Mat3<Scalar> J1;
  Mat3<Scalar> J2;
  Scalar alpha1, alpha2, alpha3;

  Scalar det_J1() const { return J1.determinant(); }
  Scalar det_J2() const { return J2.determinant(); }
};

/// How body k hangs off its parent inside one leg: a_rel maps parent-frame
/// components into frame k and `offset` is A_k in the parent frame. Body 1
/// (parent 0) is the slider and is handled separately.
template <typename Scalar>
struct ChainLink {
  int parent = 0;
  Mat3<Scalar> a_rel = Mat3<Scalar>::Identity();
  Vec3<Scalar> offset = Vec3<Scalar>::Zero();
  Scalar rate{0};   // relative angular rate about z_k
  Scalar accel{0};  // relative angular acceleration about z_k
  bool present = true;
};

template <typename Scalar>
using Chain = std::array<ChainLink<Scalar>, kBodiesPerLeg>;

/// Parent of body k: 1 <- 2 <- 3 <- 4 <- 5, and 2 <- 6.
inline constexpr std::array<int, kBodiesPerLeg> kParent = {0, 1, 2, 3, 4, 2};

template <typename Scalar>
Chain<Scalar> leg_chain(const LegFrames<Scalar>& frames,
                        const LegJointState<Scalar>& q) {
  Chain<Scalar> chain;
  for (int k = 1; k <= kBodiesPerLeg; ++k) chain[k - 1].parent = kParent[k - 1];
  chain[0].a_rel = frames.base;

  auto set = [&](int k, Scalar phi, const Mat3<Scalar>& a_const,
                 const Vec3<Scalar>& offset, Scalar rate, Scalar accel) {
    auto& link = chain[k - 1];
    link.a_rel = rot_z(phi) * a_const;
    link.offset = offset;
    link.rate = rate;
    link.accel = accel;
  };
  set(2, q.phi21, frames.a2, frames.r21, q.omega21, q.eps21);
  set(3, q.phi32, frames.a3, frames.r32, q.omega32, q.eps32);
  set(4, q.phi32, frames.a4, frames.r43, q.omega32, q.eps32);
  set(5, q.phi54, frames.a2, frames.r54, q.omega54, q.eps54);
  set(6, q.phi32, frames.a3, frames.r62, q.omega32, q.eps32);
  return chain;
}

/// Platform coordinates reordered into the leg's own (along-slider, q, s)
/// pattern: A -> (x, y, z), B -> (y, z, x), C -> (z, x, y).
template <typename Scalar>
Vec3<Scalar> leg_coordinates(Leg leg, const Vec3<Scalar>& r) {
  switch (leg) {
    case Leg::A: return r;
    case Leg::B: return Vec3<Scalar>(r.y(), r.z(), r.x());
    case Leg::C: return Vec3<Scalar>(r.z(), r.x(), r.y());
  }
  throw UnknownLeg("unknown leg");
}

/// Tolerance on |cos(phi32)| below which inverse geometry is refused.
inline constexpr double kCosineSingularity = 1e-9;

/// Closed-form inverse geometry on the principal arcsine branch. Only the
/// position fields of the result are set.
template <typename Scalar>
JointState<Scalar> inverse_geometry(const Vec3<Scalar>& r,
                                    const RobotModel<Scalar>& model) {
  using std::abs;
  using std::asin;
  using std::cos;
  const Scalar l3 = model.geometry.l3;
  JointState<Scalar> out;
  for (Leg leg : kLegs) {
    const Vec3<Scalar> c = leg_coordinates(leg, r);
    const Scalar s32 = -c(2) / l3;
    if (!(abs(s32) < Scalar(1))) {
      std::ostringstream msg;
      msg << "leg " << leg_name(leg) << ": |sin phi32| = " << abs(s32)
          << " leaves (-1, 1)";
      throw OutOfWorkspace(msg.str());
    }
    auto& q = out[leg_index(leg)];
    q.phi32 = asin(s32);
    const Scalar c32 = cos(q.phi32);
    if (abs(c32) < Scalar(kCosineSingularity)) {
      throw NearSingular(std::string("leg ") + leg_name(leg) + ": cos phi32 vanishes");
    }
    const Scalar s21 = c(1) / (l3 * c32);
    if (!(abs(s21) < Scalar(1))) {
      std::ostringstream msg;
      msg << "leg " << leg_name(leg) << ": |sin phi21| = " << abs(s21)
          << " leaves (-1, 1)";
      throw OutOfWorkspace(msg.str());
    }
    q.phi21 = asin(s21);
    q.phi54 = q.phi21;
    q.lambda = c(0) + l3 * (Scalar(1) - cos(q.phi21) * c32);
  }
  return out;
}

/// Sphere constraints |G - slider point| ^ 2 - l3 ^ 2 for the three legs.
template <typename Scalar>
Vec3<Scalar> constraint_residuals(const Vec3<Scalar>& r, const Vec3<Scalar>& lambda,
                                  const RobotModel<Scalar>& model) {
  const Scalar l3 = model.geometry.l3;
  Vec3<Scalar> res;
  for (Leg leg : kLegs) {
    const int i = leg_index(leg);
    const Vec3<Scalar> c = leg_coordinates(leg, r);
    const Scalar along = c(0) + l3 - lambda(i);
    res(i) = c(1) * c(1) + c(2) * c(2) + along * along - l3 * l3;
  }
  return res;
}

template <typename Scalar>
Vec3<Scalar> slider_positions(const JointState<Scalar>& q) {
  return Vec3<Scalar>(q[0].lambda, q[1].lambda, q[2].lambda);
}

template <typename Scalar>
Vec3<Scalar> slider_rates(const JointState<Scalar>& q) {
  return Vec3<Scalar>(q[0].lambda_dot, q[1].lambda_dot, q[2].lambda_dot);
}

template <typename Scalar>
Vec3<Scalar> slider_accels(const JointState<Scalar>& q) {
  return Vec3<Scalar>(q[0].lambda_ddot, q[1].lambda_ddot, q[2].lambda_ddot);
}

/// Inverse (J1) and forward (J2) Jacobians with J1 * lambda_dot = J2 * r_dot.
template <typename Scalar>
JacobianPair<Scalar> jacobians(const Vec3<Scalar>& r, const Vec3<Scalar>& lambda,
                               const RobotModel<Scalar>& model) {
  const Scalar l3 = model.geometry.l3;
  JacobianPair<Scalar> jp;
  jp.alpha1 = r.x() + l3 - lambda(0);
  jp.alpha2 = r.y() + l3 - lambda(1);
  jp.alpha3 = r.z() + l3 - lambda(2);
  jp.J1 = Vec3<Scalar>(jp.alpha1, jp.alpha2, jp.alpha3).asDiagonal();
  jp.J2 << jp.alpha1, r.y(), r.z(),
           r.x(), jp.alpha2, r.z(),
           r.x(), r.y(), jp.alpha3;
  return jp;
}

/// Per-leg connectivity matrix: columns are the fixed-frame velocity of G per
/// unit slider rate, unit omega21 and unit omega32 (omega54 = omega21 and the
/// parallelogram keep the platform in translation, so only the bar swing and
/// the slider move G).
template <typename Scalar>
Mat3<Scalar> connectivity_matrix(const LegFrames<Scalar>& frames,
                                 const LegJointState<Scalar>& q) {
  const Vec3<Scalar> u3 = unit_z<Scalar>();
  const Mat3<Scalar> s3 = skew(u3);
  const Mat3<Scalar> a10 = frames.base;
  const Mat3<Scalar> a20 = rot_z(q.phi21) * frames.a2 * a10;
  const Mat3<Scalar> a32 = rot_z(q.phi32) * frames.a3;
  const Mat3<Scalar> a30 = a32 * a20;
  Mat3<Scalar> m;
  m.col(0) = a10.transpose() * u3;
  m.col(1) = a20.transpose() * s3 * a32.transpose() * frames.r43;
  m.col(2) = a30.transpose() * s3 * frames.r43;
  return m;
}

/// Velocity-product part of the G acceleration of one leg: what the joint
/// rates contribute to r_ddot when every joint acceleration is zero.
template <typename Scalar>
Vec3<Scalar> connectivity_bias(const LegFrames<Scalar>& frames,
                               const LegJointState<Scalar>& q) {
  const Mat3<Scalar> s3 = skew(unit_z<Scalar>());
  const Mat3<Scalar> a20 = rot_z(q.phi21) * frames.a2 * frames.base;
  const Mat3<Scalar> a32 = rot_z(q.phi32) * frames.a3;
  const Mat3<Scalar> a30 = a32 * a20;
  const Vec3<Scalar>& bar = frames.r43;
  const Scalar w21 = q.omega21;
  const Scalar w32 = q.omega32;
  return w21 * w21 * (a20.transpose() * s3 * s3 * a32.transpose() * bar) +
         Scalar(2) * w21 * w32 * (a20.transpose() * s3 * a32.transpose() * s3 * bar) +
         w32 * w32 * (a30.transpose() * s3 * s3 * bar);
}

namespace detail {

template <typename Scalar>
Vec3<Scalar> solve_leg(const Mat3<Scalar>& m, const Vec3<Scalar>& rhs, Leg leg) {
  try {
    return solve3(m, rhs);
  } catch (const SingularMatrix& e) {
    throw NearSingular(std::string("leg ") + leg_name(leg) + ": " + e.what());
  }
}

}  // namespace detail

/// Solves the per-leg connectivity system for lambda_dot, omega21, omega32.
template <typename Scalar>
JointState<Scalar> joint_rates(JointState<Scalar> q, const Vec3<Scalar>& v,
                               const RobotModel<Scalar>& model) {
  for (Leg leg : kLegs) {
    auto& ql = q[leg_index(leg)];
    const auto frames = leg_frames(leg, model.geometry);
    const Vec3<Scalar> x = detail::solve_leg(connectivity_matrix(frames, ql), v, leg);
    ql.lambda_dot = x(0);
    ql.omega21 = x(1);
    ql.omega32 = x(2);
    ql.omega54 = ql.omega21;
  }
  return q;
}

/// Solves the differentiated connectivity system for the joint
/// accelerations. Rates in `q` must already be solved.
template <typename Scalar>
JointState<Scalar> joint_accels(JointState<Scalar> q, const Vec3<Scalar>& a,
                                const RobotModel<Scalar>& model) {
  for (Leg leg : kLegs) {
    auto& ql = q[leg_index(leg)];
    const auto frames = leg_frames(leg, model.geometry);
    const Vec3<Scalar> rhs = a - connectivity_bias(frames, ql);
    const Vec3<Scalar> x = detail::solve_leg(connectivity_matrix(frames, ql), rhs, leg);
    ql.lambda_ddot = x(0);
    ql.eps21 = x(1);
    ql.eps32 = x(2);
    ql.eps54 = ql.eps21;
  }
  return q;
}

/// Positions, rates and accelerations of every joint for a platform state.
template <typename Scalar>
JointState<Scalar> solve_kinematics(const PlatformState<Scalar>& s,
                                    const RobotModel<Scalar>& model) {
  auto q = inverse_geometry(s.r, model);
  q = joint_rates(q, s.v, model);
  return joint_accels(q, s.a, model);
}

/// Recursive propagation of orientation, position, angular velocity and
/// acceleration, and origin velocity and acceleration for bodies 1..6.
template <typename Scalar>
LegKinematics<Scalar> link_states(Leg leg, const LegJointState<Scalar>& q,
                                  const RobotModel<Scalar>& model) {
  const auto frames = leg_frames(leg, model.geometry);
  const Chain<Scalar> chain = leg_chain(frames, q);
  const Vec3<Scalar> u3 = unit_z<Scalar>();

  LegKinematics<Scalar> out;
  out.leg = leg;
  auto& slider = out.body(1);
  slider.a_k0 = frames.base;
  slider.p = frames.r10(q.lambda);
  slider.v = q.lambda_dot * u3;
  slider.gamma = q.lambda_ddot * u3;

  for (int k = 2; k <= kBodiesPerLeg; ++k) {
    const auto& link = chain[k - 1];
    const auto& parent = out.body(link.parent);
    auto& body = out.body(k);
    const Mat3<Scalar>& a = link.a_rel;
    const Vec3<Scalar>& r = link.offset;
    const Mat3<Scalar> w_parent = skew(parent.omega);
    const Vec3<Scalar> carried = a * parent.omega;

    body.a_k0 = a * parent.a_k0;
    body.p = parent.p + parent.a_k0.transpose() * r;
    body.omega = carried + link.rate * u3;
    body.eps = a * parent.eps + link.accel * u3 + link.rate * carried.cross(u3);
    body.v = a * (parent.v + w_parent * r);
    body.gamma = a * (parent.gamma + (w_parent * w_parent + skew(parent.eps)) * r);
  }
  return out;
}

template <typename Scalar>
std::array<LegKinematics<Scalar>, 3> all_link_states(const JointState<Scalar>& q,
                                                     const RobotModel<Scalar>& model) {
  return {link_states(Leg::A, q[0], model), link_states(Leg::B, q[1], model),
          link_states(Leg::C, q[2], model)};
}

/// Position of G reached by walking the frame chain of one leg.
template <typename Scalar>
Vec3<Scalar> chain_platform_position(const LegKinematics<Scalar>& links,
                                     const RobotModel<Scalar>& model) {
  const auto frames = leg_frames(links.leg, model.geometry);
  const auto& platform = links.body(5);
  return platform.p + platform.a_k0.transpose() * frames.r5G;
}

/// Virtual motion produced by a unit rate of one slider with the two other
/// sliders locked. Only the rate fields of `joints` are meaningful.
template <typename Scalar>
struct VirtualMotion {
  Vec3<Scalar> platform_velocity = Vec3<Scalar>::Zero();
  JointState<Scalar> joints;
};

/// Relative threshold on the reciprocal condition number of the 9x9
/// virtual-motion system.
inline constexpr double kVirtualSystemRcond = 1e-12;

/// Solves the nine connectivity equations (three per leg) with the platform
/// velocity and the six revolute rates as unknowns, once per unit slider
/// input. Result index j is the motion driven by slider j.
template <typename Scalar>
std::array<VirtualMotion<Scalar>, 3> virtual_rates(const JointState<Scalar>& q,
                                                   const RobotModel<Scalar>& model) {
  using Mat9 = Eigen::Matrix<Scalar, 9, 9>;
  using Mat93 = Eigen::Matrix<Scalar, 9, 3>;
  Mat9 system = Mat9::Zero();
  Mat93 rhs = Mat93::Zero();
  for (Leg leg : kLegs) {
    const int i = leg_index(leg);
    const auto frames = leg_frames(leg, model.geometry);
    const Mat3<Scalar> m = connectivity_matrix(frames, q[i]);
    system.template block<3, 3>(3 * i, 0) = -Mat3<Scalar>::Identity();
    system.template block<3, 1>(3 * i, 3 + 2 * i) = m.col(1);
    system.template block<3, 1>(3 * i, 4 + 2 * i) = m.col(2);
    rhs.template block<3, 1>(3 * i, i) = -m.col(0);
  }
  const Eigen::PartialPivLU<Mat9> lu(system);
  if (!(lu.rcond() > Scalar(kVirtualSystemRcond))) {
    throw NearSingular("virtual-motion system is singular");
  }
  const Mat93 x = lu.solve(rhs);

  std::array<VirtualMotion<Scalar>, 3> out;
  for (int j = 0; j < 3; ++j) {
    auto& vm = out[j];
    vm.platform_velocity = x.template block<3, 1>(0, j);
    vm.joints = q;
    for (int i = 0; i < 3; ++i) {
      auto& ql = vm.joints[i];
      ql.lambda_dot = (i == j) ? Scalar(1) : Scalar(0);
      ql.omega21 = x(3 + 2 * i, j);
      ql.omega32 = x(4 + 2 * i, j);
      ql.omega54 = ql.omega21;
      ql.lambda_ddot = ql.eps21 = ql.eps32 = ql.eps54 = Scalar(0);
    }
  }
  return out;
}

}  // namespace orthoglide
