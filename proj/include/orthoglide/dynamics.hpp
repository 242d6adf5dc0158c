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

// Inverse dynamics by virtual work.
//
// The closed mechanism is cut at the platform joints of legs B and C and at
// the far parallelogram joint A7/B7/C7 of every leg, leaving three open
// trees. Tree A carries the platform (bodies 1-2-3-4-5 with bar 6 hanging
// off body 2); trees B and C stop at the coupler (1-2-3-4, bar 6 off 2).
// Each body contributes the wrench needed to overcome its inertia and
// weight; these are accumulated leaf-to-root, and an actuator force is the
// sum over all joints of (virtual joint rate) x (axial component of the
// accumulated wrench at that joint) for the virtual motion driven by a unit
// rate of that actuator.

#pragma once

#include <array>

#include "orthoglide/core_math.hpp"
#include "orthoglide/kinematics.hpp"
#include "orthoglide/robot_model.hpp"

namespace orthoglide {

/// Force and moment in a body frame, moment about the body's link origin.
template <typename Scalar>
struct Wrench {
  Vec3<Scalar> f = Vec3<Scalar>::Zero();
  Vec3<Scalar> m = Vec3<Scalar>::Zero();

  Wrench& operator+=(const Wrench& o) {
    f += o.f;
    m += o.m;
    return *this;
  }
  friend Wrench operator+(Wrench a, const Wrench& b) { return a += b; }
  friend Wrench operator-(const Wrench& a) { return {-a.f, -a.m}; }
  friend Wrench operator*(Scalar s, const Wrench& a) { return {s * a.f, s * a.m}; }
};

/// Mass, mass-centre offset from A_k and inertia about A_k, in frame k.
template <typename Scalar>
struct BodyProperties {
  Scalar mass{0};
  Vec3<Scalar> r_c = Vec3<Scalar>::Zero();
  Mat3<Scalar> J = Mat3<Scalar>::Zero();
};

/// Inertia about a point offset by -c from the mass centre (parallel axes).
template <typename Scalar>
Mat3<Scalar> shift_inertia(const Mat3<Scalar>& j_central, Scalar mass,
                           const Vec3<Scalar>& c) {
  return j_central + mass * (c.squaredNorm() * Mat3<Scalar>::Identity() - c * c.transpose());
}

/// Body k (1..6) of a leg. Rods are homogeneous, so mass centres sit at the
/// geometric midpoints; the platform centre is G.
template <typename Scalar>
BodyProperties<Scalar> body_properties(int k, const LegFrames<Scalar>& frames,
                                       const RobotModel<Scalar>& model) {
  const auto& m = model.masses;
  BodyProperties<Scalar> b;
  switch (k) {
    case 1:
      b.mass = m.m1;
      b.r_c = frames.r21 / Scalar(2);
      break;
    case 2:
      b.mass = m.m2;
      b.J = m.J2;
      break;
    case 3:
      b.mass = m.m3;
      b.r_c = frames.r43 / Scalar(2);
      b.J = m.J3;
      break;
    case 4:
      b.mass = m.m4;
      b.r_c = frames.r54;
      b.J = m.J4;
      break;
    case 5:
      b.mass = m.m5;
      b.r_c = frames.r5G;
      b.J = shift_inertia(m.JG, m.m5, frames.r5G);
      break;
    case 6:
      b.mass = m.m6;
      b.r_c = frames.r43 / Scalar(2);
      b.J = m.J6;
      break;
    default:
      throw Error("body index out of range: " + std::to_string(k));
  }
  return b;
}

/// Inertia and applied wrenches acting on one body, plus its mass-centre
/// offset.
template <typename Scalar>
struct BodyLoad {
  Wrench<Scalar> inertia;
  Wrench<Scalar> applied;
  Vec3<Scalar> r_c = Vec3<Scalar>::Zero();

  /// Wrench the joints must supply: minus inertia minus applied.
  Wrench<Scalar> required() const { return -(inertia + applied); }
};

/// D'Alembert inertia wrench about A_k:
///   f = -m [gamma + (w~ w~ + e~) r_c]
///   m = -[m r_c~ gamma + J e + w~ J w]
template <typename Scalar>
Wrench<Scalar> inertia_wrench(const LinkKinematics<Scalar>& body,
                              const BodyProperties<Scalar>& props) {
  const Mat3<Scalar> w = skew(body.omega);
  Wrench<Scalar> out;
  out.f = -props.mass * (body.gamma + (w * w + skew(body.eps)) * props.r_c);
  out.m = -(props.mass * props.r_c.cross(body.gamma) + props.J * body.eps +
            body.omega.cross(props.J * body.omega));
  return out;
}

/// Weight applied at the mass centre, mapped into the body frame.
template <typename Scalar>
Wrench<Scalar> gravity_wrench(const Mat3<Scalar>& a_k0,
                              const BodyProperties<Scalar>& props,
                              const MassProperties<Scalar>& masses) {
  Wrench<Scalar> out;
  out.f = masses.g * props.mass * (a_k0 * masses.g_dir);
  out.m = props.r_c.cross(out.f);
  return out;
}

template <typename Scalar>
BodyLoad<Scalar> body_load(const LinkKinematics<Scalar>& body,
                           const BodyProperties<Scalar>& props,
                           const MassProperties<Scalar>& masses) {
  return {inertia_wrench(body, props), gravity_wrench(body.a_k0, props, masses),
          props.r_c};
}

/// Leaf-to-root accumulation over a tree whose children carry larger indices
/// than their parents:
///   f_k = f_k0 + sum_c a_ck^T f_c
///   m_k = m_k0 + sum_c (a_ck^T m_c + r_ck~ a_ck^T f_c)
/// Absent bodies contribute nothing and receive a zero wrench.
template <typename Scalar>
std::array<Wrench<Scalar>, kBodiesPerLeg> accumulate_wrenches(
    const Chain<Scalar>& chain, const std::array<Wrench<Scalar>, kBodiesPerLeg>& loads) {
  std::array<Wrench<Scalar>, kBodiesPerLeg> acc{};
  for (int k = kBodiesPerLeg; k >= 1; --k) {
    const auto& link = chain[k - 1];
    if (!link.present) continue;
    acc[k - 1] += loads[k - 1];
    if (link.parent <= 0) continue;
    const Vec3<Scalar> f = link.a_rel.transpose() * acc[k - 1].f;
    auto& up = acc[link.parent - 1];
    up.f += f;
    up.m += link.a_rel.transpose() * acc[k - 1].m + link.offset.cross(f);
  }
  return acc;
}

/// Loads and accumulated wrenches of one open tree.
template <typename Scalar>
struct LegWrenches {
  std::array<BodyLoad<Scalar>, kBodiesPerLeg> loads;
  std::array<Wrench<Scalar>, kBodiesPerLeg> accumulated;

  const Wrench<Scalar>& at(int k) const { return accumulated[k - 1]; }
};

/// Whether body k belongs to the open tree of `leg` after the cuts.
inline bool in_open_tree(Leg leg, int k) { return k != 5 || leg == Leg::A; }

template <typename Scalar>
LegWrenches<Scalar> leg_wrenches(const LegKinematics<Scalar>& links,
                                 const LegJointState<Scalar>& q,
                                 const RobotModel<Scalar>& model) {
  const auto frames = leg_frames(links.leg, model.geometry);
  Chain<Scalar> chain = leg_chain(frames, q);
  LegWrenches<Scalar> out;
  std::array<Wrench<Scalar>, kBodiesPerLeg> required{};
  for (int k = 1; k <= kBodiesPerLeg; ++k) {
    if (!in_open_tree(links.leg, k)) {
      chain[k - 1].present = false;
      continue;
    }
    out.loads[k - 1] = body_load(links.body(k), body_properties(k, frames, model),
                                 model.masses);
    required[k - 1] = out.loads[k - 1].required();
  }
  out.accumulated = accumulate_wrenches(chain, required);
  return out;
}

/// Virtual power of one tree's accumulated wrenches for the joint rates in
/// `vq`: the slider pairs with the axial force at A1, each revolute joint
/// with the axial moment at its own origin (A4 and A6 turn at omega32, A5 at
/// omega54).
template <typename Scalar>
Scalar tree_virtual_power(Leg leg, const LegWrenches<Scalar>& w,
                          const LegJointState<Scalar>& vq) {
  Scalar p = vq.lambda_dot * w.at(1).f.z() + vq.omega21 * w.at(2).m.z() +
             vq.omega32 * (w.at(3).m.z() + w.at(4).m.z() + w.at(6).m.z());
  if (in_open_tree(leg, 5)) p += vq.omega54 * w.at(5).m.z();
  return p;
}

template <typename Scalar>
struct ActuatorChannel {
  Scalar lambda{0}, lambda_dot{0}, lambda_ddot{0};
  Scalar force{0};  // N, along the slider axis
  Scalar power{0};  // W
};

template <typename Scalar>
using ActuatorOutput = std::array<ActuatorChannel<Scalar>, 3>;

/// Actuator forces from the accumulated wrenches of the three trees and the
/// three unit virtual motions.
template <typename Scalar>
Vec3<Scalar> actuator_forces(const std::array<LegWrenches<Scalar>, 3>& wrenches,
                             const std::array<VirtualMotion<Scalar>, 3>& virtual_motion) {
  Vec3<Scalar> f = Vec3<Scalar>::Zero();
  for (int j = 0; j < 3; ++j) {
    for (Leg leg : kLegs) {
      const int i = leg_index(leg);
      f(j) += tree_virtual_power(leg, wrenches[i], virtual_motion[j].joints[i]);
    }
  }
  return f;
}

template <typename Scalar>
Vec3<Scalar> actuator_powers(const Vec3<Scalar>& forces, const Vec3<Scalar>& rates) {
  return forces.cwiseProduct(rates);
}

/// Everything computed for one instant of a platform motion.
template <typename Scalar>
struct DynamicsSample {
  JointState<Scalar> joints;
  std::array<LegKinematics<Scalar>, 3> links;
  std::array<LegWrenches<Scalar>, 3> wrenches;
  std::array<VirtualMotion<Scalar>, 3> virtual_motion;
  ActuatorOutput<Scalar> actuators;

  Vec3<Scalar> forces() const {
    return {actuators[0].force, actuators[1].force, actuators[2].force};
  }
  Vec3<Scalar> powers() const {
    return {actuators[0].power, actuators[1].power, actuators[2].power};
  }
};

/// Full pipeline: inverse kinematics, link states, loads, accumulated
/// wrenches, virtual motions, actuator forces and powers.
template <typename Scalar>
DynamicsSample<Scalar> inverse_dynamics(const PlatformState<Scalar>& state,
                                        const RobotModel<Scalar>& model) {
  DynamicsSample<Scalar> s;
  s.joints = solve_kinematics(state, model);
  s.links = all_link_states(s.joints, model);
  for (Leg leg : kLegs) {
    const int i = leg_index(leg);
    s.wrenches[i] = leg_wrenches(s.links[i], s.joints[i], model);
  }
  s.virtual_motion = virtual_rates(s.joints, model);
  const Vec3<Scalar> f = actuator_forces(s.wrenches, s.virtual_motion);
  const Vec3<Scalar> rates = slider_rates(s.joints);
  const Vec3<Scalar> p = actuator_powers(f, rates);
  for (int j = 0; j < 3; ++j) {
    auto& ch = s.actuators[j];
    ch.lambda = s.joints[j].lambda;
    ch.lambda_dot = s.joints[j].lambda_dot;
    ch.lambda_ddot = s.joints[j].lambda_ddot;
    ch.force = f(j);
    ch.power = p(j);
  }
  return s;
}

}  // namespace orthoglide
