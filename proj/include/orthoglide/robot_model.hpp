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

// Physical parameters and constant frame data of the Orthoglide.
//
// Each leg is a PRPaR chain of bodies numbered as follows:
//   1  slider rod A1A2 (prismatic along z1)
//   2  transmission rod A3A6, origin at its centre A2
//   3  parallelogram bar A3A4
//   4  coupler A4A7, parallel to body 2
//   5  moving platform, origin at the coupler centre A5
//   6  second parallelogram bar A6A7, parallel to body 3
// Body 4 keeps the angle of body 3 (phi43 = phi32) and body 5 keeps the
// angle of body 2 (phi54 = phi21), which is what holds the platform in pure
// translation.

#pragma once

#include <array>
#include <cmath>
#include <filesystem>
#include <iosfwd>
#include <numbers>
#include <string>

#include "orthoglide/core_math.hpp"

namespace orthoglide {

enum class Leg { A = 0, B = 1, C = 2 };

inline constexpr std::array<Leg, 3> kLegs = {Leg::A, Leg::B, Leg::C};

inline int leg_index(Leg leg) { return static_cast<int>(leg); }

inline char leg_name(Leg leg) { return "ABC"[leg_index(leg)]; }

/// Parses 'A', 'B' or 'C' (case-insensitive). Throws UnknownLeg otherwise.
Leg parse_leg(char id);

template <typename Scalar>
struct RobotGeometry {
  Scalar l;      // platform cube side
  Scalar l1;     // slider rod A1A2
  Scalar l2;     // transmission rod A3A6
  Scalar l3;     // parallelogram bar
  Scalar l4;     // coupler, always equal to l2
  Scalar alpha;  // slider orientation about its guide-way
};

template <typename Scalar>
struct MassProperties {
  Scalar m1, m2, m3, m4, m5, m6;
  // Inertia tensors in the body frame about the link origin A_k.
  Mat3<Scalar> J2, J3, J4, J6;
  // Platform inertia about its mass centre G.
  Mat3<Scalar> JG;
  Scalar g;
  Vec3<Scalar> g_dir;  // unit direction of gravity in the fixed frame
};

template <typename Scalar>
struct RobotModel {
  RobotGeometry<Scalar> geometry;
  MassProperties<Scalar> masses;

  template <typename Other>
  RobotModel<Other> cast() const;
};

template <typename Scalar>
struct InertiaSet {
  Mat3<Scalar> J2, J3, J4, J6, JG;
};

/// Slender homogeneous rods for the bars and a homogeneous cube for the
/// platform. Each tensor is taken about its body's link origin:
///   J2  rod along z2 about its centre A2:     m2 l2^2 / 12 on x, y
///   J3  rod along -y3 about its end A3:       m3 l3^2 / 3 on x, z
///   J4  rod along x4 about its end A4:        m4 l2^2 / 3 on y, z
///   J6  as J3 with m6
///   JG  cube about its centre:                m5 l^2 / 6 on every axis
template <typename Scalar>
InertiaSet<Scalar> inertia_from_geometry(const RobotGeometry<Scalar>& geom,
                                         const MassProperties<Scalar>& masses) {
  InertiaSet<Scalar> out;
  const Scalar rod2 = masses.m2 * geom.l2 * geom.l2 / Scalar(12);
  const Scalar bar3 = masses.m3 * geom.l3 * geom.l3 / Scalar(3);
  const Scalar bar6 = masses.m6 * geom.l3 * geom.l3 / Scalar(3);
  const Scalar coupler = masses.m4 * geom.l4 * geom.l4 / Scalar(3);
  const Scalar cube = masses.m5 * geom.l * geom.l / Scalar(6);
  out.J2 = Vec3<Scalar>(rod2, rod2, Scalar(0)).asDiagonal();
  out.J3 = Vec3<Scalar>(bar3, Scalar(0), bar3).asDiagonal();
  out.J6 = Vec3<Scalar>(bar6, Scalar(0), bar6).asDiagonal();
  out.J4 = Vec3<Scalar>(Scalar(0), coupler, coupler).asDiagonal();
  out.JG = Mat3<Scalar>::Identity() * cube;
  return out;
}

/// Refreshes the inertia tensors of `model` from its geometry and masses.
template <typename Scalar>
void assign_inertia(RobotModel<Scalar>& model) {
  const auto set = inertia_from_geometry(model.geometry, model.masses);
  model.masses.J2 = set.J2;
  model.masses.J3 = set.J3;
  model.masses.J4 = set.J4;
  model.masses.J6 = set.J6;
  model.masses.JG = set.JG;
}

/// The reference Orthoglide: l = 0.20, l1 = 0.15, l2 = l4 = 0.08,
/// l3 = 0.85 (m), alpha = pi/4, masses 0.35 / 0.2 / 2.5 / 0.2 / 15 / 2.5 kg,
/// gravity 9.81 m/s^2 along -z0.
template <typename Scalar = double>
RobotModel<Scalar> default_model() {
  RobotModel<Scalar> model;
  auto& g = model.geometry;
  g.l = Scalar(0.20);
  g.l1 = Scalar(0.15);
  g.l2 = Scalar(0.08);
  g.l3 = Scalar(0.85);
  g.l4 = g.l2;
  g.alpha = std::numbers::pi_v<Scalar> / Scalar(4);
  auto& m = model.masses;
  m.m1 = Scalar(0.35);
  m.m2 = Scalar(0.2);
  m.m3 = Scalar(2.5);
  m.m4 = m.m2;
  m.m5 = Scalar(15);
  m.m6 = m.m3;
  m.g = Scalar(9.81);
  m.g_dir = Vec3<Scalar>(Scalar(0), Scalar(0), Scalar(-1));
  assign_inertia(model);
  return model;
}

template <typename Scalar>
template <typename Other>
RobotModel<Other> RobotModel<Scalar>::cast() const {
  RobotModel<Other> out;
  const auto& g = geometry;
  out.geometry = {Other(g.l), Other(g.l1), Other(g.l2),
                  Other(g.l3), Other(g.l4), Other(g.alpha)};
  const auto& m = masses;
  auto& o = out.masses;
  o.m1 = Other(m.m1);
  o.m2 = Other(m.m2);
  o.m3 = Other(m.m3);
  o.m4 = Other(m.m4);
  o.m5 = Other(m.m5);
  o.m6 = Other(m.m6);
  o.J2 = m.J2.template cast<Other>();
  o.J3 = m.J3.template cast<Other>();
  o.J4 = m.J4.template cast<Other>();
  o.J6 = m.J6.template cast<Other>();
  o.JG = m.JG.template cast<Other>();
  o.g = Other(m.g);
  o.g_dir = m.g_dir.template cast<Other>();
  return out;
}

/// Constant frame matrices shared by the three legs.
template <typename Scalar>
struct FrameConstants {
  static Mat3<Scalar> a1() { return mat_rows<Scalar>(0, 0, -1, 0, 1, 0, 1, 0, 0); }
  static Mat3<Scalar> a2() { return mat_rows<Scalar>(0, 0, 1, 0, 1, 0, -1, 0, 0); }
  static Mat3<Scalar> a3() { return mat_rows<Scalar>(0, 0, -1, -1, 0, 0, 0, 1, 0); }
  static Mat3<Scalar> a4() { return mat_rows<Scalar>(-1, 0, 0, 0, 1, 0, 0, 0, -1); }
  static Mat3<Scalar> a5() { return mat_rows<Scalar>(-1, 0, 0, 0, 0, 1, 0, 1, 0); }
  static Mat3<Scalar> a6() { return mat_rows<Scalar>(0, -1, 0, 1, 0, 0, 0, 0, 1); }
};

/// Constant frame data of one leg. Offsets r_{k,k-1} locate the origin of
/// body k in the frame of its parent; r5G locates the platform centre G in
/// the platform frame of this leg.
template <typename Scalar>
struct LegFrames {
  Leg leg;
  Mat3<Scalar> base;  // a10: fixed frame -> slider frame
  Mat3<Scalar> a2, a3, a4;
  Vec3<Scalar> r21, r32, r43, r54, r62, r5G;
  Scalar slider_offset;  // l1 cos(alpha) + l3 + l/2

  /// Position of A1 in the fixed frame for slider displacement `lambda`.
  Vec3<Scalar> r10(Scalar lambda) const {
    return (lambda - slider_offset) * base.transpose() * unit_z<Scalar>();
  }
};

template <typename Scalar>
LegFrames<Scalar> leg_frames(Leg leg, const RobotGeometry<Scalar>& geom) {
  using std::cos;
  using std::sin;
  using F = FrameConstants<Scalar>;
  LegFrames<Scalar> f;
  f.leg = leg;
  switch (leg) {
    case Leg::A: f.base = F::a1(); break;
    case Leg::B: f.base = F::a5(); break;
    case Leg::C: f.base = F::a6(); break;
    default: throw UnknownLeg("unknown leg id " + std::to_string(leg_index(leg)));
  }
  f.a2 = F::a2();
  f.a3 = F::a3();
  f.a4 = F::a4();
  const Scalar s = sin(geom.alpha);
  const Scalar c = cos(geom.alpha);
  f.r21 = Vec3<Scalar>(Scalar(0), geom.l1 * s, geom.l1 * c);
  f.r32 = -geom.l2 / Scalar(2) * unit_z<Scalar>();
  f.r43 = -geom.l3 * unit_y<Scalar>();
  f.r54 = geom.l4 / Scalar(2) * unit_x<Scalar>();
  f.r62 = geom.l2 / Scalar(2) * unit_z<Scalar>();
  f.r5G = Vec3<Scalar>(geom.l1 * s, -geom.l / Scalar(2), Scalar(0));
  f.slider_offset = geom.l1 * c + geom.l3 + geom.l / Scalar(2);
  return f;
}

/// Constant orientation a50 of the platform frame reached through each leg.
/// Any pose obeying phi54 = phi21 and phi43 = phi32 composes to these.
template <typename Scalar>
std::array<Mat3<Scalar>, 3> platform_target_frames() {
  return {mat_rows<Scalar>(0, -1, 0, -1, 0, 0, 0, 0, -1),
          mat_rows<Scalar>(0, 0, -1, 0, -1, 0, -1, 0, 0),
          mat_rows<Scalar>(-1, 0, 0, 0, 0, -1, 0, -1, 0)};
}

/// Throws ConfigError when lengths or masses are non-positive, l4 != l2, or
/// the gravity direction is not a unit vector.
void validate(const RobotModel<double>& model);

/// Reads a key=value parameter file (keys l, l1, l2, l3, alpha, m1..m6, g;
/// '#' starts a comment). Unlisted keys keep their default values.
RobotModel<double> parse_model(std::istream& in);
RobotModel<double> load_model(const std::filesystem::path& path);
void write_model(std::ostream& out, const RobotModel<double>& model);

}  // namespace orthoglide
