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

// Fixed-size 3-vector / 3x3-matrix algebra used by the frame chains.
//
// Rotation matrices follow the coordinate-transform convention: a matrix
// a_{k,j} maps components expressed in frame j into frame k, so the absolute
// orientation a_{k0} maps fixed-frame components into body frame k and its
// transpose maps body components back to the fixed frame.

#pragma once

#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "orthoglide/errors.hpp"

namespace orthoglide {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;

using Vec3d = Vec3<double>;
using Mat3d = Mat3<double>;

/// Unit vectors of a frame.
template <typename Scalar>
Vec3<Scalar> unit_x() { return Vec3<Scalar>::UnitX(); }
template <typename Scalar>
Vec3<Scalar> unit_y() { return Vec3<Scalar>::UnitY(); }
template <typename Scalar>
Vec3<Scalar> unit_z() { return Vec3<Scalar>::UnitZ(); }

/// Cross-product matrix: skew(u) * w == u.cross(w).
template <typename Derived>
Mat3<typename Derived::Scalar> skew(const Eigen::MatrixBase<Derived>& u) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 3);
  using Scalar = typename Derived::Scalar;
  Mat3<Scalar> s;
  s << Scalar(0), -u(2), u(1),
       u(2), Scalar(0), -u(0),
       -u(1), u(0), Scalar(0);
  return s;
}

/// Relative rotation about the local z axis, coordinate-transform layout
/// [[c, s, 0], [-s, c, 0], [0, 0, 1]] (transpose of the active rotation).
template <typename Scalar>
Mat3<Scalar> rot_z(Scalar phi) {
  using std::cos;
  using std::sin;
  const Scalar c = cos(phi);
  const Scalar s = sin(phi);
  Mat3<Scalar> r;
  r << c, s, Scalar(0),
       -s, c, Scalar(0),
       Scalar(0), Scalar(0), Scalar(1);
  return r;
}

/// Builds a matrix from its rows, integer entries; used for the constant
/// permutation-like frame matrices.
template <typename Scalar>
Mat3<Scalar> mat_rows(int a00, int a01, int a02, int a10, int a11, int a12,
                      int a20, int a21, int a22) {
  Mat3<Scalar> m;
  m << Scalar(a00), Scalar(a01), Scalar(a02),
       Scalar(a10), Scalar(a11), Scalar(a12),
       Scalar(a20), Scalar(a21), Scalar(a22);
  return m;
}

/// Relative threshold below which a 3x3 system counts as singular.
inline constexpr double kSingularTolerance = 1e-12;

/// True when |det(a)| < tol * (max row norm)^3.
template <typename Derived>
bool is_singular(const Eigen::MatrixBase<Derived>& a,
                 double tol = kSingularTolerance) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  const Scalar scale = a.rowwise().norm().maxCoeff();
  const Scalar det = a.determinant();
  return !(abs(det) >= Scalar(tol) * scale * scale * scale) || scale == Scalar(0);
}

/// Solves a * x = b for a 3x3 system. Throws SingularMatrix when a fails the
/// scale-aware determinant test.
template <typename DerivedA, typename DerivedB>
Vec3<typename DerivedA::Scalar> solve3(const Eigen::MatrixBase<DerivedA>& a,
                                       const Eigen::MatrixBase<DerivedB>& b,
                                       double tol = kSingularTolerance) {
  EIGEN_STATIC_ASSERT_FIXED_SIZE(DerivedA);
  if (is_singular(a, tol)) {
    std::ostringstream msg;
    msg << "singular 3x3 system, det = " << a.determinant();
    throw SingularMatrix(msg.str());
  }
  return a.partialPivLu().solve(b);
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

}  // namespace orthoglide
