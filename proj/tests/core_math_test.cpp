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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "orthoglide/core_math.hpp"

namespace orthoglide {
namespace {

TEST(SkewTest, UnitZMatchesLayout) {
  Mat3d expected;
  expected << 0, -1, 0, 1, 0, 0, 0, 0, 0;
  EXPECT_EQ(skew(Vec3d::UnitZ()), expected);
}

TEST(SkewTest, ZeroVector) { EXPECT_EQ(skew(Vec3d::Zero()), Mat3d::Zero()); }

TEST(SkewTest, CrossProductIdentity) {
  EXPECT_EQ(skew(Vec3d::UnitX()) * Vec3d::UnitY(), Vec3d::UnitZ());
}

TEST(SkewTest, RandomProperties) {
  std::mt19937 rng(1);
  std::normal_distribution<double> n;
  for (int i = 0; i < 200; ++i) {
    const Vec3d u(n(rng), n(rng), n(rng));
    const Vec3d v(n(rng), n(rng), n(rng));
    EXPECT_LT((skew(u) * v + skew(v) * u).norm(), 1e-14);
    EXPECT_LT((skew(u) * v - u.cross(v)).norm(), 1e-14);
    EXPECT_EQ(skew(u).transpose(), -skew(u));
  }
}

TEST(RotZTest, Identity) { EXPECT_EQ(rot_z(0.0), Mat3d::Identity()); }

TEST(RotZTest, QuarterTurn) {
  Mat3d expected;
  expected << 0, 1, 0, -1, 0, 0, 0, 0, 1;
  EXPECT_LT((rot_z(std::numbers::pi / 2) - expected).norm(), 1e-16);
}

TEST(RotZTest, InversePairAndOrthogonality) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double phi = angle(rng);
    EXPECT_LT((rot_z(phi) * rot_z(-phi) - Mat3d::Identity()).norm(), 1e-14);
    EXPECT_LT((rot_z(phi).transpose() * rot_z(phi) - Mat3d::Identity()).norm(), 1e-14);
    EXPECT_NEAR(rot_z(phi).determinant(), 1.0, 1e-14);
  }
}

TEST(MatOpsTest, Determinants) {
  EXPECT_EQ(Mat3d::Identity().determinant(), 1.0);
  const Mat3d d = Vec3d(0.85, 0.85, 0.85).asDiagonal();
  EXPECT_NEAR(d.determinant(), 0.614125, 1e-15);
}

TEST(MatOpsTest, SolveIdentity) {
  const Vec3d b(1.5, -2.0, 0.25);
  EXPECT_EQ(solve3(Mat3d::Identity(), b), b);
}

TEST(MatOpsTest, SolveRecoversRandomSolutions) {
  std::mt19937 rng(3);
  std::normal_distribution<double> n;
  int tested = 0;
  while (tested < 200) {
    Mat3d a;
    for (int i = 0; i < 9; ++i) a(i / 3, i % 3) = n(rng);
    Eigen::JacobiSVD<Mat3d> svd(a);
    const double cond = svd.singularValues()(0) / svd.singularValues()(2);
    if (cond > 1e3) continue;
    ++tested;
    const Vec3d x(n(rng), n(rng), n(rng));
    const Vec3d b = a * x;
    const Vec3d got = solve3(a, b);
    EXPECT_LT((got - x).norm() / x.norm(), 1e-10);
    EXPECT_LE((a * got - b).norm(), 1e-12 * b.norm() * cond);
  }
}

TEST(MatOpsTest, SingularMatrixThrows) {
  Mat3d a;
  a << 1, 2, 3, 2, 4, 6, 0, 1, 1;
  EXPECT_THROW(solve3(a, Vec3d::Ones()), SingularMatrix);
  EXPECT_THROW(solve3(Mat3d::Zero(), Vec3d::Ones()), SingularMatrix);
}

TEST(MatOpsTest, SingularityTestIsScaleAware) {
  // A tiny but well-conditioned matrix is not singular.
  const Mat3d small = 1e-6 * Mat3d::Identity();
  EXPECT_FALSE(is_singular(small));
  EXPECT_NO_THROW(solve3(small, Vec3d::Ones()));
  Mat3d nearly = Mat3d::Identity();
  nearly(2, 2) = 1e-13;
  EXPECT_TRUE(is_singular(nearly));
}

TEST(MatOpsTest, LongDoubleInstantiation) {
  using Vec3l = Vec3<long double>;
  const Vec3l u(1.0L, 2.0L, 3.0L);
  EXPECT_EQ(skew(u) * u, Vec3l::Zero());
  EXPECT_NEAR(static_cast<double>(rot_z(0.3L).determinant()), 1.0, 1e-18);
}

}  // namespace
}  // namespace orthoglide
