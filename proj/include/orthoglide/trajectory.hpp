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

#include <cmath>
#include <functional>
#include <numbers>

#include "orthoglide/kinematics.hpp"

namespace orthoglide {

/// r(t) = amplitude * (1 - cos(rate * t)), starting at rest from the origin.
template <typename Scalar>
struct CosineTrajectory {
  Vec3<Scalar> amplitude{Scalar(0.05), Scalar(0.10), Scalar(-0.20)};
  Scalar rate = std::numbers::pi_v<Scalar> / Scalar(3);
  Scalar duration = Scalar(2);

  PlatformState<Scalar> operator()(Scalar t) const {
    using std::cos;
    using std::sin;
    const Scalar c = cos(rate * t);
    const Scalar s = sin(rate * t);
    PlatformState<Scalar> out;
    out.r = amplitude * (Scalar(1) - c);
    out.v = amplitude * (rate * s);
    out.a = amplitude * (rate * rate * c);
    return out;
  }
};

template <typename Scalar>
PlatformState<Scalar> cosine_trajectory(Scalar t, const CosineTrajectory<Scalar>& params) {
  return params(t);
}

/// Any prescribed platform motion t -> (r, v, a).
using Trajectory = std::function<PlatformState<double>(double)>;

}  // namespace orthoglide
