// Copyright 2026 The lambda_nav Authors
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

#include "lambda_nav/kinematics.h"

#include <cmath>
#include <numbers>

#include "lambda_nav/errors.h"

namespace lambda_nav {

double WrapAngle(double a) {
  constexpr double kPi = std::numbers::pi;
  double w = std::remainder(a, 2.0 * kPi);  // [-pi, pi]
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

VehicleState StepModel(const VehicleState& s, const ControlInput& u,
                       double wheelbase, double dt) {
  if (!(std::abs(u.delta) < std::numbers::pi / 2.0)) {
    throw InvalidSteering("steering angle must satisfy |delta| < pi/2");
  }
  return {s.x + dt * u.v * std::cos(s.theta),
          s.y + dt * u.v * std::sin(s.theta),
          WrapAngle(s.theta + dt * u.v * std::tan(u.delta) / wheelbase)};
}

std::vector<Vec2> Trajectory::Polyline() const {
  std::vector<Vec2> pts;
  pts.reserve(steps.size() + 1);
  pts.push_back(start.position());
  for (const TrajectoryStep& s : steps) pts.push_back(s.state.position());
  return pts;
}

Trajectory Rollout(const VehicleState& start,
                   std::span<const ControlInput> controls, double wheelbase,
                   double dt) {
  Trajectory traj{start, {}};
  traj.steps.reserve(controls.size());
  VehicleState s = start;
  for (const ControlInput& u : controls) {
    s = StepModel(s, u, wheelbase, dt);
    traj.steps.push_back({s, u});
  }
  return traj;
}

}  // namespace lambda_nav
