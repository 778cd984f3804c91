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

#ifndef LAMBDA_NAV_KINEMATICS_H_
#define LAMBDA_NAV_KINEMATICS_H_

#include <span>
#include <vector>

#include "lambda_nav/grid.h"

namespace lambda_nav {

// Rear-axle pose. theta is kept in (-pi, pi].
struct VehicleState {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  Vec2 position() const { return {x, y}; }
  friend bool operator==(const VehicleState&, const VehicleState&) = default;
};

struct ControlInput {
  double v = 0.0;      // m/s
  double delta = 0.0;  // steering angle, rad

  friend bool operator==(const ControlInput&, const ControlInput&) = default;
};

// Wraps an angle to (-pi, pi].
double WrapAngle(double a);

// One forward-Euler step of the kinematic Ackermann model. Throws
// InvalidSteering if |delta| >= pi/2.
VehicleState StepModel(const VehicleState& s, const ControlInput& u,
                       double wheelbase, double dt);

struct TrajectoryStep {
  VehicleState state;    // state reached by applying `control`
  ControlInput control;  // control applied from the previous state
};

// A predicted trajectory: start state x_0 followed by (x_{k+1}, u_k) pairs.
struct Trajectory {
  VehicleState start;
  std::vector<TrajectoryStep> steps;

  const VehicleState& final_state() const {
    return steps.empty() ? start : steps.back().state;
  }
  // x_0, x_1, ..., x_N as points.
  std::vector<Vec2> Polyline() const;
};

// Iterates StepModel over the controls.
Trajectory Rollout(const VehicleState& start,
                   std::span<const ControlInput> controls, double wheelbase,
                   double dt);

}  // namespace lambda_nav

#endif  // LAMBDA_NAV_KINEMATICS_H_
