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

#ifndef LAMBDA_NAV_PLANNER_H_
#define LAMBDA_NAV_PLANNER_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "lambda_nav/dem.h"
#include "lambda_nav/kinematics.h"
#include "lambda_nav/lambda_field.h"
#include "lambda_nav/risk.h"

namespace lambda_nav {

// Candidate generation for the sampling-based shooting optimizer.
struct SamplerConfig {
  int velocity_levels = 16;   // constant-speed lattice, 0..v_max inclusive
  int steering_levels = 9;    // constant-steering lattice, -max..max inclusive
  int perturbations = 32;     // random perturbations of the warm start
  double perturb_sigma_v = 0.15;
  double perturb_sigma_delta = 0.04;

  friend bool operator==(const SamplerConfig&, const SamplerConfig&) = default;
};

struct PlannerConfig {
  double wheelbase = 0.5;  // L, m
  double dt = 0.1;         // s
  int horizon = 40;        // N_p
  std::array<double, 3> q{0.05, 0.05, 0.05};           // stage weights x,y,theta
  std::array<double, 3> q_terminal{1.0, 1.0, 1.0};     // terminal weights
  double w_v = 0.1;
  double v_max = 1.5;                   // m/s
  double delta_max = 0.19198621771937624;  // 11 degrees, rad
  double r_threshold = 0.0;             // J
  double track_width = 0.8;             // m
  SamplerConfig sampler;

  // Throws ValidationError naming the offending "planner.*" field.
  void Validate() const;

  friend bool operator==(const PlannerConfig&, const PlannerConfig&) = default;
};

// Resamples a waypoint polyline at fixed arc-length spacing. Each desired
// state is headed along its segment; the last waypoint is always included.
// Throws EmptyReference for an empty polyline.
std::vector<VehicleState> SampleReference(std::span<const Vec2> waypoints,
                                          double spacing);

// Index of the reference sample closest to s in the plane (first on ties).
std::size_t NearestReferenceIndex(std::span<const VehicleState> ref,
                                  const VehicleState& s);

// horizon + 1 desired states starting at the sample nearest to s; past the
// end of the reference the last state is repeated.
std::vector<VehicleState> ReferenceSlice(std::span<const VehicleState> ref,
                                         const VehicleState& s,
                                         const PlannerConfig& cfg);

// Tracking + terminal + speed cost of a trajectory against horizon + 1 desired
// states. Yaw residuals are wrapped before weighting.
double TrajectoryCost(const Trajectory& trajectory,
                      std::span<const VehicleState> refs,
                      const PlannerConfig& cfg);

struct PlanDiagnostics {
  double cost = 0.0;
  double expected_risk = 0.0;
  int candidates = 0;
  int feasible = 0;
};

struct Plan {
  std::vector<ControlInput> controls;
  Trajectory trajectory;
  PlanDiagnostics diagnostics;
};

// Receding-horizon planner: minimises TrajectoryCost over sampled control
// sequences subject to ExpectedRisk <= r_threshold. Candidates that break the
// risk bound are discarded, never penalised. The all-stop sequence is always a
// candidate, so a plan is always returned.
class RiskConstrainedPlanner {
 public:
  RiskConstrainedPlanner(const PlannerConfig& cfg, const WheelModel& wheel);

  const PlannerConfig& config() const { return cfg_; }
  const WheelModel& wheel() const { return wheel_; }

  // Candidate control sequences, in scoring order. `warm_start` is the
  // previous plan (may be empty); it is shifted by one step before use.
  std::vector<std::vector<ControlInput>> Candidates(
      std::span<const ControlInput> warm_start, std::uint64_t seed) const;

  // Best feasible plan, ties broken by lower expected risk then lower
  // candidate index. Pure with respect to its arguments.
  Plan Solve(const VehicleState& state, std::span<const VehicleState> reference,
             const LambdaField& field, const ElevationMap& dem,
             std::span<const ControlInput> warm_start,
             std::uint64_t seed) const;

 private:
  ControlInput Clamp(ControlInput u) const;

  PlannerConfig cfg_;
  WheelModel wheel_;
};

}  // namespace lambda_nav

#endif  // LAMBDA_NAV_PLANNER_H_
