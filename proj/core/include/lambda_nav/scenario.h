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

#ifndef LAMBDA_NAV_SCENARIO_H_
#define LAMBDA_NAV_SCENARIO_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lambda_nav/dem.h"
#include "lambda_nav/heightfield.h"
#include "lambda_nav/lambda_field.h"
#include "lambda_nav/lidar.h"
#include "lambda_nav/planner.h"
#include "lambda_nav/risk.h"

namespace lambda_nav {

struct GridConfig {
  Vec2 origin{-10.0, -10.0};
  double cell_size = 0.1;
  int width = 200;
  int height = 200;

  friend bool operator==(const GridConfig&, const GridConfig&) = default;
};

// Complete definition of one closed-loop experiment.
struct ScenarioConfig {
  GridConfig grid;
  double h_safe = 0.05;      // dem.h_safe, m
  double error_area = 1e-4;  // lambda.e, m^2
  double wheel_radius = 0.25;
  double wheel_stiffness = 150000.0;
  double mass = 50.0;
  PlannerConfig planner;
  LidarModel lidar{10.0, 360,
                   LidarModel::EvenRings(-0.2617993877991494,  // -15 deg
                                         0.017453292519943295,  // +1 deg
                                         16),
                   0.005, 0.5};
  std::vector<Primitive> environment;
  std::vector<Vec2> reference{{-8.0, 0.0}, {7.0, 0.0}};
  std::uint64_t seed = 1;
  double max_time = 60.0;  // s

  GridSpec MakeGrid() const;
  WheelModel MakeWheel() const;
  Heightfield MakeHeightfield() const;
  Vec2 goal() const { return reference.back(); }

  // Throws ValidationError naming the offending field.
  void Validate() const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

inline constexpr double kGoalTolerance = 0.3;    // m
inline constexpr double kStallSpeed = 0.01;      // m/s
inline constexpr double kStallDuration = 5.0;    // s
inline constexpr double kOnObstacleHeight = 0.005;  // m

// One closed-loop tick: the pose at time t and the control applied from it.
struct TraceRecord {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  double v = 0.0;
  double delta = 0.0;
  double expected_risk = 0.0;      // planner's E[r] for the chosen plan, J
  double ground_truth_risk = 0.0;  // wheel energy against the true terrain, J
  double cost = 0.0;
  int feasible_count = 0;
  std::string event;  // empty, or ';'-joined tags

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

enum class Termination { kGoal, kStall, kTimeout };

std::string TerminationName(Termination t);

struct ScenarioResult {
  std::vector<TraceRecord> trace;
  Termination termination = Termination::kTimeout;
  double end_time = 0.0;
  ElevationMap dem;
  LambdaField field;
};

// Read-only view handed to the per-tick observer after planning.
struct TickView {
  int tick;
  double t;
  const VehicleState& state;
  const Plan& plan;
  const LambdaField& field;
  const ElevationMap& dem;
};
using TickObserver = std::function<void(const TickView&)>;

// Seeds derived per tick so that every run with the same config is
// reproducible.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

// True terrain rises above kOnObstacleHeight at p.
bool OnObstacle(const Heightfield& hf, Vec2 p);

// Elevation model of the true terrain: every cell observed, z = maximum of a
// 5x5 sample lattice inside the cell.
ElevationMap GroundTruthElevation(const Heightfield& hf, const GridSpec& spec);

// scan -> integrate -> ingest -> plan -> step, every dt, until the goal is
// within kGoalTolerance, the robot stalls, or max_time elapses.
ScenarioResult RunScenario(const ScenarioConfig& cfg,
                           const TickObserver& observer = {});

// Perception only: scans from successive reference samples (at most
// `max_scans`, all when negative) and returns the resulting maps.
std::pair<ElevationMap, LambdaField> PerceptionSweep(const ScenarioConfig& cfg,
                                                     int max_scans = -1);

// CSV with header
// t,x,y,theta,v,delta,expected_risk,ground_truth_risk,cost,feasible_count,event
void WriteTraceCsv(std::ostream& os, const std::vector<TraceRecord>& trace);

struct ScenarioSummary {
  bool goal_reached = false;
  double total_time = 0.0;
  double max_expected_risk = 0.0;
  std::optional<double> min_crossing_speed;  // over ticks on an obstacle
  double path_length = 0.0;
};

ScenarioSummary Summarize(const ScenarioConfig& cfg, const ScenarioResult& result);

}  // namespace lambda_nav

#endif  // LAMBDA_NAV_SCENARIO_H_
