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

#include "lambda_nav/scenario.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "csv.h"
#include "lambda_nav/errors.h"

namespace lambda_nav {
namespace {

// Tags the traversal phases of the obstacle under the rear axle.
class TerrainEvents {
 public:
  explicit TerrainEvents(const Heightfield& hf) : hf_(hf) {}

  std::string Update(const VehicleState& s) {
    const Vec2 p = s.position();
    const Vec2 fwd{std::cos(s.theta) * kProbe, std::sin(s.theta) * kProbe};
    const double z = hf_.Sample(p);
    const double slope = hf_.Sample({p.x + fwd.x, p.y + fwd.y}) -
                         hf_.Sample({p.x - fwd.x, p.y - fwd.y});
    const bool on = z > kOnObstacleHeight;
    switch (phase_) {
      case Phase::kGround:
        if (on) {
          phase_ = Phase::kClimbing;
          return "climb";
        }
        break;
      case Phase::kClimbing:
      case Phase::kTop:
      case Phase::kDescending:
        if (!on) {
          phase_ = Phase::kGround;
          return "asphalt";
        }
        if (phase_ == Phase::kClimbing && std::abs(slope) < kOnObstacleHeight) {
          phase_ = Phase::kTop;
          return "top";
        }
        if (phase_ != Phase::kDescending && slope < -kOnObstacleHeight) {
          phase_ = Phase::kDescending;
          return "descend";
        }
        break;
    }
    return {};
  }

 private:
  enum class Phase { kGround, kClimbing, kTop, kDescending };
  static constexpr double kProbe = 0.05;

  const Heightfield& hf_;
  Phase phase_ = Phase::kGround;
};

void AppendTag(std::string& event, const std::string& tag) {
  if (tag.empty()) return;
  if (!event.empty()) event += ';';
  event += tag;
}

// Whether following the reference at v_max over the horizon would cross a
// cell with non-zero intensity.
bool HazardOnReference(const LambdaField& field,
                       const std::vector<VehicleState>& slice) {
  std::vector<Vec2> pts;
  for (const VehicleState& s : slice) {
    if (!field.spec().Contains(s.position())) break;
    pts.push_back(s.position());
  }
  if (pts.empty()) return false;
  for (const CellIndex& c : RasterPath(field.spec(), pts)) {
    if (field.lambda(c) > 0.0) return true;
  }
  return false;
}

double GroundTruthRisk(const ElevationMap& truth, const VehicleState& s,
                       double v, const WheelModel& wheel, double track_width) {
  double h = 0.0;
  try {
    for (const CellIndex& c :
         TransverseCells(truth.spec(), s.position(), s.theta, track_width)) {
      h = std::max(h, truth.ElevationDiffOrZero(c));
    }
  } catch (const OutOfGrid&) {
    return 0.0;
  }
  return CollisionEnergy(v, h, wheel);
}

}  // namespace

GridSpec ScenarioConfig::MakeGrid() const {
  return GridSpec(grid.origin, grid.cell_size, grid.width, grid.height);
}

WheelModel ScenarioConfig::MakeWheel() const {
  return WheelModel(wheel_radius, wheel_stiffness, mass);
}

Heightfield ScenarioConfig::MakeHeightfield() const {
  return Heightfield(environment);
}

void ScenarioConfig::Validate() const {
  auto require = [](bool ok, const char* field, const char* what) {
    if (!ok) throw ValidationError(field, what);
  };
  require(grid.cell_size > 0.0, "grid.cell_size", "must be > 0");
  require(grid.width >= 1, "grid.width", "must be >= 1");
  require(grid.height >= 1, "grid.height", "must be >= 1");
  require(h_safe > 0.0, "dem.h_safe", "must be > 0");
  require(error_area > 0.0, "lambda.e", "must be > 0");
  require(wheel_radius > 0.0, "wheel.R", "must be > 0");
  require(wheel_stiffness > 0.0, "wheel.k_r", "must be > 0");
  require(mass > 0.0, "wheel.m", "must be > 0");
  planner.Validate();
  lidar.Validate();
  require(!reference.empty(), "reference.waypoints", "must not be empty");
  const GridSpec spec = MakeGrid();
  for (const Vec2& p : reference) {
    require(spec.Contains(p), "reference.waypoints", "points must lie inside the grid");
  }
  require(max_time > 0.0, "max_time", "must be > 0");
  require(seed <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()),
          "seed", "must fit a signed 64-bit integer");
  for (const Primitive& p : environment) {
    const bool ok = std::visit(
        [](const auto& k) { return std::isfinite(k.height) && k.height >= 0.0; }, p);
    require(ok, "environment.height", "must be finite and >= 0");
  }
}

std::string TerminationName(Termination t) {
  switch (t) {
    case Termination::kGoal:
      return "goal";
    case Termination::kStall:
      return "stall";
    case Termination::kTimeout:
      return "timeout";
  }
  return "unknown";
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finaliser over the combined value.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool OnObstacle(const Heightfield& hf, Vec2 p) {
  return hf.Sample(p) > kOnObstacleHeight;
}

ElevationMap GroundTruthElevation(const Heightfield& hf, const GridSpec& spec) {
  ElevationMap truth(spec);
  std::vector<Point3> pts;
  pts.reserve(spec.cell_count() * 25);
  const double c = spec.cell_size();
  for (std::size_t off = 0; off < spec.cell_count(); ++off) {
    const CellIndex idx = spec.FromOffset(off);
    const double x0 = spec.ColumnEdge(idx.col);
    const double y0 = spec.RowEdge(idx.row);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        const Vec2 p{x0 + (i + 0.5) * c / 5.0, y0 + (j + 0.5) * c / 5.0};
        pts.push_back({p.x, p.y, hf.Sample(p)});
      }
    }
  }
  truth.IntegrateCloud(pts);
  return truth;
}

ScenarioResult RunScenario(const ScenarioConfig& cfg,
                           const TickObserver& observer) {
  cfg.Validate();
  const GridSpec spec = cfg.MakeGrid();
  const WheelModel wheel = cfg.MakeWheel();
  const Heightfield hf = cfg.MakeHeightfield();
  const ElevationMap truth = GroundTruthElevation(hf, spec);
  const PlannerConfig& pc = cfg.planner;
  const RiskConstrainedPlanner planner(pc, wheel);
  const std::vector<VehicleState> reference =
      SampleReference(cfg.reference, pc.v_max * pc.dt);

  ScenarioResult result{{}, Termination::kTimeout, 0.0, ElevationMap(spec),
                        LambdaField(spec, cfg.error_area)};
  VehicleState state = reference.front();
  std::vector<ControlInput> warm;
  TerrainEvents terrain(hf);
  bool hazard_reported = false;
  double stalled_for = 0.0;
  const Vec2 goal = cfg.goal();
  const auto max_ticks = static_cast<long>(std::ceil(cfg.max_time / pc.dt - 1e-9));

  for (long tick = 0;; ++tick) {
    const double t = tick * pc.dt;
    const auto u_tick = static_cast<std::uint64_t>(tick);
    TraceRecord rec;
    rec.t = t;
    rec.x = state.x;
    rec.y = state.y;
    rec.theta = state.theta;
    AppendTag(rec.event, terrain.Update(state));

    const double to_goal = std::hypot(goal.x - state.x, goal.y - state.y);
    if (to_goal < kGoalTolerance) {
      result.termination = Termination::kGoal;
    } else if (stalled_for >= kStallDuration - 1e-9) {
      result.termination = Termination::kStall;
    } else if (tick >= max_ticks) {
      result.termination = Termination::kTimeout;
    } else {
      const std::vector<Point3> cloud =
          Scan(hf, state, cfg.lidar, DeriveSeed(cfg.seed, 2 * u_tick));
      const std::vector<CellIndex> touched = result.dem.IntegrateCloud(cloud);
      result.field.IngestScan(result.dem, touched, cfg.h_safe, cfg.wheel_radius);

      if (!hazard_reported &&
          HazardOnReference(result.field, ReferenceSlice(reference, state, pc))) {
        hazard_reported = true;
        AppendTag(rec.event, "hazard_ahead");
      }

      const Plan plan = planner.Solve(state, reference, result.field, result.dem,
                                      warm, DeriveSeed(cfg.seed, 2 * u_tick + 1));
      if (observer) {
        observer(TickView{static_cast<int>(tick), t, state, plan, result.field,
                          result.dem});
      }
      const ControlInput u = plan.controls.front();
      rec.v = u.v;
      rec.delta = u.delta;
      rec.expected_risk = plan.diagnostics.expected_risk;
      rec.ground_truth_risk =
          GroundTruthRisk(truth, state, u.v, wheel, pc.track_width);
      rec.cost = plan.diagnostics.cost;
      rec.feasible_count = plan.diagnostics.feasible;
      result.trace.push_back(std::move(rec));

      stalled_for = u.v < kStallSpeed ? stalled_for + pc.dt : 0.0;
      state = StepModel(state, u, pc.wheelbase, pc.dt);
      warm = plan.controls;
      continue;
    }
    AppendTag(rec.event, TerminationName(result.termination));
    result.end_time = t;
    result.trace.push_back(std::move(rec));
    break;
  }
  return result;
}

std::pair<ElevationMap, LambdaField> PerceptionSweep(const ScenarioConfig& cfg,
                                                     int max_scans) {
  cfg.Validate();
  const GridSpec spec = cfg.MakeGrid();
  const Heightfield hf = cfg.MakeHeightfield();
  const std::vector<VehicleState> reference =
      SampleReference(cfg.reference, cfg.planner.v_max * cfg.planner.dt);
  ElevationMap dem(spec);
  LambdaField field(spec, cfg.error_area);
  const std::size_t n =
      max_scans < 0 ? reference.size()
                    : std::min(reference.size(), static_cast<std::size_t>(max_scans));
  for (std::size_t i = 0; i < n; ++i) {
    const auto cloud = Scan(hf, reference[i], cfg.lidar, DeriveSeed(cfg.seed, 2 * i));
    const auto touched = dem.IntegrateCloud(cloud);
    field.IngestScan(dem, touched, cfg.h_safe, cfg.wheel_radius);
  }
  return {std::move(dem), std::move(field)};
}

void WriteTraceCsv(std::ostream& os, const std::vector<TraceRecord>& trace) {
  os << "t,x,y,theta,v,delta,expected_risk,ground_truth_risk,cost,"
        "feasible_count,event\n";
  for (const TraceRecord& r : trace) {
    os << csv::FormatDouble(r.t) << ',' << csv::FormatDouble(r.x) << ','
       << csv::FormatDouble(r.y) << ',' << csv::FormatDouble(r.theta) << ','
       << csv::FormatDouble(r.v) << ',' << csv::FormatDouble(r.delta) << ','
       << csv::FormatDouble(r.expected_risk) << ','
       << csv::FormatDouble(r.ground_truth_risk) << ','
       << csv::FormatDouble(r.cost) << ',' << r.feasible_count << ','
       << r.event << '\n';
  }
}

ScenarioSummary Summarize(const ScenarioConfig& cfg,
                          const ScenarioResult& result) {
  const Heightfield hf = cfg.MakeHeightfield();
  ScenarioSummary s;
  s.goal_reached = result.termination == Termination::kGoal;
  s.total_time = result.end_time;
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    const TraceRecord& r = result.trace[i];
    s.max_expected_risk = std::max(s.max_expected_risk, r.expected_risk);
    if (i + 1 < result.trace.size()) {
      const TraceRecord& n = result.trace[i + 1];
      s.path_length += std::hypot(n.x - r.x, n.y - r.y);
      if (OnObstacle(hf, {r.x, r.y})) {
        s.min_crossing_speed =
            std::min(s.min_crossing_speed.value_or(r.v), r.v);
      }
    }
  }
  return s;
}

}  // namespace lambda_nav
