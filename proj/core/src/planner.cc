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

#include "lambda_nav/planner.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <tuple>

#include "lambda_nav/errors.h"

namespace lambda_nav {
namespace {

// Switch times below are fractions of the horizon.
constexpr double kSpeedSwitchTimes[] = {0.2, 0.4, 0.6, 0.8};
constexpr double kSpeedSwitchFractions[] = {1.0, 0.75, 0.5};
constexpr double kSteerSwitchTimes[] = {0.25, 0.5};
constexpr double kSteerSwitchFractions[] = {1.0, 0.5, 0.25};
constexpr double kLaneChangeDelays[] = {0.0, 0.25};
constexpr double kLaneChangeArcs[] = {0.125, 0.25, 0.375};

std::vector<std::size_t> SwitchSteps(std::span<const double> times,
                                     std::size_t n) {
  std::vector<std::size_t> out;
  for (double t : times) {
    const auto m = static_cast<std::size_t>(std::lround(t * static_cast<double>(n)));
    if (m >= 1 && m < n && (out.empty() || out.back() != m)) out.push_back(m);
  }
  return out;
}

std::vector<double> Levels(double lo, double hi, int n) {
  std::vector<double> out;
  if (n <= 1) {
    out.push_back(hi);
    return out;
  }
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}

double Quadratic(const VehicleState& x, const VehicleState& ref,
                 const std::array<double, 3>& w) {
  const double ex = x.x - ref.x;
  const double ey = x.y - ref.y;
  const double et = WrapAngle(x.theta - ref.theta);
  return w[0] * ex * ex + w[1] * ey * ey + w[2] * et * et;
}

}  // namespace

void PlannerConfig::Validate() const {
  auto require = [](bool ok, const char* field, const char* what) {
    if (!ok) throw ValidationError(field, what);
  };
  require(wheelbase > 0.0, "planner.wheelbase", "must be > 0");
  require(dt > 0.0, "planner.dt", "must be > 0");
  require(horizon >= 1, "planner.horizon", "must be >= 1");
  for (double w : q) require(w >= 0.0, "planner.q", "weights must be >= 0");
  for (double w : q_terminal) {
    require(w >= 0.0, "planner.q_terminal", "weights must be >= 0");
  }
  require(w_v >= 0.0, "planner.w_v", "must be >= 0");
  require(v_max > 0.0, "planner.v_max", "must be > 0");
  require(delta_max >= 0.0 && delta_max < std::numbers::pi / 2.0,
          "planner.delta_max", "must be in [0, pi/2)");
  require(r_threshold >= 0.0, "planner.r_threshold", "must be >= 0");
  require(track_width > 0.0, "planner.track_width", "must be > 0");
}

std::vector<VehicleState> SampleReference(std::span<const Vec2> waypoints,
                                          double spacing) {
  if (waypoints.empty()) throw EmptyReference("reference path has no points");
  if (!(spacing > 0.0)) {
    throw std::invalid_argument("SampleReference: spacing must be > 0");
  }
  std::vector<VehicleState> out;
  double heading = 0.0;
  // Heading of the first non-degenerate segment, used for leading samples.
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
    const double dx = waypoints[i + 1].x - waypoints[i].x;
    const double dy = waypoints[i + 1].y - waypoints[i].y;
    if (dx != 0.0 || dy != 0.0) {
      heading = std::atan2(dy, dx);
      break;
    }
  }
  double carry = 0.0;  // arc length already consumed on the current segment
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
    const Vec2 a = waypoints[i];
    const Vec2 b = waypoints[i + 1];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    if (len == 0.0) continue;
    heading = std::atan2(b.y - a.y, b.x - a.x);
    for (int k = 0;; ++k) {
      const double s = carry + k * spacing;
      if (s >= len) break;
      const double f = s / len;
      out.push_back({a.x + f * (b.x - a.x), a.y + f * (b.y - a.y), heading});
    }
    const double consumed = len - carry;
    const double remainder = std::fmod(consumed, spacing);
    carry = remainder == 0.0 ? 0.0 : spacing - remainder;
  }
  out.push_back({waypoints.back().x, waypoints.back().y, WrapAngle(heading)});
  return out;
}

std::size_t NearestReferenceIndex(std::span<const VehicleState> ref,
                                  const VehicleState& s) {
  if (ref.empty()) throw EmptyReference("reference trajectory is empty");
  std::size_t best = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const double dx = ref[i].x - s.x;
    const double dy = ref[i].y - s.y;
    const double d2 = dx * dx + dy * dy;
    if (d2 < best_d2) {
      best_d2 = d2;
      best = i;
    }
  }
  return best;
}

std::vector<VehicleState> ReferenceSlice(std::span<const VehicleState> ref,
                                         const VehicleState& s,
                                         const PlannerConfig& cfg) {
  const std::size_t start = NearestReferenceIndex(ref, s);
  std::vector<VehicleState> out;
  out.reserve(static_cast<std::size_t>(cfg.horizon) + 1);
  for (int k = 0; k <= cfg.horizon; ++k) {
    out.push_back(ref[std::min(start + static_cast<std::size_t>(k), ref.size() - 1)]);
  }
  return out;
}

double TrajectoryCost(const Trajectory& trajectory,
                      std::span<const VehicleState> refs,
                      const PlannerConfig& cfg) {
  const std::size_t n = trajectory.steps.size();
  if (refs.size() != n + 1) {
    throw std::invalid_argument(
        "TrajectoryCost: need one desired state per predicted state");
  }
  double z = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const VehicleState& x = k == 0 ? trajectory.start : trajectory.steps[k - 1].state;
    z += Quadratic(x, refs[k], cfg.q);
    const double dv = trajectory.steps[k].control.v - cfg.v_max;
    z += cfg.w_v * dv * dv;
  }
  z += Quadratic(trajectory.final_state(), refs[n], cfg.q_terminal);
  return z;
}

RiskConstrainedPlanner::RiskConstrainedPlanner(const PlannerConfig& cfg,
                                               const WheelModel& wheel)
    : cfg_(cfg), wheel_(wheel) {
  cfg_.Validate();
}

ControlInput RiskConstrainedPlanner::Clamp(ControlInput u) const {
  return {std::clamp(u.v, 0.0, cfg_.v_max),
          std::clamp(u.delta, -cfg_.delta_max, cfg_.delta_max)};
}

std::vector<std::vector<ControlInput>> RiskConstrainedPlanner::Candidates(
    std::span<const ControlInput> warm_start, std::uint64_t seed) const {
  const auto n = static_cast<std::size_t>(cfg_.horizon);
  const SamplerConfig& sc = cfg_.sampler;
  std::vector<std::vector<ControlInput>> out;

  // Previous solution advanced by one tick, last control repeated.
  std::vector<ControlInput> shifted;
  if (!warm_start.empty()) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t src = std::min(k + 1, warm_start.size() - 1);
      shifted.push_back(Clamp(warm_start[src]));
    }
    out.push_back(shifted);
  }

  const std::vector<double> speeds = Levels(0.0, cfg_.v_max, sc.velocity_levels);
  const std::vector<double> steers =
      Levels(-cfg_.delta_max, cfg_.delta_max, sc.steering_levels);

  for (double v : speeds) {
    for (double d : steers) out.emplace_back(n, ControlInput{v, d});
  }

  // Keep the previous steering profile at each constant speed.
  if (!shifted.empty()) {
    for (double v : speeds) {
      std::vector<ControlInput> c = shifted;
      for (ControlInput& u : c) u.v = v;
      out.push_back(std::move(c));
    }
  }

  const std::vector<std::size_t> speed_switch = SwitchSteps(kSpeedSwitchTimes, n);
  const std::vector<std::size_t> steer_switch = SwitchSteps(kSteerSwitchTimes, n);
  const std::vector<std::size_t> lane_arcs = SwitchSteps(kLaneChangeArcs, n);
  std::vector<std::size_t> lane_delays{0};
  for (std::size_t d : SwitchSteps(kLaneChangeDelays, n)) lane_delays.push_back(d);

  // Drive at one speed, then switch to a lower one (braking profiles).
  std::vector<std::vector<double>> steer_profiles{std::vector<double>(n, 0.0)};
  if (!shifted.empty()) {
    std::vector<double> d;
    for (const ControlInput& u : shifted) d.push_back(u.delta);
    steer_profiles.push_back(std::move(d));
  }
  for (const auto& profile : steer_profiles) {
    for (double frac : kSpeedSwitchFractions) {
      const double v1 = frac * cfg_.v_max;
      for (double v2 : speeds) {
        if (v2 >= v1) continue;
        for (std::size_t m : speed_switch) {
          std::vector<ControlInput> c(n);
          for (std::size_t k = 0; k < n; ++k) {
            c[k] = {k < m ? v1 : v2, profile[k]};
          }
          out.push_back(std::move(c));
        }
      }
    }
  }

  // Steer one way, then straighten or counter-steer (lane change profiles).
  for (double frac : kSteerSwitchFractions) {
    const double v = frac * cfg_.v_max;
    for (double d1 : steers) {
      if (d1 == 0.0) continue;
      for (double d2 : {0.0, -d1}) {
        for (std::size_t m : steer_switch) {
          std::vector<ControlInput> c(n);
          for (std::size_t k = 0; k < n; ++k) c[k] = {v, k < m ? d1 : d2};
          out.push_back(std::move(c));
        }
      }
      // Lateral offset: optional straight run, equal arcs of opposite
      // steering, then straight again.
      for (std::size_t delay : lane_delays) {
        for (std::size_t m : lane_arcs) {
          std::vector<ControlInput> c(n, ControlInput{v, 0.0});
          for (std::size_t k = delay; k < std::min(n, delay + m); ++k) c[k].delta = d1;
          for (std::size_t k = delay + m; k < std::min(n, delay + 2 * m); ++k) {
            c[k].delta = -d1;
          }
          out.push_back(std::move(c));
        }
      }
    }
  }

  if (!shifted.empty() && sc.perturbations > 0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dv(0.0, sc.perturb_sigma_v);
    std::normal_distribution<double> dd(0.0, sc.perturb_sigma_delta);
    for (int i = 0; i < sc.perturbations; ++i) {
      std::vector<ControlInput> c = shifted;
      for (ControlInput& u : c) u = Clamp({u.v + dv(rng), u.delta + dd(rng)});
      out.push_back(std::move(c));
    }
  }

  out.emplace_back(n, ControlInput{0.0, 0.0});
  return out;
}

Plan RiskConstrainedPlanner::Solve(const VehicleState& state,
                                   std::span<const VehicleState> reference,
                                   const LambdaField& field,
                                   const ElevationMap& dem,
                                   std::span<const ControlInput> warm_start,
                                   std::uint64_t seed) const {
  const std::vector<VehicleState> refs = ReferenceSlice(reference, state, cfg_);
  const auto candidates = Candidates(warm_start, seed);

  Plan best;
  bool have_best = false;
  auto key = [](const PlanDiagnostics& d) {
    return std::make_tuple(d.cost, d.expected_risk);
  };
  int feasible = 0;
  for (const auto& controls : candidates) {
    Trajectory traj = Rollout(state, controls, cfg_.wheelbase, cfg_.dt);
    double risk = 0.0;
    try {
      risk = ExpectedRisk(field, dem, traj, wheel_, cfg_.track_width);
    } catch (const OutOfGrid&) {
      continue;
    }
    if (!(risk <= cfg_.r_threshold)) continue;
    ++feasible;
    PlanDiagnostics d{TrajectoryCost(traj, refs, cfg_), risk, 0, 0};
    // Strict comparison keeps the lowest index among exact ties.
    if (!have_best || key(d) < key(best.diagnostics)) {
      best.controls = controls;
      best.trajectory = std::move(traj);
      best.diagnostics = d;
      have_best = true;
    }
  }
  if (!have_best) {
    // Unreachable while the stop sequence stays inside the grid; keep the
    // contract anyway.
    best.controls.assign(static_cast<std::size_t>(cfg_.horizon), ControlInput{});
    best.trajectory = Rollout(state, best.controls, cfg_.wheelbase, cfg_.dt);
    best.diagnostics = {TrajectoryCost(best.trajectory, refs, cfg_), 0.0, 0, 0};
  }
  best.diagnostics.candidates = static_cast<int>(candidates.size());
  best.diagnostics.feasible = feasible;
  return best;
}

}  // namespace lambda_nav
