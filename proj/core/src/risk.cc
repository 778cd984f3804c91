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

#include "lambda_nav/risk.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "csv.h"
#include "lambda_nav/errors.h"

namespace lambda_nav {
namespace {

// (R - min(H, R)) / R, the sine of the attack angle.
double SinAttack(double elevation_diff, double wheel_radius) {
  if (!(wheel_radius > 0.0)) {
    throw NonPositiveRadius("attack angle: wheel radius must be > 0");
  }
  if (elevation_diff < 0.0) {
    throw std::invalid_argument("attack angle: elevation difference must be >= 0");
  }
  return (wheel_radius - std::min(elevation_diff, wheel_radius)) / wheel_radius;
}

const VehicleState& StateBefore(const Trajectory& t, std::size_t segment) {
  return segment == 0 ? t.start : t.steps[segment - 1].state;
}

double SegmentSpeed(const Trajectory& t, std::size_t segment) {
  return t.steps.empty() ? 0.0 : t.steps[segment].control.v;
}

double TrackElevationDiff(const ElevationMap& dem, const PathCell& pc,
                          double heading, double track_width) {
  double h = 0.0;
  for (const CellIndex& c :
       TransverseCells(dem.spec(), pc.entry, heading, track_width)) {
    h = std::max(h, dem.ElevationDiffOrZero(c));
  }
  return h;
}

}  // namespace

WheelModel::WheelModel(double radius, double radial_stiffness, double mass)
    : radius_(radius), stiffness_(radial_stiffness), mass_(mass) {
  if (!(radius > 0.0) || !(radial_stiffness > 0.0) || !(mass > 0.0)) {
    throw std::invalid_argument("WheelModel: parameters must be > 0");
  }
  omega_ = std::sqrt(stiffness_ / mass_);
}

double AttackAngle(double elevation_diff, double wheel_radius) {
  return std::asin(SinAttack(elevation_diff, wheel_radius));
}

double MaxCompression(double v, double attack_angle, const WheelModel& wheel) {
  return v * std::cos(attack_angle) / wheel.omega();
}

double CollisionEnergy(double v, double elevation_diff,
                       const WheelModel& wheel) {
  // cos(asin(s)) written as sqrt(1 - s^2) so flat ground gives exactly zero.
  const double s = SinAttack(elevation_diff, wheel.radius());
  const double cos_psi = std::sqrt(std::max(0.0, (1.0 - s) * (1.0 + s)));
  const double l_m = v * cos_psi / wheel.omega();
  return 0.5 * wheel.stiffness() * l_m * l_m;
}

double CompressionForEnergy(double energy, const WheelModel& wheel) {
  return std::sqrt(2.0 * std::max(energy, 0.0) / wheel.stiffness());
}

std::vector<double> EventProbabilities(const LambdaField& field,
                                       std::span<const CellIndex> cells) {
  const double da = field.spec().cell_area();
  std::vector<double> k;
  k.reserve(cells.size());
  double cumulative = 0.0;
  for (const CellIndex& c : cells) {
    const double lambda = field.lambda(c);
    k.push_back(std::exp(-da * cumulative) * -std::expm1(-da * lambda));
    cumulative += lambda;
  }
  return k;
}

RiskProfile ExpectedPathRisk(const LambdaField& field, const ElevationMap& dem,
                             const Trajectory& trajectory,
                             const WheelModel& wheel, double track_width) {
  const std::vector<Vec2> polyline = trajectory.Polyline();
  const std::vector<PathCell> cells = TraversePath(field.spec(), polyline);
  std::vector<CellIndex> ordered;
  ordered.reserve(cells.size());
  for (const PathCell& pc : cells) ordered.push_back(pc.cell);
  const std::vector<double> k = EventProbabilities(field, ordered);

  RiskProfile profile;
  profile.steps.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const PathCell& pc = cells[i];
    RiskStep step;
    step.cell = pc.cell;
    step.v = SegmentSpeed(trajectory, pc.segment);
    step.H = TrackElevationDiff(dem, pc, StateBefore(trajectory, pc.segment).theta,
                                track_width);
    step.psi = AttackAngle(step.H, wheel.radius());
    step.K = k[i];
    step.r = CollisionEnergy(step.v, step.H, wheel);
    profile.expected_risk += step.K * step.r;
    profile.steps.push_back(step);
  }
  return profile;
}

double ExpectedRisk(const LambdaField& field, const ElevationMap& dem,
                    const Trajectory& trajectory, const WheelModel& wheel,
                    double track_width) {
  const std::vector<Vec2> polyline = trajectory.Polyline();
  const std::vector<PathCell> cells = TraversePath(field.spec(), polyline);
  const double da = field.spec().cell_area();
  double cumulative = 0.0;
  double expected = 0.0;
  for (const PathCell& pc : cells) {
    const double lambda = field.lambda(pc.cell);
    const double k = std::exp(-da * cumulative) * -std::expm1(-da * lambda);
    cumulative += lambda;
    const double v = SegmentSpeed(trajectory, pc.segment);
    if (k == 0.0 || v == 0.0) continue;
    const double h = TrackElevationDiff(
        dem, pc, StateBefore(trajectory, pc.segment).theta, track_width);
    expected += k * CollisionEnergy(v, h, wheel);
  }
  return expected;
}

void WriteRiskProfileCsv(std::ostream& os, const RiskProfile& profile) {
  os << "step,col,row,v,H,psi,K,r\n";
  for (std::size_t i = 0; i < profile.steps.size(); ++i) {
    const RiskStep& s = profile.steps[i];
    os << i << ',' << s.cell.col << ',' << s.cell.row << ','
       << csv::FormatDouble(s.v) << ',' << csv::FormatDouble(s.H) << ','
       << csv::FormatDouble(s.psi) << ',' << csv::FormatDouble(s.K) << ','
       << csv::FormatDouble(s.r) << '\n';
  }
}

}  // namespace lambda_nav
