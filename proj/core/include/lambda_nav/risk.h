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

#ifndef LAMBDA_NAV_RISK_H_
#define LAMBDA_NAV_RISK_H_

#include <iosfwd>
#include <span>
#include <vector>

#include "lambda_nav/dem.h"
#include "lambda_nav/grid.h"
#include "lambda_nav/kinematics.h"
#include "lambda_nav/lambda_field.h"

namespace lambda_nav {

// Wheel treated as a radial spring carrying the vehicle mass.
class WheelModel {
 public:
  // Throws std::invalid_argument unless every parameter is > 0.
  WheelModel(double radius, double radial_stiffness, double mass);

  double radius() const { return radius_; }
  double stiffness() const { return stiffness_; }
  double mass() const { return mass_; }
  // Natural frequency sqrt(k_r / m), 1/s.
  double omega() const { return omega_; }

  friend bool operator==(const WheelModel&, const WheelModel&) = default;

 private:
  double radius_;
  double stiffness_;
  double mass_;
  double omega_;
};

// Contact angle arcsin((R - min(H, R)) / R) in [0, pi/2]; pi/2 on flat
// ground, 0 for an obstacle at least as tall as the wheel radius.
// Throws NonPositiveRadius unless R > 0, std::invalid_argument if H < 0.
double AttackAngle(double elevation_diff, double wheel_radius);

// Peak spring compression v * cos(psi) / omega, in metres.
double MaxCompression(double v, double attack_angle, const WheelModel& wheel);

// Peak potential energy stored in the wheel spring, 0.5 * k_r * l_m^2, in
// joules, for a wheel hitting an obstacle of height H at speed v.
double CollisionEnergy(double v, double elevation_diff, const WheelModel& wheel);

// Compression at which the spring stores `energy` joules.
double CompressionForEnergy(double energy, const WheelModel& wheel);

// Probability that the first hazardous event along the ordered cells happens
// at cell i: exp(-da * sum_{j<i} lambda_j) * (1 - exp(-da * lambda_i)).
std::vector<double> EventProbabilities(const LambdaField& field,
                                       std::span<const CellIndex> cells);

struct RiskStep {
  CellIndex cell;
  double v = 0.0;    // speed attributed to the cell, m/s
  double H = 0.0;    // max elevation difference across the track, m
  double psi = 0.0;  // attack angle, rad
  double K = 0.0;    // first-event probability
  double r = 0.0;    // energy if the event happens here, J
};

struct RiskProfile {
  std::vector<RiskStep> steps;
  double expected_risk = 0.0;  // sum K_i * r_i, J
};

// Expected wheel energy over a predicted trajectory. Each rasterized cell takes
// the speed of the segment that entered it; H is the largest DEM elevation
// difference along the transverse track segment at the entry point
// (unobserved cells count as 0). Throws OutOfGrid if the trajectory or its
// track leaves the grid.
RiskProfile ExpectedPathRisk(const LambdaField& field, const ElevationMap& dem,
                             const Trajectory& trajectory,
                             const WheelModel& wheel, double track_width);

// Same value as ExpectedPathRisk(...).expected_risk. Skips the terrain lookup
// for cells that carry no probability mass or no speed.
double ExpectedRisk(const LambdaField& field, const ElevationMap& dem,
                    const Trajectory& trajectory, const WheelModel& wheel,
                    double track_width);

// CSV with header step,col,row,v,H,psi,K,r.
void WriteRiskProfileCsv(std::ostream& os, const RiskProfile& profile);

}  // namespace lambda_nav

#endif  // LAMBDA_NAV_RISK_H_
