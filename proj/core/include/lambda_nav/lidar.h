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

#ifndef LAMBDA_NAV_LIDAR_H_
#define LAMBDA_NAV_LIDAR_H_

#include <cstdint>
#include <vector>

#include "lambda_nav/dem.h"
#include "lambda_nav/heightfield.h"
#include "lambda_nav/kinematics.h"

namespace lambda_nav {

// Spinning multi-ring lidar mounted above the rear axle.
struct LidarModel {
  double range = 10.0;             // m
  int azimuth_count = 360;         // beams per revolution
  std::vector<double> ring_pitch;  // beam pitch angles, rad (negative = down)
  double z_noise_sigma = 0.005;    // m
  double mount_height = 0.5;       // m above ground

  // `count` rings evenly spaced in [min_pitch, max_pitch].
  static std::vector<double> EvenRings(double min_pitch, double max_pitch,
                                       int count);
  // Throws ValidationError naming the offending "lidar.*" field.
  void Validate() const;

  friend bool operator==(const LidarModel&, const LidarModel&) = default;
};

// Ray march step used by Scan, m.
inline constexpr double kRayMarchStep = 0.02;

// Casts every (azimuth, ring) beam from the sensor origin and returns the
// first surface intersection of each, with Gaussian z noise drawn from `seed`.
// Beams that find no surface within range return nothing.
std::vector<Point3> Scan(const Heightfield& hf, const VehicleState& pose,
                         const LidarModel& lidar, std::uint64_t seed);

}  // namespace lambda_nav

#endif  // LAMBDA_NAV_LIDAR_H_
