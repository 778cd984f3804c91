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

#include "lambda_nav/lidar.h"

#include <cmath>
#include <numbers>
#include <random>

#include "lambda_nav/errors.h"

namespace lambda_nav {

std::vector<double> LidarModel::EvenRings(double min_pitch, double max_pitch,
                                          int count) {
  std::vector<double> rings;
  if (count <= 0) return rings;
  if (count == 1) {
    rings.push_back(min_pitch);
    return rings;
  }
  for (int i = 0; i + 1 < count; ++i) {
    rings.push_back(min_pitch + (max_pitch - min_pitch) * i / (count - 1));
  }
  rings.push_back(max_pitch);
  return rings;
}

void LidarModel::Validate() const {
  if (!(range > 0.0)) throw ValidationError("lidar.range", "must be > 0");
  if (azimuth_count < 1) {
    throw ValidationError("lidar.azimuth_count", "must be >= 1");
  }
  if (!(z_noise_sigma >= 0.0)) {
    throw ValidationError("lidar.z_noise_sigma", "must be >= 0");
  }
  if (!(mount_height > 0.0)) {
    throw ValidationError("lidar.mount_height", "must be > 0");
  }
  for (double p : ring_pitch) {
    if (!(std::abs(p) < std::numbers::pi / 2.0)) {
      throw ValidationError("lidar.ring_pitch", "pitch must be within (-90, 90) degrees");
    }
  }
}

std::vector<Point3> Scan(const Heightfield& hf, const VehicleState& pose,
                         const LidarModel& lidar, std::uint64_t seed) {
  std::vector<Point3> cloud;
  if (lidar.azimuth_count < 1 || lidar.ring_pitch.empty()) return cloud;
  cloud.reserve(static_cast<std::size_t>(lidar.azimuth_count) *
                lidar.ring_pitch.size());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);

  const Point3 origin{pose.x, pose.y, lidar.mount_height};
  const double top = hf.MaxHeight();
  for (int a = 0; a < lidar.azimuth_count; ++a) {
    const double az =
        pose.theta + 2.0 * std::numbers::pi * a / lidar.azimuth_count;
    const double ca = std::cos(az);
    const double sa = std::sin(az);
    for (double pitch : lidar.ring_pitch) {
      const double cp = std::cos(pitch);
      const Point3 d{cp * ca, cp * sa, std::sin(pitch)};
      if (d.z >= 0.0 && origin.z > top) continue;
      auto below = [&](double t) {
        const Vec2 xy{origin.x + t * d.x, origin.y + t * d.y};
        return origin.z + t * d.z <= hf.Sample(xy);
      };
      double prev = 0.0;
      double hit = -1.0;
      const int steps = static_cast<int>(std::floor(lidar.range / kRayMarchStep));
      for (int i = 1; i <= steps; ++i) {
        const double t = i * kRayMarchStep;
        if (d.z >= 0.0 && origin.z + t * d.z > top) break;
        if (below(t)) {
          const double mid = 0.5 * (prev + t);
          hit = below(mid) ? mid : t;
          break;
        }
        prev = t;
      }
      if (hit < 0.0) continue;
      double z = origin.z + hit * d.z;
      if (lidar.z_noise_sigma > 0.0) z += lidar.z_noise_sigma * noise(rng);
      cloud.push_back({origin.x + hit * d.x, origin.y + hit * d.y, z});
    }
  }
  return cloud;
}

}  // namespace lambda_nav
