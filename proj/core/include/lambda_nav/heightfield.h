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

#ifndef LAMBDA_NAV_HEIGHTFIELD_H_
#define LAMBDA_NAV_HEIGHTFIELD_H_

#include <string>
#include <variant>
#include <vector>

#include "lambda_nav/grid.h"

namespace lambda_nav {

enum class BumpProfile { kTrapezoid, kRaisedCosine };

// Speed bump. `length` runs along the local x axis (the travel direction when
// yaw = 0), `width` across it. The trapezoid rises over `ramp` metres at each
// end; the raised cosine spans the whole length.
struct SpeedBump {
  Vec2 center;
  double length = 0.5;
  double width = 3.0;
  double height = 0.1;
  double ramp = 0.05;
  double yaw = 0.0;
  BumpProfile profile = BumpProfile::kTrapezoid;

  friend bool operator==(const SpeedBump&, const SpeedBump&) = default;
};

// Step of `height` on the side of the edge line that `normal` (an angle)
// points to.
struct Curb {
  Vec2 point;
  double normal = 0.0;
  double height = 0.12;

  friend bool operator==(const Curb&, const Curb&) = default;
};

// Truncated cone.
struct Cone {
  Vec2 center;
  double base_radius = 0.2;
  double top_radius = 0.03;
  double height = 0.5;

  friend bool operator==(const Cone&, const Cone&) = default;
};

// Axis-aligned box occupying [min, max).
struct Wall {
  Vec2 min;
  Vec2 max;
  double height = 1.0;

  friend bool operator==(const Wall&, const Wall&) = default;
};

struct Pole {
  Vec2 center;
  double radius = 0.1;
  double height = 2.0;

  friend bool operator==(const Pole&, const Pole&) = default;
};

using Primitive = std::variant<SpeedBump, Curb, Cone, Wall, Pole>;

// Ground-truth terrain: flat ground at z = 0 raised by the pointwise maximum
// of its primitives.
class Heightfield {
 public:
  Heightfield() = default;
  explicit Heightfield(std::vector<Primitive> primitives);

  const std::vector<Primitive>& primitives() const { return primitives_; }
  void Add(Primitive p);

  double Sample(Vec2 p) const;
  // Upper bound of Sample over the plane.
  double MaxHeight() const { return max_height_; }

  friend bool operator==(const Heightfield& a, const Heightfield& b) {
    return a.primitives_ == b.primitives_;
  }

 private:
  std::vector<Primitive> primitives_;
  double max_height_ = 0.0;
};

double SampleHeight(const Heightfield& hf, Vec2 p);

// Height of a single primitive at p (0 outside its footprint).
double PrimitiveHeight(const Primitive& primitive, Vec2 p);

// Name used in configuration files: "bump", "curb", "cone", "wall", "pole".
std::string PrimitiveKind(const Primitive& primitive);

}  // namespace lambda_nav

#endif  // LAMBDA_NAV_HEIGHTFIELD_H_
