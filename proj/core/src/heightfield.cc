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

#include "lambda_nav/heightfield.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lambda_nav {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double BumpHeight(const SpeedBump& b, Vec2 p) {
  const double c = std::cos(b.yaw);
  const double s = std::sin(b.yaw);
  const double dx = p.x - b.center.x;
  const double dy = p.y - b.center.y;
  const double u = c * dx + s * dy;   // along the bump length
  const double w = -s * dx + c * dy;  // across
  const double half_len = 0.5 * b.length;
  if (std::abs(w) > 0.5 * b.width || std::abs(u) > half_len) return 0.0;
  if (b.profile == BumpProfile::kRaisedCosine) {
    return 0.5 * b.height * (1.0 + std::cos(std::numbers::pi * u / half_len));
  }
  const double from_edge = half_len - std::abs(u);
  if (b.ramp <= 0.0) return b.height;
  return b.height * std::min(from_edge / b.ramp, 1.0);
}

double CurbHeight(const Curb& k, Vec2 p) {
  const double side = (p.x - k.point.x) * std::cos(k.normal) +
                      (p.y - k.point.y) * std::sin(k.normal);
  return side >= 0.0 ? k.height : 0.0;
}

double ConeHeight(const Cone& k, Vec2 p) {
  const double r = std::hypot(p.x - k.center.x, p.y - k.center.y);
  if (r > k.base_radius) return 0.0;
  if (r <= k.top_radius || k.base_radius <= k.top_radius) return k.height;
  return k.height * (k.base_radius - r) / (k.base_radius - k.top_radius);
}

double WallHeight(const Wall& k, Vec2 p) {
  const bool inside =
      p.x >= k.min.x && p.x < k.max.x && p.y >= k.min.y && p.y < k.max.y;
  return inside ? k.height : 0.0;
}

double PoleHeight(const Pole& k, Vec2 p) {
  return std::hypot(p.x - k.center.x, p.y - k.center.y) <= k.radius ? k.height
                                                                    : 0.0;
}

}  // namespace

double PrimitiveHeight(const Primitive& primitive, Vec2 p) {
  return std::visit(Overloaded{
                        [&](const SpeedBump& b) { return BumpHeight(b, p); },
                        [&](const Curb& k) { return CurbHeight(k, p); },
                        [&](const Cone& k) { return ConeHeight(k, p); },
                        [&](const Wall& k) { return WallHeight(k, p); },
                        [&](const Pole& k) { return PoleHeight(k, p); },
                    },
                    primitive);
}

std::string PrimitiveKind(const Primitive& primitive) {
  return std::visit(Overloaded{
                        [](const SpeedBump&) { return std::string("bump"); },
                        [](const Curb&) { return std::string("curb"); },
                        [](const Cone&) { return std::string("cone"); },
                        [](const Wall&) { return std::string("wall"); },
                        [](const Pole&) { return std::string("pole"); },
                    },
                    primitive);
}

Heightfield::Heightfield(std::vector<Primitive> primitives) {
  for (Primitive& p : primitives) Add(std::move(p));
}

void Heightfield::Add(Primitive p) {
  const double h = std::visit([](const auto& k) { return k.height; }, p);
  max_height_ = std::max(max_height_, h);
  primitives_.push_back(std::move(p));
}

double Heightfield::Sample(Vec2 p) const {
  double z = 0.0;
  for (const Primitive& prim : primitives_) {
    z = std::max(z, PrimitiveHeight(prim, p));
  }
  return z;
}

double SampleHeight(const Heightfield& hf, Vec2 p) { return hf.Sample(p); }

}  // namespace lambda_nav
