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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

namespace lambda_nav {
namespace {

TEST(HeightfieldTest, EmptyIsFlat) {
  const Heightfield hf;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(SampleHeight(hf, {u(rng), u(rng)}), 0.0);
  EXPECT_EQ(hf.MaxHeight(), 0.0);
}

TEST(HeightfieldTest, TrapezoidBump) {
  SpeedBump b;
  b.center = {1.0, 2.0};
  b.length = 0.5;
  b.width = 3.0;
  b.height = 0.10;
  b.ramp = 0.1;
  const Heightfield hf({b});
  EXPECT_DOUBLE_EQ(hf.Sample({1.0, 2.0}), 0.10);  // crest
  EXPECT_DOUBLE_EQ(hf.Sample({1.1, 3.4}), 0.10);
  EXPECT_NEAR(hf.Sample({1.0 - 0.2, 2.0}), 0.05, 1e-12);  // half-way up the ramp
  EXPECT_EQ(hf.Sample({1.3, 2.0}), 0.0);
  EXPECT_EQ(hf.Sample({1.0, 3.6}), 0.0);
  EXPECT_EQ(hf.MaxHeight(), 0.10);
}

TEST(HeightfieldTest, RotatedRaisedCosineBump) {
  SpeedBump b;
  b.center = {0.0, 0.0};
  b.length = 0.6;
  b.width = 2.0;
  b.height = 0.08;
  b.yaw = std::numbers::pi / 2;
  b.profile = BumpProfile::kRaisedCosine;
  const Heightfield hf({b});
  EXPECT_DOUBLE_EQ(hf.Sample({0.0, 0.0}), 0.08);
  EXPECT_NEAR(hf.Sample({0.9, 0.15}), 0.04, 1e-12);
  EXPECT_NEAR(hf.Sample({0.0, 0.3}), 0.0, 1e-12);
  EXPECT_EQ(hf.Sample({1.1, 0.0}), 0.0);
}

TEST(HeightfieldTest, CurbStep) {
  Curb k;
  k.point = {0.0, 1.0};
  k.normal = std::numbers::pi / 2;  // high side towards +y
  k.height = 0.12;
  const Heightfield hf({k});
  EXPECT_EQ(hf.Sample({5.0, 1.5}), 0.12);
  EXPECT_EQ(hf.Sample({-5.0, 0.5}), 0.0);
}

TEST(HeightfieldTest, ConeWallPole) {
  Cone cone;
  cone.center = {0, 0};
  cone.base_radius = 0.2;
  cone.top_radius = 0.05;
  cone.height = 0.5;
  Wall wall;
  wall.min = {2.0, -1.0};
  wall.max = {2.2, 1.0};
  wall.height = 1.0;
  Pole pole;
  pole.center = {-3.0, 0.0};
  pole.radius = 0.1;
  pole.height = 2.0;
  const Heightfield hf({cone, wall, pole});
  EXPECT_EQ(hf.Sample({0.0, 0.0}), 0.5);
  EXPECT_NEAR(hf.Sample({0.125, 0.0}), 0.25, 1e-12);
  EXPECT_EQ(hf.Sample({0.25, 0.0}), 0.0);
  EXPECT_EQ(hf.Sample({2.0, 0.0}), 1.0);
  EXPECT_EQ(hf.Sample({2.2, 0.0}), 0.0);  // half-open on the far side
  EXPECT_EQ(hf.Sample({-3.05, 0.05}), 2.0);
  EXPECT_EQ(hf.MaxHeight(), 2.0);
}

TEST(HeightfieldTest, ComposesByMaximum) {
  SpeedBump low;
  low.center = {0, 0};
  low.height = 0.1;
  low.ramp = 0.0;
  Cone cone;
  cone.center = {0, 0};
  cone.height = 0.5;
  const Heightfield hf({low, cone});
  EXPECT_EQ(hf.Sample({0, 0}), 0.5);
  EXPECT_EQ(hf.Sample({0, 1.0}), 0.1);
  EXPECT_EQ(PrimitiveKind(hf.primitives()[0]), "bump");
  EXPECT_EQ(PrimitiveKind(hf.primitives()[1]), "cone");
}

}  // namespace
}  // namespace lambda_nav
