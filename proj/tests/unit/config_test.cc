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

#include "lambda_nav/config.h"

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "lambda_nav/errors.h"

namespace lambda_nav {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

std::string ValidationField(const std::string& text) {
  try {
    ParseConfig(text);
  } catch (const ValidationError& e) {
    return e.field();
  }
  return "<no error>";
}

// Golden values for a file that sets nothing but the threshold.
TEST(ConfigTest, MinimalFileTakesDefaults) {
  const ScenarioConfig c = ParseConfig("[planner]\nr_threshold = 3.0\n");
  EXPECT_EQ(c.planner.r_threshold, 3.0);
  EXPECT_EQ(c.h_safe, 0.05);
  EXPECT_EQ(c.error_area, 1e-4);
  EXPECT_EQ(c.wheel_radius, 0.25);
  EXPECT_EQ(c.mass, 50.0);
  EXPECT_EQ(c.wheel_stiffness, 150000.0);
  EXPECT_EQ(c.planner.v_max, 1.5);
  EXPECT_NEAR(c.planner.delta_max, 11.0 * kDeg, 1e-15);
  EXPECT_EQ(c.planner.dt, 0.1);
  for (double q : c.planner.q) EXPECT_EQ(q, 0.05);
  for (double q : c.planner.q_terminal) EXPECT_EQ(q, 1.0);
  EXPECT_EQ(c.planner.w_v, 0.1);
  EXPECT_EQ(c.grid.cell_size, 0.1);
  EXPECT_EQ(c.grid.width, 200);
  EXPECT_EQ(c.grid.height, 200);
  EXPECT_EQ(c.grid.origin, (Vec2{-10.0, -10.0}));
  EXPECT_EQ(c.lidar.range, 10.0);
  EXPECT_EQ(c.lidar.azimuth_count, 360);
  ASSERT_EQ(c.lidar.ring_pitch.size(), 16u);
  EXPECT_NEAR(c.lidar.ring_pitch.front(), -15 * kDeg, 1e-15);
  EXPECT_NEAR(c.lidar.ring_pitch.back(), 1 * kDeg, 1e-15);
  EXPECT_EQ(c.lidar.z_noise_sigma, 0.005);
  EXPECT_EQ(c.lidar.mount_height, 0.5);
  ASSERT_EQ(c.reference.size(), 2u);
  EXPECT_EQ(c.reference.front(), (Vec2{-8.0, 0.0}));
  EXPECT_EQ(c.reference.back(), (Vec2{7.0, 0.0}));
  EXPECT_TRUE(c.environment.empty());
}

TEST(ConfigTest, EmptyFileEqualsDefaultConfig) {
  EXPECT_EQ(ParseConfig(""), ScenarioConfig{});
}

TEST(ConfigTest, ZeroThresholdIsValid) {
  EXPECT_EQ(ParseConfig("[planner]\nr_threshold = 0.0\n").planner.r_threshold, 0.0);
  EXPECT_EQ(ValidationField("[planner]\nr_threshold = -0.5\n"), "planner.r_threshold");
}

TEST(ConfigTest, ValidationNamesTheField) {
  EXPECT_EQ(ValidationField("[wheel]\nm = -50.0\n"), "wheel.m");
  EXPECT_EQ(ValidationField("[wheel]\nR = 0.0\n"), "wheel.R");
  EXPECT_EQ(ValidationField("[wheel]\nk_r = -1.0\n"), "wheel.k_r");
  EXPECT_EQ(ValidationField("[dem]\nh_safe = 0.0\n"), "dem.h_safe");
  EXPECT_EQ(ValidationField("[lambda]\ne = 0.0\n"), "lambda.e");
  EXPECT_EQ(ValidationField("[grid]\ncell_size = -0.1\n"), "grid.cell_size");
  EXPECT_EQ(ValidationField("[planner]\ndt = 0.0\n"), "planner.dt");
  EXPECT_EQ(ValidationField("[planner]\ndelta_max_deg = 90.0\n"), "planner.delta_max");
  EXPECT_EQ(ValidationField("[lidar]\nrange = 0.0\n"), "lidar.range");
  EXPECT_EQ(ValidationField("max_time = 0.0\n"), "max_time");
  EXPECT_EQ(ValidationField("[reference]\nwaypoints = [[0.0, 0.0], [50.0, 0.0]]\n"),
            "reference.waypoints");
  EXPECT_EQ(ValidationField("[reference]\nwaypoints = []\n"), "reference.waypoints");
}

TEST(ConfigTest, WrongTypesAreRejected) {
  EXPECT_EQ(ValidationField("[wheel]\nm = \"heavy\"\n"), "wheel.m");
  EXPECT_EQ(ValidationField("[grid]\nwidth = 2.5\n"), "grid.width");
  EXPECT_EQ(ValidationField("[grid]\norigin = [1.0]\n"), "grid.origin");
}

TEST(ConfigTest, IntegersAreAcceptedForFloats) {
  EXPECT_EQ(ParseConfig("[wheel]\nm = 60\n").mass, 60.0);
}

TEST(ConfigTest, UnknownKeysAreRejected) {
  EXPECT_THROW(ParseConfig("[wheel]\nmass = 50.0\n"), ValidationError);
  EXPECT_THROW(ParseConfig("speed = 1.0\n"), ValidationError);
  EXPECT_THROW(ParseConfig("[telemetry]\nrate = 1\n"), ValidationError);
  EXPECT_THROW(ParseConfig("[[environment]]\ntype = \"cone\"\nbase = 1.0\n"),
               ValidationError);
  EXPECT_THROW(ParseConfig("[[environment]]\ntype = \"boulder\"\n"), ValidationError);
  try {
    ParseConfig("[wheel]\nR = 0.25\nmass = 50.0\n");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "wheel.mass");
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ConfigTest, ParseErrorCarriesLine) {
  try {
    ParseConfig("seed = 1\n[planner]\nr_threshold = = 3\n", "bad.toml");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(std::string(e.what()).rfind("bad.toml:3:", 0), 0u) << e.what();
  }
}

TEST(ConfigTest, DegreeVariants) {
  const ScenarioConfig c = ParseConfig(
      "[planner]\ndelta_max_deg = 20.0\n[lidar]\nring_pitch_deg = [-10.0, -5.0]\n"
      "[[environment]]\ntype = \"bump\"\ncenter = [0.0, 0.0]\nyaw_deg = 90.0\n");
  EXPECT_NEAR(c.planner.delta_max, 20 * kDeg, 1e-15);
  ASSERT_EQ(c.lidar.ring_pitch.size(), 2u);
  EXPECT_NEAR(c.lidar.ring_pitch[0], -10 * kDeg, 1e-15);
  EXPECT_NEAR(std::get<SpeedBump>(c.environment[0]).yaw, std::numbers::pi / 2, 1e-15);
  EXPECT_EQ(ValidationField("[planner]\ndelta_max = 0.1\ndelta_max_deg = 5.0\n"),
            "planner.delta_max");
}

TEST(ConfigTest, AllPrimitiveKinds) {
  const ScenarioConfig c = ParseConfig(R"(
[[environment]]
type = "bump"
center = [1.0, 2.0]
profile = "cosine"
[[environment]]
type = "curb"
point = [0.0, 3.0]
normal = 1.5707963267948966
height = 0.12
[[environment]]
type = "cone"
center = [2.0, 0.0]
[[environment]]
type = "wall"
min = [0.0, -2.0]
max = [1.0, -1.8]
[[environment]]
type = "pole"
center = [-3.0, 1.0]
radius = 0.05
)");
  ASSERT_EQ(c.environment.size(), 5u);
  EXPECT_EQ(std::get<SpeedBump>(c.environment[0]).profile, BumpProfile::kRaisedCosine);
  EXPECT_EQ(std::get<Curb>(c.environment[1]).height, 0.12);
  EXPECT_EQ(std::get<Cone>(c.environment[2]).center, (Vec2{2.0, 0.0}));
  EXPECT_EQ(std::get<Wall>(c.environment[3]).max, (Vec2{1.0, -1.8}));
  EXPECT_EQ(std::get<Pole>(c.environment[4]).radius, 0.05);
  EXPECT_EQ(ValidationField("[[environment]]\ntype = \"wall\"\nmin = [0.0, 0.0]\n"
                            "max = [1.0, 1.0]\nheight = -1.0\n"),
            "environment[0].height");
}

TEST(ConfigTest, DumpRoundTripsDefaultsAndScenarios) {
  const ScenarioConfig d{};
  EXPECT_EQ(ParseConfig(DumpConfig(d)), d);
  for (const auto& entry : std::filesystem::directory_iterator(LAMBDA_NAV_SCENARIO_DIR)) {
    if (entry.path().extension() != ".toml") continue;
    const ScenarioConfig c = LoadConfig(entry.path());
    EXPECT_EQ(ParseConfig(DumpConfig(c)), c) << entry.path();
  }
}

TEST(ConfigTest, DumpRoundTripsRandomConfigs) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.01, 3.0);
  for (int i = 0; i < 50; ++i) {
    ScenarioConfig c;
    c.seed = rng() >> 1;
    c.h_safe = u(rng) / 10.0;
    c.error_area = u(rng) * 1e-4;
    c.mass = u(rng) * 40.0;
    c.planner.r_threshold = u(rng) * 10.0;
    c.planner.q = {u(rng), u(rng), u(rng)};
    c.planner.delta_max = u(rng) / 2.0;
    c.lidar.ring_pitch = {-u(rng) / 10.0, u(rng) / 100.0};
    SpeedBump b;
    b.center = {u(rng), -u(rng)};
    b.yaw = u(rng);
    Curb k;
    k.normal = -u(rng);
    c.environment = {b, k, Pole{{u(rng), u(rng)}, 0.1, u(rng)}};
    c.reference = {{-u(rng), 0.1}, {0.0, u(rng)}, {u(rng), u(rng)}};
    EXPECT_EQ(ParseConfig(DumpConfig(c)), c) << DumpConfig(c);
  }
}

TEST(ConfigTest, SeedMustFitATomlInteger) {
  ScenarioConfig c;
  c.seed = 1ULL << 63;
  EXPECT_THROW(c.Validate(), ValidationError);
  EXPECT_EQ(ValidationField("seed = -1\n"), "seed");
}

TEST(ConfigTest, LoadConfigReportsMissingFile) {
  EXPECT_THROW(LoadConfig("/nonexistent/scenario.toml"), ConfigError);
}

}  // namespace
}  // namespace lambda_nav
