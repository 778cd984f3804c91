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

#include <benchmark/benchmark.h>

#include "lambda_nav/lidar.h"
#include "lambda_nav/scenario.h"

namespace lambda_nav {
namespace {

void BM_Scan(benchmark::State& state) {
  ScenarioConfig cfg;
  SpeedBump bump;
  bump.center = {0.0, 0.0};
  Wall wall;
  wall.min = {-9.5, 1.5};
  wall.max = {9.5, 1.7};
  cfg.environment = {bump, wall};
  const Heightfield hf = cfg.MakeHeightfield();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Scan(hf, {-4.0, 0.0, 0.0}, cfg.lidar, ++seed));
  }
}
BENCHMARK(BM_Scan)->Unit(benchmark::kMillisecond);

void BM_IntegrateAndIngest(benchmark::State& state) {
  ScenarioConfig cfg;
  SpeedBump bump;
  bump.center = {0.0, 0.0};
  cfg.environment = {bump};
  const auto cloud = Scan(cfg.MakeHeightfield(), {-4.0, 0.0, 0.0}, cfg.lidar, 1);
  ElevationMap dem(cfg.MakeGrid());
  LambdaField field(cfg.MakeGrid(), cfg.error_area);
  for (auto _ : state) {
    const auto touched = dem.IntegrateCloud(cloud);
    field.IngestScan(dem, touched, cfg.h_safe, cfg.wheel_radius);
  }
}
BENCHMARK(BM_IntegrateAndIngest);

}  // namespace
}  // namespace lambda_nav
