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

#include <vector>

#include <benchmark/benchmark.h>

#include "lambda_nav/risk.h"
#include "lambda_nav/scenario.h"

namespace lambda_nav {
namespace {

// Maps built from a perception sweep over a 10 cm bump spanning the road.
struct BumpMaps {
  BumpMaps() : dem(ScenarioConfig{}.MakeGrid()), field(ScenarioConfig{}.MakeGrid(), 1e-4) {
    ScenarioConfig cfg;
    SpeedBump bump;
    bump.center = {0.0, 0.0};
    cfg.environment = {bump};
    auto maps = PerceptionSweep(cfg, 40);
    dem = std::move(maps.first);
    field = std::move(maps.second);
  }
  ElevationMap dem;
  LambdaField field;
};

const BumpMaps& Maps() {
  static const BumpMaps maps;
  return maps;
}

Trajectory Straight(int steps, double v) {
  Trajectory t;
  t.start = {-2.0, 0.0, 0.0};
  for (int k = 1; k <= steps; ++k) t.steps.push_back({{-2.0 + v * 0.1 * k, 0.0, 0.0}, {v, 0.0}});
  return t;
}

void BM_ExpectedRisk(benchmark::State& state) {
  const BumpMaps& maps = Maps();
  const WheelModel wheel(0.25, 150000.0, 50.0);
  const Trajectory t = Straight(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExpectedRisk(maps.field, maps.dem, t, wheel, 0.8));
  }
}
BENCHMARK(BM_ExpectedRisk)->Arg(20)->Arg(40);

void BM_ExpectedPathRisk(benchmark::State& state) {
  const BumpMaps& maps = Maps();
  const WheelModel wheel(0.25, 150000.0, 50.0);
  const Trajectory t = Straight(40, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExpectedPathRisk(maps.field, maps.dem, t, wheel, 0.8));
  }
}
BENCHMARK(BM_ExpectedPathRisk);

}  // namespace
}  // namespace lambda_nav
