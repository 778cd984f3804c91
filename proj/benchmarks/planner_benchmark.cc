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

#include "lambda_nav/planner.h"
#include "lambda_nav/scenario.h"

namespace lambda_nav {
namespace {

void BM_PlannerSolve(benchmark::State& state) {
  ScenarioConfig cfg;
  cfg.planner.r_threshold = static_cast<double>(state.range(0));
  SpeedBump bump;
  bump.center = {0.0, 0.0};
  cfg.environment = {bump};
  const auto [dem, field] = PerceptionSweep(cfg, 30);
  const RiskConstrainedPlanner planner(cfg.planner, cfg.MakeWheel());
  const std::vector<VehicleState> reference =
      SampleReference(cfg.reference, cfg.planner.v_max * cfg.planner.dt);
  const VehicleState start{-3.0, 0.0, 0.0};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(planner.Solve(start, reference, field, dem, {}, ++seed));
  }
}
BENCHMARK(BM_PlannerSolve)->Arg(0)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace lambda_nav
