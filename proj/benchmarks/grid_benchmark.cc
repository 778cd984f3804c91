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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "lambda_nav/grid.h"

namespace lambda_nav {
namespace {

void BM_RasterPath(benchmark::State& state) {
  const GridSpec spec({-10.0, -10.0}, 0.1, 200, 200);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-9.9, 9.9);
  std::vector<Vec2> pts;
  for (int i = 0; i < state.range(0); ++i) pts.push_back({u(rng), u(rng)});
  std::size_t cells = 0;
  for (auto _ : state) {
    const auto out = RasterPath(spec, pts);
    cells += out.size();
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["cells/s"] = benchmark::Counter(static_cast<double>(cells),
                                                 benchmark::Counter::kIsRate);
}
BENCHMARK(BM_RasterPath)->Arg(2)->Arg(41);

void BM_TransverseCells(benchmark::State& state) {
  const GridSpec spec({-10.0, -10.0}, 0.1, 200, 200);
  double heading = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(TransverseCells(spec, {0.03, -0.07}, heading, 0.8));
    heading += 0.01;
  }
}
BENCHMARK(BM_TransverseCells);

}  // namespace
}  // namespace lambda_nav
