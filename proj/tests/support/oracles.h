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

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the library's rasterization or risk code.

#ifndef LAMBDA_NAV_TESTS_ORACLES_H_
#define LAMBDA_NAV_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "lambda_nav/grid.h"

namespace lambda_nav::testing {

// Cells visited by walking the segment in fixed steps of `step` metres.
inline std::set<CellIndex> SampledCells(const GridSpec& spec, Vec2 a, Vec2 b,
                                        double step = 1e-3) {
  std::set<CellIndex> out;
  const double len = std::hypot(b.x - a.x, b.y - a.y);
  const int n = std::max(1, static_cast<int>(std::ceil(len / step)));
  for (int i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) / n;
    const double x = a.x + t * (b.x - a.x);
    const double y = a.y + t * (b.y - a.y);
    const int col = static_cast<int>(std::floor((x - spec.origin().x) / spec.cell_size()));
    const int row = static_cast<int>(std::floor((y - spec.origin().y) / spec.cell_size()));
    out.insert({col, row});
  }
  return out;
}

struct Clip {
  double t0 = 0.0;
  double t1 = -1.0;
  bool empty() const { return t1 < t0; }
};

// Liang-Barsky clip of segment a->b against the closed square of `cell`,
// as parameters along the segment.
inline Clip ClipToCell(const GridSpec& spec, CellIndex cell, Vec2 a, Vec2 b) {
  const double lo_x = spec.origin().x + cell.col * spec.cell_size();
  const double lo_y = spec.origin().y + cell.row * spec.cell_size();
  const double hi_x = lo_x + spec.cell_size();
  const double hi_y = lo_y + spec.cell_size();
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  Clip c{0.0, 1.0};
  auto edge = [&](double p, double q) {
    if (p == 0.0) {
      if (q < 0.0) c = Clip{};
      return;
    }
    const double r = q / p;
    if (p < 0.0) {
      c.t0 = std::max(c.t0, r);
    } else {
      c.t1 = std::min(c.t1, r);
    }
  };
  edge(-dx, a.x - lo_x);
  edge(dx, hi_x - a.x);
  edge(-dy, a.y - lo_y);
  edge(dy, hi_y - a.y);
  return c;
}

inline double ClipLength(const GridSpec& spec, CellIndex cell, Vec2 a, Vec2 b) {
  const Clip c = ClipToCell(spec, cell, a, b);
  if (c.empty()) return 0.0;
  return (c.t1 - c.t0) * std::hypot(b.x - a.x, b.y - a.y);
}

// Cells whose square the segment crosses over a positive length, ordered by
// where the segment enters them. For segments in general position this is
// exactly the supercover.
inline std::vector<CellIndex> AnalyticCells(const GridSpec& spec, Vec2 a, Vec2 b,
                                            double min_length = 1e-12) {
  const double s = spec.cell_size();
  auto index = [&](double v, double o) { return static_cast<int>(std::floor((v - o) / s)); };
  const int c0 = index(std::min(a.x, b.x), spec.origin().x) - 1;
  const int c1 = index(std::max(a.x, b.x), spec.origin().x) + 1;
  const int r0 = index(std::min(a.y, b.y), spec.origin().y) - 1;
  const int r1 = index(std::max(a.y, b.y), spec.origin().y) + 1;
  std::vector<std::pair<double, CellIndex>> hits;
  for (int r = r0; r <= r1; ++r) {
    for (int c = c0; c <= c1; ++c) {
      const CellIndex cell{c, r};
      const Clip clip = ClipToCell(spec, cell, a, b);
      if (clip.empty()) continue;
      if ((clip.t1 - clip.t0) * std::hypot(b.x - a.x, b.y - a.y) > min_length) {
        hits.emplace_back(clip.t0, cell);
      }
    }
  }
  std::sort(hits.begin(), hits.end());
  std::vector<CellIndex> out;
  for (const auto& [t, cell] : hits) out.push_back(cell);
  return out;
}

// Peak |l| of the undamped spring l'' = -omega^2 l with l(0) = 0 and
// l'(0) = v0, integrated with classical RK4 at `steps` points per period.
inline double SpringPeakRk4(double v0, double omega, int steps = 20000) {
  if (v0 == 0.0) return 0.0;
  const double period = 2.0 * 3.14159265358979323846 / omega;
  const double h = period / steps;
  double l = 0.0;
  double dl = v0;
  double peak = 0.0;
  auto acc = [omega](double x) { return -omega * omega * x; };
  for (int i = 0; i < steps; ++i) {
    const double k1x = dl;
    const double k1v = acc(l);
    const double k2x = dl + 0.5 * h * k1v;
    const double k2v = acc(l + 0.5 * h * k1x);
    const double k3x = dl + 0.5 * h * k2v;
    const double k3v = acc(l + 0.5 * h * k2x);
    const double k4x = dl + h * k3v;
    const double k4v = acc(l + h * k3x);
    l += h / 6.0 * (k1x + 2 * k2x + 2 * k3x + k4x);
    dl += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
    peak = std::max(peak, std::abs(l));
  }
  return peak;
}

}  // namespace lambda_nav::testing

#endif  // LAMBDA_NAV_TESTS_ORACLES_H_
