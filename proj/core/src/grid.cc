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

#include "lambda_nav/grid.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "lambda_nav/errors.h"

namespace lambda_nav {
namespace {

// Index of the half-open interval containing v. The edges are evaluated as
// origin + i * size, the same expression the traversal uses, so ownership is
// consistent across all grid queries.
int AxisIndex(double v, double origin, double size) {
  int i = static_cast<int>(std::floor((v - origin) / size));
  while (origin + (i + 1) * size <= v) ++i;
  while (origin + i * size > v) --i;
  return i;
}

[[noreturn]] void ThrowOutOfGrid(Vec2 p) {
  std::ostringstream os;
  os << "point (" << p.x << ", " << p.y << ") is outside the grid";
  throw OutOfGrid(os.str());
}

}  // namespace

GridSpec::GridSpec(Vec2 origin, double cell_size, int width, int height)
    : origin_(origin), cell_size_(cell_size), width_(width), height_(height) {
  if (!(cell_size > 0.0) || !std::isfinite(cell_size)) {
    throw std::invalid_argument("GridSpec: cell_size must be > 0");
  }
  if (width < 1 || height < 1) {
    throw std::invalid_argument("GridSpec: width and height must be >= 1");
  }
}

bool GridSpec::Contains(Vec2 p) const {
  return std::isfinite(p.x) && std::isfinite(p.y) && p.x >= ColumnEdge(0) &&
         p.x < ColumnEdge(width_) && p.y >= RowEdge(0) && p.y < RowEdge(height_);
}

CellIndex WorldToCell(const GridSpec& spec, Vec2 p) {
  if (!spec.Contains(p)) ThrowOutOfGrid(p);
  CellIndex c{AxisIndex(p.x, spec.origin().x, spec.cell_size()),
              AxisIndex(p.y, spec.origin().y, spec.cell_size())};
  // Guards against the last edge rounding differently from the bound check.
  if (!spec.Contains(c)) ThrowOutOfGrid(p);
  return c;
}

Vec2 CellCenter(const GridSpec& spec, CellIndex c) {
  if (!spec.Contains(c)) {
    std::ostringstream os;
    os << "cell (" << c.col << ", " << c.row << ") is outside the grid";
    throw OutOfGrid(os.str());
  }
  return {spec.origin().x + (c.col + 0.5) * spec.cell_size(),
          spec.origin().y + (c.row + 0.5) * spec.cell_size()};
}

std::vector<PathCell> TraversePath(const GridSpec& spec,
                                   std::span<const Vec2> polyline) {
  if (polyline.empty()) {
    throw std::invalid_argument("TraversePath: empty polyline");
  }
  std::vector<CellIndex> vertex_cells;
  vertex_cells.reserve(polyline.size());
  for (const Vec2& p : polyline) vertex_cells.push_back(WorldToCell(spec, p));

  std::vector<PathCell> out;
  out.push_back({vertex_cells.front(), 0, polyline.front()});
  constexpr double kInf = std::numeric_limits<double>::infinity();

  for (std::size_t seg = 0; seg + 1 < polyline.size(); ++seg) {
    const Vec2 a = polyline[seg];
    const Vec2 b = polyline[seg + 1];
    const CellIndex target = vertex_cells[seg + 1];
    CellIndex cur = vertex_cells[seg];
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const int sx = dx > 0.0 ? 1 : (dx < 0.0 ? -1 : 0);
    const int sy = dy > 0.0 ? 1 : (dy < 0.0 ? -1 : 0);

    auto next_tx = [&](int col) {
      if (sx > 0) return (spec.ColumnEdge(col + 1) - a.x) / dx;
      if (sx < 0) return (spec.ColumnEdge(col) - a.x) / dx;
      return kInf;
    };
    auto next_ty = [&](int row) {
      if (sy > 0) return (spec.RowEdge(row + 1) - a.y) / dy;
      if (sy < 0) return (spec.RowEdge(row) - a.y) / dy;
      return kInf;
    };
    double tx = next_tx(cur.col);
    double ty = next_ty(cur.row);

    auto emit = [&](double t) {
      t = std::clamp(t, 0.0, 1.0);
      out.push_back({cur, seg, {a.x + t * dx, a.y + t * dy}});
    };

    while (cur != target) {
      const bool need_x = cur.col != target.col;
      const bool need_y = cur.row != target.row;
      bool step_x = need_x && (!need_y || tx < ty);
      bool step_y = need_y && (!need_x || ty < tx);
      if (need_x && need_y && tx == ty) {
        // Exact corner crossing. The corner point belongs to the cell on the
        // positive side of both edges: moving along (+,+) or (-,-) that is the
        // cell after or before the corner, so the walk steps diagonally;
        // otherwise the corner owner is visited in between.
        if (sx == sy) {
          step_x = step_y = true;
        } else if (sx > 0) {
          step_x = true;
        } else {
          step_y = true;
        }
      }
      double t = 0.0;
      if (step_x) {
        t = tx;
        cur.col += sx;
        tx = next_tx(cur.col);
      }
      if (step_y) {
        t = std::max(t, ty);
        cur.row += sy;
        ty = next_ty(cur.row);
      }
      emit(t);
    }
  }
  return out;
}

std::vector<CellIndex> RasterPath(const GridSpec& spec,
                                  std::span<const Vec2> polyline) {
  std::vector<PathCell> cells = TraversePath(spec, polyline);
  std::vector<CellIndex> out;
  out.reserve(cells.size());
  for (const PathCell& pc : cells) out.push_back(pc.cell);
  return out;
}

std::vector<CellIndex> TransverseCells(const GridSpec& spec, Vec2 center,
                                       double heading, double track_width) {
  // Reducing the heading modulo pi makes the result independent of driving
  // direction.
  const double phi = std::remainder(heading, std::numbers::pi);
  const double half = 0.5 * std::abs(track_width);
  const Vec2 offset{-std::sin(phi) * half, std::cos(phi) * half};
  const Vec2 ends[2] = {{center.x - offset.x, center.y - offset.y},
                        {center.x + offset.x, center.y + offset.y}};
  return RasterPath(spec, ends);
}

}  // namespace lambda_nav
