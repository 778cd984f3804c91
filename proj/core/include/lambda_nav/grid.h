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

#ifndef LAMBDA_NAV_GRID_H_
#define LAMBDA_NAV_GRID_H_

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace lambda_nav {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct CellIndex {
  int col = 0;
  int row = 0;

  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

// Fixed, world-anchored square tessellation. Cell (col, row) owns the
// half-open square [origin + col*cell_size, origin + (col+1)*cell_size) along
// x, and likewise along y.
class GridSpec {
 public:
  // Throws std::invalid_argument unless cell_size > 0 and width, height >= 1.
  GridSpec(Vec2 origin, double cell_size, int width, int height);

  Vec2 origin() const { return origin_; }
  double cell_size() const { return cell_size_; }
  int width() const { return width_; }
  int height() const { return height_; }
  double cell_area() const { return cell_size_ * cell_size_; }
  std::size_t cell_count() const {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  }

  bool Contains(CellIndex c) const {
    return c.col >= 0 && c.col < width_ && c.row >= 0 && c.row < height_;
  }
  bool Contains(Vec2 p) const;

  // Row-major offset of an in-bounds cell.
  std::size_t Offset(CellIndex c) const {
    return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(c.col);
  }
  CellIndex FromOffset(std::size_t offset) const {
    return {static_cast<int>(offset % static_cast<std::size_t>(width_)),
            static_cast<int>(offset / static_cast<std::size_t>(width_))};
  }

  // Lower boundary of column/row `i` in world coordinates.
  double ColumnEdge(int i) const { return origin_.x + i * cell_size_; }
  double RowEdge(int i) const { return origin_.y + i * cell_size_; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  Vec2 origin_;
  double cell_size_;
  int width_;
  int height_;
};

// Throws OutOfGrid when p lies outside the grid extent.
CellIndex WorldToCell(const GridSpec& spec, Vec2 p);

// Throws OutOfGrid for an out-of-bounds index.
Vec2 CellCenter(const GridSpec& spec, CellIndex c);

// One cell visited by a polyline traversal. `segment` is the index of the
// polyline segment that first entered the cell and `entry` the entry point.
struct PathCell {
  CellIndex cell;
  std::size_t segment = 0;
  Vec2 entry;
};

// Supercover traversal of a polyline: every cell containing a point of the
// polyline, ordered by first entry, with consecutive duplicates removed. A
// cell left and re-entered later appears again. Throws OutOfGrid if any vertex
// is outside the grid, std::invalid_argument for an empty polyline.
std::vector<PathCell> TraversePath(const GridSpec& spec,
                                   std::span<const Vec2> polyline);

// Cells of TraversePath without the traversal metadata.
std::vector<CellIndex> RasterPath(const GridSpec& spec,
                                  std::span<const Vec2> polyline);

// Cells crossed by the segment of length `track_width` centred at `center`
// and perpendicular to `heading`. Throws OutOfGrid if the segment leaves the
// map.
std::vector<CellIndex> TransverseCells(const GridSpec& spec, Vec2 center,
                                       double heading, double track_width);

}  // namespace lambda_nav

#endif  // LAMBDA_NAV_GRID_H_
