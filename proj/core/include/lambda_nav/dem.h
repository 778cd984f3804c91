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

#ifndef LAMBDA_NAV_DEM_H_
#define LAMBDA_NAV_DEM_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "lambda_nav/grid.h"

namespace lambda_nav {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct ElevationCell {
  double z = 0.0;  // running maximum of integrated point elevations
  std::int64_t n_points = 0;

  bool observed() const { return n_points > 0; }

  friend bool operator==(const ElevationCell&, const ElevationCell&) = default;
};

enum class CellClass { kSafe, kHazardous };

// Digital elevation model over a GridSpec. Single writer (IntegrateCloud),
// any number of readers between writes.
class ElevationMap {
 public:
  explicit ElevationMap(const GridSpec& spec);

  const GridSpec& spec() const { return spec_; }
  const ElevationCell& at(CellIndex c) const;
  std::span<const ElevationCell> cells() const { return cells_; }

  // Folds each in-bounds point into its cell (running max of z, count + 1).
  // Out-of-bounds points are skipped. Returns the distinct cells that received
  // at least one point, sorted by (col, row).
  std::vector<CellIndex> IntegrateCloud(std::span<const Point3> points);

  // Maximum |z_c - z_j| over observed 8-neighbours j; 0 when none is
  // observed. Throws UnobservedCell if c is unobserved, OutOfGrid if c is not
  // in the grid.
  double ElevationDiff(CellIndex c) const;

  // Like ElevationDiff but returns 0 for unobserved cells instead of throwing.
  double ElevationDiffOrZero(CellIndex c) const;

  // Hazardous iff ElevationDiff(c) >= h_safe.
  CellClass Classify(CellIndex c, double h_safe) const;

  // CSV with header col,row,z,n_points,observed; one row per cell.
  void WriteCsv(std::ostream& os) const;
  // Inverse of WriteCsv. Throws Error on malformed input or mismatched size.
  static ElevationMap ReadCsv(std::istream& is, const GridSpec& spec);

  friend bool operator==(const ElevationMap&, const ElevationMap&) = default;

 private:
  double DiffUnchecked(CellIndex c) const;

  GridSpec spec_;
  std::vector<ElevationCell> cells_;
};

}  // namespace lambda_nav

#endif  // LAMBDA_NAV_DEM_H_
