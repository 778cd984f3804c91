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

#ifndef LAMBDA_NAV_LAMBDA_FIELD_H_
#define LAMBDA_NAV_LAMBDA_FIELD_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "lambda_nav/dem.h"
#include "lambda_nav/grid.h"

namespace lambda_nav {

// Safe-observation count substituted for s when a cell has only hazardous
// observations; keeps the intensity finite.
inline constexpr double kVirtualSafeCount = 0.5;

struct LambdaCell {
  std::int64_t s = 0;  // safe observations
  std::int64_t h = 0;  // hazardous observations
  double p = 0.0;      // severity of the latest observation, in [0, 1]
  double lambda = 0.0; // intensity, m^-2

  friend bool operator==(const LambdaCell&, const LambdaCell&) = default;
};

// min(|H| / R, 1). Throws NonPositiveRadius unless R > 0.
double Severity(double elevation_diff, double wheel_radius);

// Severity-weighted intensity (1/e) * ln(1 + h/s) * p, with s replaced by
// kVirtualSafeCount when s == 0. Zero whenever h == 0 or p == 0.
double Intensity(std::int64_t s, std::int64_t h, double p, double error_area);

// Lambda-Field: per-cell hazard intensity over a GridSpec.
class LambdaField {
 public:
  // Throws std::invalid_argument unless error_area > 0.
  LambdaField(const GridSpec& spec, double error_area);

  const GridSpec& spec() const { return spec_; }
  double error_area() const { return error_area_; }
  const LambdaCell& at(CellIndex c) const;
  double lambda(CellIndex c) const { return at(c).lambda; }
  std::span<const LambdaCell> cells() const { return cells_; }

  // Records one measurement of cell c and refreshes its severity from the
  // given elevation difference.
  void Observe(CellIndex c, CellClass outcome, double elevation_diff,
               double wheel_radius);

  // Classifies every touched cell against the DEM and records the outcome.
  // Throws UnobservedCell if a touched cell has no elevation samples.
  void IngestScan(const ElevationMap& dem, std::span<const CellIndex> touched,
                  double h_safe, double wheel_radius);

  // 1 - exp(-da * sum(lambda_i)) over the given cells.
  double CollisionProbability(std::span<const CellIndex> cells) const;

  // CSV with header col,row,s,h,p,lambda; one row per cell.
  void WriteCsv(std::ostream& os) const;
  // Loads counts and severities, recomputes every intensity and checks it
  // against the stored column within 1e-9 relative. Throws Error on mismatch.
  static LambdaField ReadCsv(std::istream& is, const GridSpec& spec,
                             double error_area);

  friend bool operator==(const LambdaField&, const LambdaField&) = default;

 private:
  GridSpec spec_;
  double error_area_;
  std::vector<LambdaCell> cells_;
};

}  // namespace lambda_nav

#endif  // LAMBDA_NAV_LAMBDA_FIELD_H_
