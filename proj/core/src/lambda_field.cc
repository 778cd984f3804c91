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

#include "lambda_nav/lambda_field.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "csv.h"
#include "lambda_nav/errors.h"

namespace lambda_nav {

double Severity(double elevation_diff, double wheel_radius) {
  if (!(wheel_radius > 0.0)) {
    throw NonPositiveRadius("severity: wheel radius must be > 0");
  }
  return std::min(std::abs(elevation_diff) / wheel_radius, 1.0);
}

double Intensity(std::int64_t s, std::int64_t h, double p, double error_area) {
  if (h <= 0 || p <= 0.0) return 0.0;
  const double safe = s > 0 ? static_cast<double>(s) : kVirtualSafeCount;
  return std::log1p(static_cast<double>(h) / safe) * p / error_area;
}

LambdaField::LambdaField(const GridSpec& spec, double error_area)
    : spec_(spec), error_area_(error_area), cells_(spec.cell_count()) {
  if (!(error_area > 0.0)) {
    throw std::invalid_argument("LambdaField: error area must be > 0");
  }
}

const LambdaCell& LambdaField::at(CellIndex c) const {
  if (!spec_.Contains(c)) throw OutOfGrid("LambdaField::at: cell outside grid");
  return cells_[spec_.Offset(c)];
}

void LambdaField::Observe(CellIndex c, CellClass outcome, double elevation_diff,
                          double wheel_radius) {
  if (!spec_.Contains(c)) {
    throw OutOfGrid("LambdaField::Observe: cell outside grid");
  }
  const double p = Severity(elevation_diff, wheel_radius);
  LambdaCell& cell = cells_[spec_.Offset(c)];
  if (outcome == CellClass::kHazardous) {
    ++cell.h;
  } else {
    ++cell.s;
  }
  cell.p = p;
  cell.lambda = Intensity(cell.s, cell.h, cell.p, error_area_);
}

void LambdaField::IngestScan(const ElevationMap& dem,
                             std::span<const CellIndex> touched, double h_safe,
                             double wheel_radius) {
  for (const CellIndex& c : touched) {
    const double diff = dem.ElevationDiff(c);
    Observe(c, diff >= h_safe ? CellClass::kHazardous : CellClass::kSafe, diff,
            wheel_radius);
  }
}

double LambdaField::CollisionProbability(
    std::span<const CellIndex> cells) const {
  double sum = 0.0;
  for (const CellIndex& c : cells) sum += at(c).lambda;
  return -std::expm1(-spec_.cell_area() * sum);
}

void LambdaField::WriteCsv(std::ostream& os) const {
  os << "col,row,s,h,p,lambda\n";
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const CellIndex c = spec_.FromOffset(i);
    const LambdaCell& l = cells_[i];
    os << c.col << ',' << c.row << ',' << l.s << ',' << l.h << ','
       << csv::FormatDouble(l.p) << ',' << csv::FormatDouble(l.lambda) << '\n';
  }
}

LambdaField LambdaField::ReadCsv(std::istream& is, const GridSpec& spec,
                                 double error_area) {
  csv::ExpectHeader(is, "col,row,s,h,p,lambda");
  LambdaField field(spec, error_area);
  std::vector<bool> seen(spec.cell_count(), false);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line == "\r") continue;
    const auto f = csv::SplitFields(line);
    if (f.size() != 6) throw Error("lambda csv: expected 6 fields: " + line);
    const CellIndex c{static_cast<int>(csv::ParseInt(f[0])),
                      static_cast<int>(csv::ParseInt(f[1]))};
    if (!spec.Contains(c)) {
      throw OutOfGrid("lambda csv: cell outside grid: " + line);
    }
    LambdaCell cell;
    cell.s = csv::ParseInt(f[2]);
    cell.h = csv::ParseInt(f[3]);
    cell.p = csv::ParseDouble(f[4]);
    const double stored = csv::ParseDouble(f[5]);
    if (cell.s < 0 || cell.h < 0 || cell.p < 0.0 || cell.p > 1.0) {
      throw Error("lambda csv: value out of range: " + line);
    }
    cell.lambda = Intensity(cell.s, cell.h, cell.p, error_area);
    const double scale = std::max(std::abs(cell.lambda), std::abs(stored));
    if (std::abs(cell.lambda - stored) > 1e-9 * scale) {
      throw Error("lambda csv: stored intensity disagrees with counts: " + line);
    }
    field.cells_[spec.Offset(c)] = cell;
    seen[spec.Offset(c)] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error("lambda csv: missing cells");
  }
  return field;
}

}  // namespace lambda_nav
