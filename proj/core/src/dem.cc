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

#include "lambda_nav/dem.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "csv.h"
#include "lambda_nav/errors.h"

namespace lambda_nav {

ElevationMap::ElevationMap(const GridSpec& spec)
    : spec_(spec), cells_(spec.cell_count()) {}

const ElevationCell& ElevationMap::at(CellIndex c) const {
  if (!spec_.Contains(c)) throw OutOfGrid("ElevationMap::at: cell outside grid");
  return cells_[spec_.Offset(c)];
}

std::vector<CellIndex> ElevationMap::IntegrateCloud(
    std::span<const Point3> points) {
  std::vector<std::size_t> touched;
  touched.reserve(points.size());
  for (const Point3& p : points) {
    if (!std::isfinite(p.z) || !spec_.Contains(Vec2{p.x, p.y})) continue;
    const std::size_t off = spec_.Offset(WorldToCell(spec_, {p.x, p.y}));
    ElevationCell& cell = cells_[off];
    cell.z = cell.observed() ? std::max(cell.z, p.z) : p.z;
    ++cell.n_points;
    touched.push_back(off);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  std::vector<CellIndex> out;
  out.reserve(touched.size());
  for (std::size_t off : touched) out.push_back(spec_.FromOffset(off));
  std::sort(out.begin(), out.end());
  return out;
}

double ElevationMap::DiffUnchecked(CellIndex c) const {
  const double zc = cells_[spec_.Offset(c)].z;
  double h = 0.0;
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) continue;
      const CellIndex n{c.col + dc, c.row + dr};
      if (!spec_.Contains(n)) continue;
      const ElevationCell& nc = cells_[spec_.Offset(n)];
      if (!nc.observed()) continue;
      h = std::max(h, std::abs(zc - nc.z));
    }
  }
  return h;
}

double ElevationMap::ElevationDiff(CellIndex c) const {
  if (!at(c).observed()) {
    std::ostringstream os;
    os << "cell (" << c.col << ", " << c.row << ") has no elevation samples";
    throw UnobservedCell(os.str());
  }
  return DiffUnchecked(c);
}

double ElevationMap::ElevationDiffOrZero(CellIndex c) const {
  return at(c).observed() ? DiffUnchecked(c) : 0.0;
}

CellClass ElevationMap::Classify(CellIndex c, double h_safe) const {
  return ElevationDiff(c) >= h_safe ? CellClass::kHazardous : CellClass::kSafe;
}

void ElevationMap::WriteCsv(std::ostream& os) const {
  os << "col,row,z,n_points,observed\n";
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const CellIndex c = spec_.FromOffset(i);
    const ElevationCell& e = cells_[i];
    os << c.col << ',' << c.row << ',' << csv::FormatDouble(e.z) << ','
       << e.n_points << ',' << (e.observed() ? 1 : 0) << '\n';
  }
}

ElevationMap ElevationMap::ReadCsv(std::istream& is, const GridSpec& spec) {
  csv::ExpectHeader(is, "col,row,z,n_points,observed");
  ElevationMap map(spec);
  std::vector<bool> seen(spec.cell_count(), false);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line == "\r") continue;
    const auto f = csv::SplitFields(line);
    if (f.size() != 5) throw Error("dem csv: expected 5 fields: " + line);
    const CellIndex c{static_cast<int>(csv::ParseInt(f[0])),
                      static_cast<int>(csv::ParseInt(f[1]))};
    if (!spec.Contains(c)) throw OutOfGrid("dem csv: cell outside grid: " + line);
    ElevationCell cell;
    cell.z = csv::ParseDouble(f[2]);
    cell.n_points = csv::ParseInt(f[3]);
    const bool observed = csv::ParseInt(f[4]) != 0;
    if (cell.n_points < 0 || observed != cell.observed()) {
      throw Error("dem csv: inconsistent observation count: " + line);
    }
    map.cells_[spec.Offset(c)] = cell;
    seen[spec.Offset(c)] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error("dem csv: missing cells");
  }
  return map;
}

}  // namespace lambda_nav
