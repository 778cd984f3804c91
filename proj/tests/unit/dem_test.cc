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

#include <random>
#include <set>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "lambda_nav/errors.h"

namespace lambda_nav {
namespace {

const GridSpec kSpec({0.0, 0.0}, 0.1, 10, 10);

Point3 At(CellIndex c, double z) {
  const Vec2 p = CellCenter(kSpec, c);
  return {p.x, p.y, z};
}

TEST(IntegrateCloudTest, SinglePoint) {
  ElevationMap dem(kSpec);
  const std::vector<Point3> pts{{0.05, 0.05, 0.12}};
  const auto touched = dem.IntegrateCloud(pts);
  EXPECT_EQ(touched, (std::vector<CellIndex>{{0, 0}}));
  EXPECT_DOUBLE_EQ(dem.at({0, 0}).z, 0.12);
  EXPECT_EQ(dem.at({0, 0}).n_points, 1);
  EXPECT_TRUE(dem.at({0, 0}).observed());
  EXPECT_FALSE(dem.at({1, 0}).observed());
}

TEST(IntegrateCloudTest, KeepsRunningMaximum) {
  ElevationMap dem(kSpec);
  dem.IntegrateCloud(std::vector<Point3>{{0.05, 0.05, 0.12}});
  dem.IntegrateCloud(std::vector<Point3>{{0.05, 0.05, 0.07}});
  EXPECT_DOUBLE_EQ(dem.at({0, 0}).z, 0.12);
  EXPECT_EQ(dem.at({0, 0}).n_points, 2);
}

TEST(IntegrateCloudTest, SkipsOutOfBoundsAndNonFinitePoints) {
  ElevationMap dem(kSpec);
  const std::vector<Point3> pts{
      {-0.5, 0.5, 1.0}, {1.5, 0.5, 1.0}, {0.5, 0.5, std::nan("")}, {0.55, 0.55, 0.2}};
  EXPECT_EQ(dem.IntegrateCloud(pts), (std::vector<CellIndex>{{5, 5}}));
  std::int64_t total = 0;
  for (const ElevationCell& c : dem.cells()) total += c.n_points;
  EXPECT_EQ(total, 1);
}

TEST(IntegrateCloudTest, RandomGroundPointsStayFlat) {
  const GridSpec spec({-10.0, -10.0}, 0.1, 200, 200);
  ElevationMap dem(spec);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  std::vector<Point3> pts;
  std::set<CellIndex> expected;
  for (int i = 0; i < 100000; ++i) {
    const Point3 p{u(rng), u(rng), 0.0};
    pts.push_back(p);
    expected.insert(WorldToCell(spec, {p.x, p.y}));
  }
  const auto touched = dem.IntegrateCloud(pts);
  EXPECT_EQ(std::set<CellIndex>(touched.begin(), touched.end()), expected);
  for (std::size_t off = 0; off < spec.cell_count(); ++off) {
    const CellIndex c = spec.FromOffset(off);
    const ElevationCell& cell = dem.at(c);
    EXPECT_EQ(cell.observed(), expected.count(c) == 1);
    if (cell.observed()) {
      ASSERT_EQ(cell.z, 0.0);
      ASSERT_EQ(dem.ElevationDiff(c), 0.0);
    }
  }
}

TEST(IntegrateCloudTest, IdempotentUnderRepeatedCloudsExceptCounts) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 0.999);
  std::uniform_real_distribution<double> z(-0.2, 0.4);
  std::vector<Point3> pts;
  for (int i = 0; i < 500; ++i) pts.push_back({u(rng), u(rng), z(rng)});
  ElevationMap once(kSpec);
  once.IntegrateCloud(pts);
  ElevationMap twice = once;
  twice.IntegrateCloud(pts);
  for (std::size_t off = 0; off < kSpec.cell_count(); ++off) {
    const CellIndex c = kSpec.FromOffset(off);
    EXPECT_EQ(once.at(c).z, twice.at(c).z);
    EXPECT_EQ(2 * once.at(c).n_points, twice.at(c).n_points);
    if (once.at(c).observed()) EXPECT_EQ(once.ElevationDiff(c), twice.ElevationDiff(c));
  }
}

TEST(ElevationDiffTest, RaisedCentre) {
  ElevationMap dem(kSpec);
  std::vector<Point3> pts;
  for (int dc = -1; dc <= 1; ++dc) {
    for (int dr = -1; dr <= 1; ++dr) pts.push_back(At({5 + dc, 5 + dr}, 0.0));
  }
  pts.push_back(At({5, 5}, 0.10));
  dem.IntegrateCloud(pts);
  EXPECT_DOUBLE_EQ(dem.ElevationDiff({5, 5}), 0.10);
  EXPECT_DOUBLE_EQ(dem.ElevationDiff({4, 4}), 0.10);
}

TEST(ElevationDiffTest, FlatPlateau) {
  ElevationMap dem(kSpec);
  std::vector<Point3> pts;
  for (int dc = -1; dc <= 1; ++dc) {
    for (int dr = -1; dr <= 1; ++dr) pts.push_back(At({5 + dc, 5 + dr}, 0.3));
  }
  dem.IntegrateCloud(pts);
  EXPECT_EQ(dem.ElevationDiff({5, 5}), 0.0);
}

TEST(ElevationDiffTest, IgnoresUnobservedNeighbours) {
  ElevationMap dem(kSpec);
  dem.IntegrateCloud(std::vector<Point3>{At({5, 5}, 0.0), At({4, 5}, -0.05), At({6, 6}, 0.02)});
  EXPECT_DOUBLE_EQ(dem.ElevationDiff({5, 5}), 0.05);
}

TEST(ElevationDiffTest, IsolatedCellHasZeroDiff) {
  ElevationMap dem(kSpec);
  dem.IntegrateCloud(std::vector<Point3>{At({0, 0}, 0.7)});
  EXPECT_EQ(dem.ElevationDiff({0, 0}), 0.0);
}

TEST(ElevationDiffTest, UnobservedCellThrows) {
  ElevationMap dem(kSpec);
  EXPECT_THROW(dem.ElevationDiff({3, 3}), UnobservedCell);
  EXPECT_EQ(dem.ElevationDiffOrZero({3, 3}), 0.0);
  EXPECT_THROW(dem.ElevationDiff({10, 3}), OutOfGrid);
}

TEST(ElevationDiffTest, SwappingAPairKeepsTheirContribution) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> z(-0.5, 0.5);
  for (int trial = 0; trial < 100; ++trial) {
    const double za = z(rng);
    const double zb = z(rng);
    ElevationMap ab(kSpec);
    ElevationMap ba(kSpec);
    ab.IntegrateCloud(std::vector<Point3>{At({2, 2}, za), At({3, 2}, zb)});
    ba.IntegrateCloud(std::vector<Point3>{At({2, 2}, zb), At({3, 2}, za)});
    EXPECT_EQ(ab.ElevationDiff({2, 2}), ba.ElevationDiff({2, 2}));
    EXPECT_EQ(ab.ElevationDiff({2, 2}), ab.ElevationDiff({3, 2}));
    EXPECT_GE(ab.ElevationDiff({2, 2}), 0.0);
  }
}

TEST(ClassifyTest, ThresholdBoundaries) {
  auto map_with_step = [](double h) {
    ElevationMap dem(kSpec);
    dem.IntegrateCloud(std::vector<Point3>{At({5, 5}, h), At({6, 5}, 0.0)});
    return dem;
  };
  EXPECT_EQ(map_with_step(0.04).Classify({5, 5}, 0.05), CellClass::kSafe);
  EXPECT_EQ(map_with_step(0.05).Classify({5, 5}, 0.05), CellClass::kHazardous);
  EXPECT_EQ(map_with_step(0.20).Classify({5, 5}, 0.05), CellClass::kHazardous);
  EXPECT_THROW(ElevationMap(kSpec).Classify({5, 5}, 0.05), UnobservedCell);
}

TEST(ElevationCsvTest, RoundTrip) {
  ElevationMap dem(kSpec);
  dem.IntegrateCloud(std::vector<Point3>{At({1, 2}, 0.1 + 1e-17), At({1, 2}, -3.0),
                                         At({9, 9}, 1.0 / 3.0)});
  std::stringstream ss;
  dem.WriteCsv(ss);
  EXPECT_EQ(ss.str().substr(0, ss.str().find('\n')), "col,row,z,n_points,observed");
  EXPECT_EQ(ElevationMap::ReadCsv(ss, kSpec), dem);
}

TEST(ElevationCsvTest, RejectsMalformedInput) {
  std::stringstream bad_header("c,r,z\n");
  EXPECT_THROW(ElevationMap::ReadCsv(bad_header, kSpec), Error);
  std::stringstream short_body("col,row,z,n_points,observed\n0,0,0,0,0\n");
  EXPECT_THROW(ElevationMap::ReadCsv(short_body, kSpec), Error);
}

}  // namespace
}  // namespace lambda_nav
