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

#include "lambda_nav/commands.h"

#include <cmath>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "csv.h"
#include "lambda_nav/config.h"
#include "lambda_nav/errors.h"

namespace lambda_nav {
namespace fs = std::filesystem;
namespace {

std::ofstream OpenOut(const fs::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot write " + path.string());
  return os;
}

void CheckWritten(std::ofstream& os, const fs::path& path) {
  os.flush();
  if (!os) throw Error("write failed for " + path.string());
}

void WriteMaps(const fs::path& out_dir, const ElevationMap& dem,
               const LambdaField& field) {
  const fs::path dem_path = out_dir / "dem.csv";
  std::ofstream dem_os = OpenOut(dem_path);
  dem.WriteCsv(dem_os);
  CheckWritten(dem_os, dem_path);

  const fs::path field_path = out_dir / "lambda_field.csv";
  std::ofstream field_os = OpenOut(field_path);
  field.WriteCsv(field_os);
  CheckWritten(field_os, field_path);
}

ScenarioConfig LoadWithOverrides(const fs::path& config_path,
                                 const RunOptions& options) {
  ScenarioConfig cfg = LoadConfig(config_path);
  if (options.seed) cfg.seed = *options.seed;
  if (options.threshold) {
    cfg.planner.r_threshold = *options.threshold;
    cfg.Validate();
  }
  return cfg;
}

}  // namespace

int CmdRun(const fs::path& config_path, const fs::path& out_dir,
           const RunOptions& options, std::ostream& err) {
  try {
    const ScenarioConfig cfg = LoadWithOverrides(config_path, options);
    fs::create_directories(out_dir);
    const ScenarioResult result = RunScenario(cfg, options.observer);

    const fs::path trace_path = out_dir / "trace.csv";
    std::ofstream trace_os = OpenOut(trace_path);
    WriteTraceCsv(trace_os, result.trace);
    CheckWritten(trace_os, trace_path);

    WriteMaps(out_dir, result.dem, result.field);

    const fs::path summary_path = out_dir / "summary.json";
    std::ofstream summary_os = OpenOut(summary_path);
    WriteSummaryJson(summary_os, Summarize(cfg, result), result.termination);
    CheckWritten(summary_os, summary_path);

    return result.termination == Termination::kGoal ? kExitGoal : kExitStall;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int CmdRunBatch(const std::vector<fs::path>& config_paths,
                const fs::path& out_dir, const RunOptions& options,
                std::ostream& err) {
  RunOptions batch_options = options;
  batch_options.observer = nullptr;

  struct Outcome {
    int code;
    std::string messages;
  };
  std::vector<std::future<Outcome>> runs;
  runs.reserve(config_paths.size());
  for (const fs::path& config : config_paths) {
    runs.push_back(std::async(std::launch::async, [&, config] {
      std::ostringstream messages;
      const int code = CmdRun(config, out_dir / config.stem(), batch_options,
                              messages);
      return Outcome{code, messages.str()};
    }));
  }

  int worst = kExitGoal;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const Outcome outcome = runs[i].get();
    if (!outcome.messages.empty()) {
      err << config_paths[i].string() << ": " << outcome.messages;
    }
    if (outcome.code == kExitError) {
      worst = kExitError;
    } else if (outcome.code == kExitStall && worst == kExitGoal) {
      worst = kExitStall;
    }
  }
  return worst;
}

Trajectory ReadPathCsv(std::istream& is) {
  csv::ExpectHeader(is, "x,y,v");
  std::vector<Vec2> points;
  std::vector<double> speeds;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = csv::SplitFields(line);
    if (fields.size() != 3) throw Error("path row needs x,y,v: " + line);
    points.push_back({csv::ParseDouble(fields[0]), csv::ParseDouble(fields[1])});
    speeds.push_back(csv::ParseDouble(fields[2]));
  }
  if (points.empty()) throw Error("path file has no rows");

  auto heading = [&](std::size_t from) {
    const Vec2 a = points[from];
    const Vec2 b = points[from + 1];
    return std::atan2(b.y - a.y, b.x - a.x);
  };
  Trajectory traj;
  traj.start = {points[0].x, points[0].y, points.size() > 1 ? heading(0) : 0.0};
  for (std::size_t i = 1; i < points.size(); ++i) {
    TrajectoryStep step;
    step.state = {points[i].x, points[i].y, WrapAngle(heading(i - 1))};
    step.control = {speeds[i - 1], 0.0};
    traj.steps.push_back(step);
  }
  return traj;
}

int CmdRiskProfile(const fs::path& config_path, const fs::path& path_file,
                   int max_scans, std::ostream& out, std::ostream& err) {
  try {
    const ScenarioConfig cfg = LoadConfig(config_path);
    std::ifstream path_is(path_file, std::ios::binary);
    if (!path_is) throw Error("cannot read path file " + path_file.string());
    const Trajectory traj = ReadPathCsv(path_is);

    const auto [dem, field] = PerceptionSweep(cfg, max_scans);
    const RiskProfile profile = ExpectedPathRisk(
        field, dem, traj, cfg.MakeWheel(), cfg.planner.track_width);
    WriteRiskProfileCsv(out, profile);
    return kExitGoal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int CmdMapDump(const fs::path& config_path, const fs::path& out_dir,
               int max_scans, std::ostream& err) {
  try {
    const ScenarioConfig cfg = LoadConfig(config_path);
    fs::create_directories(out_dir);
    const auto [dem, field] = PerceptionSweep(cfg, max_scans);
    WriteMaps(out_dir, dem, field);
    return kExitGoal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

void WriteSummaryJson(std::ostream& os, const ScenarioSummary& summary,
                      Termination termination) {
  nlohmann::ordered_json j;
  j["goal_reached"] = summary.goal_reached;
  j["termination"] = TerminationName(termination);
  j["total_time"] = summary.total_time;
  j["max_expected_risk"] = summary.max_expected_risk;
  if (summary.min_crossing_speed) {
    j["min_crossing_speed"] = *summary.min_crossing_speed;
  } else {
    j["min_crossing_speed"] = nullptr;
  }
  j["path_length"] = summary.path_length;
  os << j.dump(2) << "\n";
}

}  // namespace lambda_nav
