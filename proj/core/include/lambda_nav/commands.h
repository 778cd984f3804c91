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

#ifndef LAMBDA_NAV_COMMANDS_H_
#define LAMBDA_NAV_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "lambda_nav/scenario.h"

namespace lambda_nav {

// Process exit codes shared by every command.
inline constexpr int kExitGoal = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitStall = 2;

struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::optional<double> threshold;  // overrides planner.r_threshold, J
  TickObserver observer;
};

// Runs one scenario and writes trace.csv, lambda_field.csv, dem.csv and
// summary.json into `out_dir` (created if missing). Returns kExitGoal,
// kExitStall on stall or timeout, kExitError on any error (reported on `err`).
int CmdRun(const std::filesystem::path& config_path,
           const std::filesystem::path& out_dir, const RunOptions& options,
           std::ostream& err);

// Runs each config into out_dir/<config stem>, concurrently. Returns
// kExitError if any run failed, else kExitStall if any stalled, else
// kExitGoal. The observer in `options` is ignored.
int CmdRunBatch(const std::vector<std::filesystem::path>& config_paths,
                const std::filesystem::path& out_dir, const RunOptions& options,
                std::ostream& err);

// Builds the map with a perception sweep along the reference path (at most
// `max_scans` scans, all of them if negative), then evaluates the expected
// risk of the path in `path_file` and prints the risk profile CSV to `out`.
// The path file is a CSV with header x,y,v; row i's speed applies to the
// segment leaving row i.
int CmdRiskProfile(const std::filesystem::path& config_path,
                   const std::filesystem::path& path_file, int max_scans,
                   std::ostream& out, std::ostream& err);

// Perception sweep only; writes dem.csv and lambda_field.csv.
int CmdMapDump(const std::filesystem::path& config_path,
               const std::filesystem::path& out_dir, int max_scans,
               std::ostream& err);

// Reads an x,y,v path file into a trajectory with straight segments.
Trajectory ReadPathCsv(std::istream& is);

void WriteSummaryJson(std::ostream& os, const ScenarioSummary& summary,
                      Termination termination);

}  // namespace lambda_nav

#endif  // LAMBDA_NAV_COMMANDS_H_
