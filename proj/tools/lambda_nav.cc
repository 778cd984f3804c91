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

// lambda_nav: run risk-constrained navigation scenarios and export maps.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/cfg/helpers.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "lambda_nav/commands.h"

namespace fs = std::filesystem;

namespace {

// LAMBDA_NAV_LOG takes a spdlog level name (trace, debug, info, warn, error,
// off) or per-logger assignments such as "info,run=debug".
void ConfigureLogging() {
  auto logger = spdlog::stderr_color_mt("lambda_nav");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  spdlog::set_pattern("[%l] %v");
  if (const char* env = std::getenv("LAMBDA_NAV_LOG")) {
    spdlog::cfg::helpers::load_levels(env);
  }
}

lambda_nav::TickObserver TickLogger() {
  if (!spdlog::should_log(spdlog::level::debug)) return nullptr;
  return [](const lambda_nav::TickView& view) {
    const auto& d = view.plan.diagnostics;
    const lambda_nav::ControlInput u = view.plan.controls.empty()
                                           ? lambda_nav::ControlInput{}
                                           : view.plan.controls.front();
    spdlog::debug(
        "t={:.1f} pose=({:.3f}, {:.3f}, {:.3f}) v={:.3f} delta={:.3f} "
        "E={:.4g} cost={:.4g} feasible={}/{}",
        view.t, view.state.x, view.state.y, view.state.theta, u.v, u.delta,
        d.expected_risk, d.cost, d.feasible, d.candidates);
  };
}

}  // namespace

int main(int argc, char** argv) {
  ConfigureLogging();

  CLI::App app{"Risk-constrained navigation with Lambda-Field collision risk"};
  app.require_subcommand(1);

  std::vector<fs::path> configs;
  fs::path out_dir;
  std::uint64_t seed = 0;
  double threshold = 0.0;
  bool batch = false;
  auto* run = app.add_subcommand("run", "Run a scenario and write its trace and maps");
  run->add_option("config", configs, "Scenario TOML file(s)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Output directory")->required();
  auto* seed_opt = run->add_option("--seed", seed, "Override the scenario seed");
  auto* threshold_opt = run->add_option("--threshold", threshold,
                                        "Override the risk threshold, J")
                            ->check(CLI::NonNegativeNumber);
  run->add_flag("--batch", batch,
                "Run several configs concurrently into <out>/<config stem>");

  fs::path config;
  fs::path path_file;
  int max_scans = -1;
  auto* profile = app.add_subcommand(
      "risk-profile", "Print the expected-risk profile of an x,y,v path");
  profile->add_option("config", config, "Scenario TOML file")->required()->check(CLI::ExistingFile);
  profile->add_option("path", path_file, "CSV with header x,y,v")->required()->check(CLI::ExistingFile);
  profile->add_option("--max-scans", max_scans,
                      "Scans in the perception sweep (default: whole reference)");

  auto* dump = app.add_subcommand("map-dump", "Write the DEM and Lambda-Field after a perception sweep");
  dump->add_option("config", config, "Scenario TOML file")->required()->check(CLI::ExistingFile);
  dump->add_option("--out", out_dir, "Output directory")->required();
  dump->add_option("--max-scans", max_scans,
                   "Scans in the perception sweep (default: whole reference)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lambda_nav::kExitError;
  }

  if (*run) {
    lambda_nav::RunOptions options;
    if (*seed_opt) options.seed = seed;
    if (*threshold_opt) options.threshold = threshold;
    if (batch) {
      spdlog::info("batch of {} scenarios into {}", configs.size(), out_dir.string());
      return lambda_nav::CmdRunBatch(configs, out_dir, options, std::cerr);
    }
    if (configs.size() != 1) {
      std::cerr << "error: several configs given; pass --batch to run them all\n";
      return lambda_nav::kExitError;
    }
    options.observer = TickLogger();
    spdlog::info("running {} into {}", configs.front().string(), out_dir.string());
    const int code = lambda_nav::CmdRun(configs.front(), out_dir, options, std::cerr);
    spdlog::info("exit code {}", code);
    return code;
  }
  if (*profile) {
    return lambda_nav::CmdRiskProfile(config, path_file, max_scans, std::cout,
                                      std::cerr);
  }
  return lambda_nav::CmdMapDump(config, out_dir, max_scans, std::cerr);
}
