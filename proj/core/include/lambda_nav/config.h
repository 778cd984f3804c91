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

#ifndef LAMBDA_NAV_CONFIG_H_
#define LAMBDA_NAV_CONFIG_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "lambda_nav/scenario.h"

namespace lambda_nav {

// Parses a TOML scenario. Keys that are absent take the defaults of
// ScenarioConfig; unknown keys are rejected. Throws ParseError (with line) for
// malformed TOML and ValidationError (with the dotted key) for bad values.
ScenarioConfig ParseConfig(std::string_view toml_text,
                           std::string_view source_name = "<string>");

// Reads and parses a file. Throws ConfigError if it cannot be read.
ScenarioConfig LoadConfig(const std::filesystem::path& path);

// Serialises every field so that ParseConfig(DumpConfig(c)) == c. Angles are
// written in radians to keep the round trip exact.
std::string DumpConfig(const ScenarioConfig& cfg);

}  // namespace lambda_nav

#endif  // LAMBDA_NAV_CONFIG_H_
