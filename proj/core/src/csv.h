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

#ifndef LAMBDA_NAV_SRC_CSV_H_
#define LAMBDA_NAV_SRC_CSV_H_

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace lambda_nav::csv {

// Shortest representation that parses back to the same double.
std::string FormatDouble(double v);

std::vector<std::string_view> SplitFields(std::string_view line);

double ParseDouble(std::string_view field);
std::int64_t ParseInt(std::string_view field);

// Reads the header line and checks it matches `expected` exactly.
void ExpectHeader(std::istream& is, std::string_view expected);

}  // namespace lambda_nav::csv

#endif  // LAMBDA_NAV_SRC_CSV_H_
