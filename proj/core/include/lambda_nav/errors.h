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

#ifndef LAMBDA_NAV_ERRORS_H_
#define LAMBDA_NAV_ERRORS_H_

#include <stdexcept>
#include <string>

namespace lambda_nav {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfGrid : public Error {
 public:
  using Error::Error;
};

class UnobservedCell : public Error {
 public:
  using Error::Error;
};

class NonPositiveRadius : public Error {
 public:
  using Error::Error;
};

class InvalidSteering : public Error {
 public:
  using Error::Error;
};

class EmptyReference : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed configuration text. `line` is 1-based, 0 when unknown.
class ParseError : public ConfigError {
 public:
  ParseError(const std::string& what, int line)
      : ConfigError(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A configuration value that parses but violates a constraint. `field` is the
// dotted key path, e.g. "wheel.m".
class ValidationError : public ConfigError {
 public:
  ValidationError(const std::string& field, const std::string& what)
      : ConfigError(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace lambda_nav

#endif  // LAMBDA_NAV_ERRORS_H_
