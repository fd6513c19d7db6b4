// Copyright 2026 The coopmetro Authors
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

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace coopmetro::cli {

// Raised for anything that should exit with the usage status.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { Run, Sweep, Region, Maximize, Tradeoff, Figure };
enum class Format { Csv, Json };

const char* to_string(Command command) noexcept;
const char* to_string(Format format) noexcept;

// Keys match the JSON config file one to one.
struct RunConfig {
  Command command = Command::Run;

  std::optional<std::string> kind;
  std::optional<double> b_z;
  std::optional<double> b_x;
  std::optional<double> gamma;
  std::optional<double> eta;
  std::optional<double> dipole;
  std::optional<double> t_e;
  std::optional<int> n_spins;

  std::optional<double> t;
  std::optional<int> m;

  std::optional<std::string> axis;
  std::optional<double> from;
  std::optional<double> to;
  std::optional<int> points;

  std::optional<std::string> objective;
  std::optional<double> threshold;
  std::optional<double> f_max;
  std::optional<std::string> figure;

  std::optional<std::string> out;
  Format format = Format::Csv;

  bool operator==(const RunConfig&) const = default;

  int repetitions() const { return m.value_or(1); }
};

// `file` is the parsed config file (or null), `overrides` holds command-line
// values and wins key by key. Both must be JSON objects with known keys.
RunConfig parse_config(const nlohmann::json& file, const nlohmann::json& overrides);

// Reads and parses a JSON config file; syntax errors name the path.
nlohmann::json load_config_file(const std::string& path);

nlohmann::json to_json(const RunConfig& config);

// Field consistency for the selected command.
void validate(const RunConfig& config);

}  // namespace coopmetro::cli
