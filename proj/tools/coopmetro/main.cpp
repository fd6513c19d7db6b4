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

#include <cerrno>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"

namespace {

using coopmetro::cli::UsageError;
using nlohmann::json;

enum class FlagType { Text, Real, Integer };

struct Flag {
  const char* key;
  FlagType type;
  const char* help;
};

constexpr Flag kFlags[] = {
    {"kind", FlagType::Text, "scenario kind"},
    {"b_z", FlagType::Real, "longitudinal field (the estimated parameter)"},
    {"b_x", FlagType::Real, "transverse control field"},
    {"gamma", FlagType::Real, "spontaneous emission rate"},
    {"eta", FlagType::Real, "dephasing rate"},
    {"dipole", FlagType::Real, "transition dipole |d|"},
    {"t_e", FlagType::Real, "bath temperature"},
    {"n_spins", FlagType::Integer, "spins in the unitary baseline (1 or 2)"},
    {"t", FlagType::Real, "evolution time"},
    {"m", FlagType::Integer, "repetitions for the Cramer-Rao bound"},
    {"axis", FlagType::Text, "swept parameter: b_z, b_x or t"},
    {"from", FlagType::Real, "grid start / lower bound"},
    {"to", FlagType::Real, "grid end / upper bound"},
    {"points", FlagType::Integer, "grid points"},
    {"objective", FlagType::Text, "dynamics, ground-single, ground-exact or ground-effective"},
    {"threshold", FlagType::Real, "region threshold (default: Heisenberg limit)"},
    {"f_max", FlagType::Real, "peak QFI for the trade-off width"},
    {"figure", FlagType::Text, "fig2, fig3, fig4, fig5 or figA1"},
    {"out", FlagType::Text, "output path"},
    {"format", FlagType::Text, "csv or json"},
};

json convert(const Flag& flag, const std::string& text) {
  if (flag.type == FlagType::Text) return text;
  errno = 0;
  char* end = nullptr;
  if (flag.type == FlagType::Integer) {
    const long v = std::strtol(text.c_str(), &end, 10);
    if (errno == 0 && end != text.c_str() && *end == '\0') return v;
  } else {
    const double v = std::strtod(text.c_str(), &end);
    if (errno == 0 && end != text.c_str() && *end == '\0') return v;
  }
  throw UsageError(std::string("--") + flag.key + ": cannot parse '" + text + "'");
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = coopmetro::cli;

  CLI::App app{"Quantum Fisher information of cooperatively controlled noisy spins"};
  app.set_version_flag("--version", "coopmetro 1.0.0");

  std::string command;
  std::string config_path;
  bool print_config = false;
  std::map<std::string, std::string> values;

  app.add_option("command", command, "run | sweep | region | maximize | tradeoff | figure");
  app.add_option("--config", config_path, "JSON config file; flags override its values");
  app.add_flag("--print-config", print_config, "print the effective config as JSON and exit");
  for (const Flag& flag : kFlags) {
    app.add_option(std::string("--") + flag.key, values[flag.key], flag.help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    json overrides = json::object();
    if (!command.empty()) overrides["command"] = command;
    for (const Flag& flag : kFlags) {
      if (app.count(std::string("--") + flag.key) > 0) {
        overrides[flag.key] = convert(flag, values[flag.key]);
      }
    }
    const json file = config_path.empty() ? json() : cli::load_config_file(config_path);
    const cli::RunConfig config = cli::parse_config(file, overrides);
    if (print_config) {
      std::cout << cli::to_json(config).dump(2) << '\n';
      return cli::kExitOk;
    }
    const unsigned threads = cli::threads_from_env(std::getenv("COOPMETRO_THREADS"));
    return cli::execute(config, threads, std::cout, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitFailure;
  }
}
