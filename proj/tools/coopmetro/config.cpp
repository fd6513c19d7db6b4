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

#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "coopmetro/coopmetro.h"

namespace coopmetro::cli {
namespace {

using nlohmann::json;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "command", "kind",  "b_z",  "b_x",    "gamma",     "eta",       "dipole",
      "t_e",     "n_spins", "t",  "m",      "axis",      "from",      "to",
      "points",  "objective", "threshold", "f_max", "figure", "out", "format"};
  return keys;
}

[[noreturn]] void bad_key(const std::string& key, const std::string& why) {
  throw UsageError("config key \"" + key + "\": " + why);
}

double get_double(const json& v, const std::string& key) {
  if (!v.is_number()) bad_key(key, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) bad_key(key, "must be finite");
  return x;
}

int get_int(const json& v, const std::string& key) {
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_number_float()) {
    const double x = v.get<double>();
    if (std::isfinite(x) && x == std::floor(x) && std::abs(x) < 1e9) return static_cast<int>(x);
  }
  bad_key(key, "expected an integer");
}

std::string get_string(const json& v, const std::string& key) {
  if (!v.is_string()) bad_key(key, "expected a string");
  return v.get<std::string>();
}

Command parse_command(const std::string& s) {
  for (Command c : {Command::Run, Command::Sweep, Command::Region, Command::Maximize,
                    Command::Tradeoff, Command::Figure}) {
    if (s == to_string(c)) return c;
  }
  bad_key("command", "unknown command '" + s + "'");
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  bad_key("format", "expected csv or json, got '" + s + "'");
}

void check_object(const json& j, const char* what) {
  if (j.is_null()) return;
  if (!j.is_object()) throw UsageError(std::string(what) + " must be a JSON object");
  for (const auto& item : j.items()) {
    if (known_keys().count(item.key()) == 0) bad_key(item.key(), "unknown key");
  }
}

template <class T>
void require(const std::optional<T>& field, const char* key, Command command) {
  if (!field) {
    throw UsageError(std::string("missing \"") + key + "\" required by " + to_string(command));
  }
}

bool uses(cm_kind kind, const char* key) {
  const std::string k = key;
  switch (kind) {
    case CM_KIND_STD_SPONT: return k == "gamma";
    case CM_KIND_COOP_SPONT: return k == "b_x" || k == "gamma";
    case CM_KIND_STD_DEPH: return k == "eta";
    case CM_KIND_COOP_DEPH: return k == "b_x" || k == "eta";
    case CM_KIND_COOP_THERMAL: return k == "b_x" || k == "dipole" || k == "t_e";
    case CM_KIND_TWO_SPIN_COOP: return k == "b_x" || k == "dipole";
    case CM_KIND_UNITARY_BASELINE: return false;
  }
  return false;
}

cm_objective objective_of(const RunConfig& c) {
  cm_objective o = CM_OBJECTIVE_DYNAMICS;
  if (c.objective && cm_objective_parse(c.objective->c_str(), &o) != CM_OK) {
    bad_key("objective", "unknown objective '" + *c.objective + "'");
  }
  return o;
}

cm_axis axis_of(const RunConfig& c) {
  cm_axis a = CM_AXIS_T;
  if (c.axis && cm_axis_parse(c.axis->c_str(), &a) != CM_OK) {
    bad_key("axis", "unknown axis '" + *c.axis + "'");
  }
  return a;
}

void validate_scenario(const RunConfig& c, std::optional<cm_axis> swept) {
  require(c.kind, "kind", c.command);
  cm_kind kind{};
  if (cm_kind_parse(c.kind->c_str(), &kind) != CM_OK) bad_key("kind", "unknown kind '" + *c.kind + "'");
  const bool bz_swept = swept && *swept == CM_AXIS_BZ;
  const bool bx_swept = swept && *swept == CM_AXIS_BX;
  if (!bz_swept) require(c.b_z, "b_z", c.command);
  if (!bx_swept && uses(kind, "b_x")) require(c.b_x, "b_x", c.command);
  for (const char* key : {"gamma", "eta", "dipole", "t_e"}) {
    if (!uses(kind, key)) continue;
    const std::optional<double>& v = std::string(key) == "gamma" ? c.gamma
                                     : std::string(key) == "eta" ? c.eta
                                     : std::string(key) == "dipole" ? c.dipole
                                                                    : c.t_e;
    require(v, key, c.command);
  }
}

void validate_ground(const RunConfig& c, std::optional<cm_axis> swept) {
  const bool bz_swept = swept && *swept == CM_AXIS_BZ;
  const bool bx_swept = swept && *swept == CM_AXIS_BX;
  if (!bz_swept) require(c.b_z, "b_z", c.command);
  if (!bx_swept) require(c.b_x, "b_x", c.command);
  if (c.kind) {
    cm_kind kind{};
    if (cm_kind_parse(c.kind->c_str(), &kind) != CM_OK) {
      bad_key("kind", "unknown kind '" + *c.kind + "'");
    }
  }
}

void validate_grid(const RunConfig& c) {
  require(c.from, "from", c.command);
  require(c.to, "to", c.command);
  if (!(*c.from < *c.to)) bad_key("to", "must be greater than from");
}

}  // namespace

const char* to_string(Command command) noexcept {
  switch (command) {
    case Command::Run: return "run";
    case Command::Sweep: return "sweep";
    case Command::Region: return "region";
    case Command::Maximize: return "maximize";
    case Command::Tradeoff: return "tradeoff";
    case Command::Figure: return "figure";
  }
  return "unknown";
}

const char* to_string(Format format) noexcept { return format == Format::Json ? "json" : "csv"; }

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("malformed config file " + path + ": " + e.what());
  }
}

RunConfig parse_config(const json& file, const json& overrides) {
  check_object(file, "config file");
  check_object(overrides, "command-line overrides");
  json merged = file.is_null() ? json::object() : file;
  if (!overrides.is_null()) {
    for (const auto& item : overrides.items()) merged[item.key()] = item.value();
  }

  RunConfig c;
  if (!merged.contains("command")) throw UsageError("missing \"command\"");
  c.command = parse_command(get_string(merged["command"], "command"));

  for (const auto& item : merged.items()) {
    const std::string& key = item.key();
    const json& v = item.value();
    if (key == "command") continue;
    if (key == "kind") c.kind = get_string(v, key);
    else if (key == "b_z") c.b_z = get_double(v, key);
    else if (key == "b_x") c.b_x = get_double(v, key);
    else if (key == "gamma") c.gamma = get_double(v, key);
    else if (key == "eta") c.eta = get_double(v, key);
    else if (key == "dipole") c.dipole = get_double(v, key);
    else if (key == "t_e") c.t_e = get_double(v, key);
    else if (key == "n_spins") c.n_spins = get_int(v, key);
    else if (key == "t") c.t = get_double(v, key);
    else if (key == "m") c.m = get_int(v, key);
    else if (key == "axis") c.axis = get_string(v, key);
    else if (key == "from") c.from = get_double(v, key);
    else if (key == "to") c.to = get_double(v, key);
    else if (key == "points") c.points = get_int(v, key);
    else if (key == "objective") c.objective = get_string(v, key);
    else if (key == "threshold") c.threshold = get_double(v, key);
    else if (key == "f_max") c.f_max = get_double(v, key);
    else if (key == "figure") c.figure = get_string(v, key);
    else if (key == "out") c.out = get_string(v, key);
    else if (key == "format") c.format = parse_format(get_string(v, key));
  }
  validate(c);
  return c;
}

json to_json(const RunConfig& c) {
  json j = json::object();
  j["command"] = to_string(c.command);
  auto put = [&](const char* key, const auto& field) {
    if (field) j[key] = *field;
  };
  put("kind", c.kind);
  put("b_z", c.b_z);
  put("b_x", c.b_x);
  put("gamma", c.gamma);
  put("eta", c.eta);
  put("dipole", c.dipole);
  put("t_e", c.t_e);
  put("n_spins", c.n_spins);
  put("t", c.t);
  put("m", c.m);
  put("axis", c.axis);
  put("from", c.from);
  put("to", c.to);
  put("points", c.points);
  put("objective", c.objective);
  put("threshold", c.threshold);
  put("f_max", c.f_max);
  put("figure", c.figure);
  put("out", c.out);
  j["format"] = to_string(c.format);
  return j;
}

void validate(const RunConfig& c) {
  if (c.m && *c.m < 1) bad_key("m", "must be >= 1");
  if (c.points && *c.points < 2) bad_key("points", "must be >= 2");
  if (c.t && *c.t < 0.0) bad_key("t", "must be >= 0");
  if (c.n_spins && *c.n_spins != 1 && *c.n_spins != 2) bad_key("n_spins", "must be 1 or 2");

  const cm_objective objective = objective_of(c);
  const cm_axis axis = axis_of(c);
  const bool dynamics = objective == CM_OBJECTIVE_DYNAMICS;

  switch (c.command) {
    case Command::Run:
      if (!dynamics) bad_key("objective", "run evaluates the dynamics objective only");
      validate_scenario(c, std::nullopt);
      require(c.t, "t", c.command);
      break;
    case Command::Sweep:
      require(c.axis, "axis", c.command);
      validate_grid(c);
      require(c.points, "points", c.command);
      if (dynamics) {
        validate_scenario(c, axis);
        if (axis != CM_AXIS_T) require(c.t, "t", c.command);
      } else {
        if (axis == CM_AXIS_T) bad_key("axis", "ground-state objectives do not depend on t");
        validate_ground(c, axis);
      }
      break;
    case Command::Region:
      if (c.axis && axis != CM_AXIS_BZ) bad_key("axis", "region is searched over b_z only");
      validate_grid(c);
      if (dynamics) {
        validate_scenario(c, CM_AXIS_BZ);
        require(c.t, "t", c.command);
      } else {
        validate_ground(c, CM_AXIS_BZ);
        if (!c.threshold) require(c.t, "t", c.command);
      }
      break;
    case Command::Maximize:
      require(c.axis, "axis", c.command);
      validate_grid(c);
      if (dynamics) {
        validate_scenario(c, axis);
        if (axis != CM_AXIS_T) require(c.t, "t", c.command);
      } else {
        if (axis == CM_AXIS_T) bad_key("axis", "ground-state objectives do not depend on t");
        validate_ground(c, axis);
      }
      break;
    case Command::Tradeoff:
      require(c.t, "t", c.command);
      if (!c.f_max) require(c.b_x, "b_x", c.command);
      break;
    case Command::Figure: {
      require(c.figure, "figure", c.command);
      require(c.out, "out", c.command);
      cm_figure f{};
      if (cm_figure_parse(c.figure->c_str(), &f) != CM_OK) {
        bad_key("figure", "unknown figure '" + *c.figure + "'");
      }
      if (c.format != Format::Csv) bad_key("format", "figures are written as csv");
      break;
    }
  }
}

}  // namespace coopmetro::cli
