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

#include "commands.hpp"

#include <cerrno>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <locale>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "coopmetro/coopmetro.h"

namespace coopmetro::cli {
namespace {

using nlohmann::json;

// Library failure that is not a usage problem.
class ApiError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(cm_status status, const char* what) {
  if (status == CM_OK) return;
  throw ApiError(std::string(what) + ": " + cm_status_name(status) + ": " + cm_last_error());
}

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(12);
  os << x;
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

json json_number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

struct ScenarioDeleter {
  void operator()(cm_scenario* s) const { cm_scenario_destroy(s); }
};
struct SweepDeleter {
  void operator()(cm_sweep_result* r) const { cm_sweep_result_destroy(r); }
};
using ScenarioHandle = std::unique_ptr<cm_scenario, ScenarioDeleter>;
using SweepHandle = std::unique_ptr<cm_sweep_result, SweepDeleter>;

cm_objective objective_of(const RunConfig& c) {
  cm_objective o = CM_OBJECTIVE_DYNAMICS;
  if (c.objective) cm_objective_parse(c.objective->c_str(), &o);
  return o;
}

cm_axis axis_of(const RunConfig& c, cm_axis fallback) {
  cm_axis a = fallback;
  if (c.axis) cm_axis_parse(c.axis->c_str(), &a);
  return a;
}

// Fields of a swept axis are absent from the config; the grid start stands in
// (the grid end when the start is zero, so cooperative kinds validate).
ScenarioHandle make_scenario(const RunConfig& c, std::optional<cm_axis> swept) {
  cm_scenario_params p{};
  const bool ground = objective_of(c) != CM_OBJECTIVE_DYNAMICS;
  cm_kind kind = CM_KIND_UNITARY_BASELINE;
  if (!ground) cm_kind_parse(c.kind->c_str(), &kind);
  cm_scenario_params_init(&p, kind);
  const double placeholder = c.from && *c.from != 0.0 ? *c.from : c.to.value_or(1.0);
  p.b_z = c.b_z.value_or(swept == CM_AXIS_BZ ? placeholder : 0.0);
  p.b_x = c.b_x.value_or(swept == CM_AXIS_BX ? placeholder : 0.0);
  if (!ground) {
    p.gamma = c.gamma.value_or(0.0);
    p.eta = c.eta.value_or(0.0);
    p.dipole = c.dipole.value_or(0.0);
    p.t_e = c.t_e.value_or(0.0);
    p.n_spins = c.n_spins.value_or(1);
  }
  cm_scenario* raw = nullptr;
  const cm_status status = cm_scenario_create(&p, &raw);
  if (status == CM_ERR_INVALID_SCENARIO) throw UsageError(cm_last_error());
  check(status, "scenario");
  return ScenarioHandle(raw);
}

int spin_count(const RunConfig& c) {
  switch (objective_of(c)) {
    case CM_OBJECTIVE_GROUND_SINGLE: return 1;
    case CM_OBJECTIVE_GROUND_EXACT:
    case CM_OBJECTIVE_GROUND_EFFECTIVE: return 2;
    case CM_OBJECTIVE_DYNAMICS: break;
  }
  cm_kind kind{};
  cm_kind_parse(c.kind->c_str(), &kind);
  if (kind == CM_KIND_TWO_SPIN_COOP) return 2;
  if (kind == CM_KIND_UNITARY_BASELINE) return c.n_spins.value_or(1);
  return 1;
}

double heisenberg(int n, double t) {
  double h = 0.0;
  check(cm_heisenberg_limit(n, t, &h), "heisenberg limit");
  return h;
}

int run(const RunConfig& c, std::ostream& out) {
  ScenarioHandle scn = make_scenario(c, std::nullopt);
  cm_qfi_result r{};
  check(cm_scenario_qfi(scn.get(), *c.t, &r), "qfi");
  const int m = c.repetitions();
  const std::optional<double> bound = report_bound(r.value, m);
  const double h = heisenberg(spin_count(c), *c.t);

  if (c.format == Format::Json) {
    json j = {{"kind", *c.kind},
              {"t", *c.t},
              {"f_q", r.value},
              {"method", cm_qfi_method_name(r.method)},
              {"fd_step", r.has_fd_step ? json(r.fd_step) : json(nullptr)},
              {"f_heisenberg", h},
              {"m", m},
              {"bound", bound ? json(*bound) : json(nullptr)}};
    out << j.dump(2) << '\n';
  } else {
    out << "kind,t,f_q,method,fd_step,f_heisenberg,m,bound\n";
    out << *c.kind << ',' << num(*c.t) << ',' << num(r.value) << ','
        << cm_qfi_method_name(r.method) << ',' << (r.has_fd_step ? num(r.fd_step) : "") << ','
        << num(h) << ',' << m << ',' << (bound ? num(*bound) : "") << '\n';
  }
  return kExitOk;
}

int sweep(const RunConfig& c, unsigned threads, std::ostream& out, std::ostream& err) {
  const cm_axis axis = axis_of(c, CM_AXIS_T);
  ScenarioHandle scn = make_scenario(c, axis);
  cm_sweep_result* raw = nullptr;
  check(cm_sweep_run(scn.get(), objective_of(c), axis, *c.from, *c.to, *c.points, c.t.value_or(0.0),
                     threads, &raw),
        "sweep");
  SweepHandle result(raw);

  const size_t n = cm_sweep_result_size(result.get());
  const char* axis_name = cm_axis_name(axis);
  json points = json::array();
  if (c.format == Format::Csv) out << axis_name << ",f_q,method,diagnostic\n";
  for (size_t i = 0; i < n; ++i) {
    double x = 0.0;
    cm_qfi_result r{};
    int ok = 0;
    check(cm_sweep_result_point(result.get(), i, &x, &r, &ok), "sweep point");
    const std::string diag = cm_sweep_result_diagnostic(result.get(), i);
    if (!ok) err << "point " << axis_name << '=' << num(x) << ": " << diag << '\n';
    if (c.format == Format::Json) {
      points.push_back({{axis_name, x},
                        {"f_q", ok ? json(r.value) : json(nullptr)},
                        {"method", ok ? json(cm_qfi_method_name(r.method)) : json(nullptr)},
                        {"diagnostic", diag}});
    } else {
      out << num(x) << ',' << (ok ? num(r.value) : "") << ','
          << (ok ? cm_qfi_method_name(r.method) : "") << ',' << csv_field(diag) << '\n';
    }
  }
  if (c.format == Format::Json) {
    out << json{{"axis", axis_name}, {"points", points}}.dump(2) << '\n';
  }
  return cm_sweep_result_failures(result.get()) == 0 ? kExitOk : kExitPointFailures;
}

int region(const RunConfig& c, std::ostream& out) {
  ScenarioHandle scn = make_scenario(c, CM_AXIS_BZ);
  const double t = c.t.value_or(1.0);
  const double threshold = c.threshold ? *c.threshold : heisenberg(spin_count(c), t);
  cm_region r{};
  check(cm_find_region(scn.get(), objective_of(c), t, threshold, *c.from, *c.to, 0.0, &r),
        "region");
  const double width = r.resolved ? r.upper - r.lower : 0.0;
  if (c.format == Format::Json) {
    json j = {{"threshold", r.threshold}, {"resolved", r.resolved != 0}};
    j["lower"] = r.resolved ? json(r.lower) : json(nullptr);
    j["upper"] = r.resolved ? json(r.upper) : json(nullptr);
    j["width"] = width;
    out << j.dump(2) << '\n';
  } else {
    out << "threshold,resolved,lower,upper,width\n";
    out << num(r.threshold) << ',' << (r.resolved ? "true" : "false") << ','
        << (r.resolved ? num(r.lower) : "") << ',' << (r.resolved ? num(r.upper) : "") << ','
        << num(width) << '\n';
  }
  return kExitOk;
}

int maximize(const RunConfig& c, std::ostream& out) {
  const cm_axis axis = axis_of(c, CM_AXIS_BZ);
  ScenarioHandle scn = make_scenario(c, axis);
  const double lo = *c.from;
  const double hi = *c.to;
  double argmax = 0.0;
  double value = 0.0;
  check(cm_maximize(scn.get(), objective_of(c), c.t.value_or(0.0), &axis, &lo, &hi, 1, &argmax,
                    &value),
        "maximize");
  const char* axis_name = cm_axis_name(axis);
  if (c.format == Format::Json) {
    out << json{{"axis", axis_name}, {"argmax", argmax}, {"f_q", value}}.dump(2) << '\n';
  } else {
    out << "axis,argmax,f_q\n" << axis_name << ',' << num(argmax) << ',' << num(value) << '\n';
  }
  return kExitOk;
}

int tradeoff(const RunConfig& c, std::ostream& out) {
  const double f_max = c.f_max ? *c.f_max : 1.0 / (2.0 * *c.b_x * *c.b_x);
  double width = 0.0;
  check(cm_tradeoff_width(f_max, *c.t, &width), "tradeoff");
  if (c.format == Format::Json) {
    out << json{{"f_max", f_max}, {"t", *c.t}, {"width", json_number(width)}}.dump(2) << '\n';
  } else {
    out << "f_max,t,width\n" << num(f_max) << ',' << num(*c.t) << ',' << num(width) << '\n';
  }
  return kExitOk;
}

int figure(const RunConfig& c, unsigned threads) {
  cm_figure f{};
  cm_figure_parse(c.figure->c_str(), &f);
  check(cm_figure_write_csv(f, c.out->c_str(), threads), "figure");
  return kExitOk;
}

int dispatch(const RunConfig& c, unsigned threads, std::ostream& out, std::ostream& err) {
  switch (c.command) {
    case Command::Run: return run(c, out);
    case Command::Sweep: return sweep(c, threads, out, err);
    case Command::Region: return region(c, out);
    case Command::Maximize: return maximize(c, out);
    case Command::Tradeoff: return tradeoff(c, out);
    case Command::Figure: return figure(c, threads);
  }
  return kExitFailure;
}

}  // namespace

unsigned threads_from_env(const char* value) {
  if (value == nullptr || *value == '\0') return 0;
  errno = 0;
  char* end = nullptr;
  const long n = std::strtol(value, &end, 10);
  if (errno != 0 || *end != '\0' || n < 1 || n > INT_MAX) {
    throw UsageError(std::string("COOPMETRO_THREADS must be a positive integer, got '") + value +
                     "'");
  }
  return static_cast<unsigned>(n);
}

std::optional<double> report_bound(double f_q, int m) {
  double bound = 0.0;
  if (cm_cramer_rao_bound(f_q, m, &bound) != CM_OK) return std::nullopt;
  return bound;
}

int execute(const RunConfig& config, unsigned threads, std::ostream& out, std::ostream& err) {
  try {
    if (config.out && config.command != Command::Figure) {
      std::ofstream file(*config.out);
      if (!file) {
        err << "error: cannot open " << *config.out << " for writing\n";
        return kExitFailure;
      }
      const int code = dispatch(config, threads, file, err);
      file.flush();
      if (!file) {
        err << "error: write to " << *config.out << " failed\n";
        return kExitFailure;
      }
      return code;
    }
    return dispatch(config, threads, out, err);
  } catch (const ApiError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace coopmetro::cli
