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

#include "coopmetro/coopmetro.h"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "coopmetro/error.hpp"
#include "coopmetro/figures.hpp"
#include "coopmetro/qfi.hpp"
#include "coopmetro/scenarios.hpp"
#include "coopmetro/sweep.hpp"

struct cm_scenario {
  coopmetro::ScenarioSpec spec;
};

struct cm_sweep_result {
  std::vector<coopmetro::SweepPoint> points;
};

namespace {

using namespace coopmetro;

thread_local std::string g_last_error;

cm_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return CM_ERR_INVALID_ARGUMENT;
    case ErrorCode::InvalidOperator: return CM_ERR_INVALID_MODEL;
    case ErrorCode::InvalidModel: return CM_ERR_INVALID_MODEL;
    case ErrorCode::InvalidScenario: return CM_ERR_INVALID_SCENARIO;
    case ErrorCode::Dimension: return CM_ERR_DIMENSION;
    case ErrorCode::NumericalFailure: return CM_ERR_NUMERICAL;
    case ErrorCode::OutOfRegime: return CM_ERR_OUT_OF_REGIME;
    case ErrorCode::Degenerate: return CM_ERR_DEGENERATE;
    case ErrorCode::Io: return CM_ERR_IO;
  }
  return CM_ERR_INTERNAL;
}

cm_status set_error(cm_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes at the C boundary.
template <class F>
cm_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return CM_OK;
  } catch (const Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(CM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(CM_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(CM_ERR_INTERNAL, "unknown exception");
  }
}

cm_status null_argument(const char* name) {
  return set_error(CM_ERR_INVALID_ARGUMENT, std::string("null argument: ") + name);
}

ScenarioKind to_kind(cm_kind kind) {
  switch (kind) {
    case CM_KIND_STD_SPONT: return ScenarioKind::StdSpont;
    case CM_KIND_COOP_SPONT: return ScenarioKind::CoopSpont;
    case CM_KIND_STD_DEPH: return ScenarioKind::StdDeph;
    case CM_KIND_COOP_DEPH: return ScenarioKind::CoopDeph;
    case CM_KIND_COOP_THERMAL: return ScenarioKind::CoopThermal;
    case CM_KIND_TWO_SPIN_COOP: return ScenarioKind::TwoSpinCoop;
    case CM_KIND_UNITARY_BASELINE: return ScenarioKind::UnitaryBaseline;
  }
  fail(ErrorCode::InvalidArgument, "unknown scenario kind " + std::to_string(static_cast<int>(kind)));
}

cm_kind from_kind(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::StdSpont: return CM_KIND_STD_SPONT;
    case ScenarioKind::CoopSpont: return CM_KIND_COOP_SPONT;
    case ScenarioKind::StdDeph: return CM_KIND_STD_DEPH;
    case ScenarioKind::CoopDeph: return CM_KIND_COOP_DEPH;
    case ScenarioKind::CoopThermal: return CM_KIND_COOP_THERMAL;
    case ScenarioKind::TwoSpinCoop: return CM_KIND_TWO_SPIN_COOP;
    case ScenarioKind::UnitaryBaseline: return CM_KIND_UNITARY_BASELINE;
  }
  return CM_KIND_UNITARY_BASELINE;
}

SweepAxis to_axis(cm_axis axis) {
  switch (axis) {
    case CM_AXIS_BZ: return SweepAxis::Bz;
    case CM_AXIS_BX: return SweepAxis::Bx;
    case CM_AXIS_T: return SweepAxis::T;
  }
  fail(ErrorCode::InvalidArgument, "unknown axis " + std::to_string(static_cast<int>(axis)));
}

Objective to_objective(cm_objective objective) {
  switch (objective) {
    case CM_OBJECTIVE_DYNAMICS: return Objective::Dynamics;
    case CM_OBJECTIVE_GROUND_SINGLE: return Objective::GroundSingle;
    case CM_OBJECTIVE_GROUND_EXACT: return Objective::GroundExact;
    case CM_OBJECTIVE_GROUND_EFFECTIVE: return Objective::GroundEffective;
  }
  fail(ErrorCode::InvalidArgument,
       "unknown objective " + std::to_string(static_cast<int>(objective)));
}

FigureId to_figure(cm_figure figure) {
  switch (figure) {
    case CM_FIGURE_2: return FigureId::Fig2;
    case CM_FIGURE_3: return FigureId::Fig3;
    case CM_FIGURE_4: return FigureId::Fig4;
    case CM_FIGURE_5: return FigureId::Fig5;
    case CM_FIGURE_A1: return FigureId::FigA1;
  }
  fail(ErrorCode::InvalidArgument, "unknown figure " + std::to_string(static_cast<int>(figure)));
}

cm_qfi_method from_method(QfiMethod method) {
  switch (method) {
    case QfiMethod::Pure: return CM_QFI_PURE;
    case QfiMethod::QubitClosedForm: return CM_QFI_QUBIT_CLOSED_FORM;
    case QfiMethod::SldSpectral: return CM_QFI_SLD_SPECTRAL;
  }
  return CM_QFI_SLD_SPECTRAL;
}

cm_qfi_result from_result(const QfiResult& r) {
  cm_qfi_result out{};
  out.value = r.value;
  out.method = from_method(r.method);
  out.has_fd_step = r.fd_step.has_value() ? 1 : 0;
  out.fd_step = r.fd_step.value_or(0.0);
  return out;
}

ScenarioSpec to_spec(const cm_scenario_params& p) {
  ScenarioSpec s;
  s.kind = to_kind(p.kind);
  s.b_z = p.b_z;
  s.b_x = p.b_x;
  s.gamma = p.gamma;
  s.eta = p.eta;
  s.dipole = p.dipole;
  s.t_e = p.t_e;
  s.n_spins = p.n_spins;
  return s;
}

template <class Enum, std::size_t N>
cm_status parse_name(const char* name, Enum* out, const Enum (&all)[N],
                     const char* (*namer)(Enum), const char* what) {
  if (name == nullptr) return null_argument("name");
  if (out == nullptr) return null_argument("out");
  for (Enum e : all) {
    if (std::string(namer(e)) == name) {
      *out = e;
      g_last_error.clear();
      return CM_OK;
    }
  }
  return set_error(CM_ERR_INVALID_ARGUMENT, std::string("unknown ") + what + " '" + name + "'");
}

constexpr cm_kind kAllKinds[] = {CM_KIND_STD_SPONT,    CM_KIND_COOP_SPONT,    CM_KIND_STD_DEPH,
                                 CM_KIND_COOP_DEPH,    CM_KIND_COOP_THERMAL,  CM_KIND_TWO_SPIN_COOP,
                                 CM_KIND_UNITARY_BASELINE};
constexpr cm_axis kAllAxes[] = {CM_AXIS_BZ, CM_AXIS_BX, CM_AXIS_T};
constexpr cm_objective kAllObjectives[] = {CM_OBJECTIVE_DYNAMICS, CM_OBJECTIVE_GROUND_SINGLE,
                                           CM_OBJECTIVE_GROUND_EXACT,
                                           CM_OBJECTIVE_GROUND_EFFECTIVE};
constexpr cm_figure kAllFigures[] = {CM_FIGURE_2, CM_FIGURE_3, CM_FIGURE_4, CM_FIGURE_5,
                                     CM_FIGURE_A1};

}  // namespace

extern "C" {

const char* cm_version(void) { return "1.0.0"; }

const char* cm_status_name(cm_status status) {
  switch (status) {
    case CM_OK: return "ok";
    case CM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CM_ERR_INVALID_SCENARIO: return "invalid scenario";
    case CM_ERR_INVALID_MODEL: return "invalid model";
    case CM_ERR_DIMENSION: return "dimension mismatch";
    case CM_ERR_NUMERICAL: return "numerical failure";
    case CM_ERR_OUT_OF_REGIME: return "out of regime";
    case CM_ERR_DEGENERATE: return "degenerate spectrum";
    case CM_ERR_IO: return "i/o error";
    case CM_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case CM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cm_last_error(void) { return g_last_error.c_str(); }

const char* cm_kind_name(cm_kind kind) {
  try {
    return to_string(to_kind(kind));
  } catch (...) {
    return "unknown";
  }
}

cm_status cm_kind_parse(const char* name, cm_kind* out) {
  return parse_name(name, out, kAllKinds, &cm_kind_name, "kind");
}

const char* cm_axis_name(cm_axis axis) {
  try {
    return to_string(to_axis(axis));
  } catch (...) {
    return "unknown";
  }
}

cm_status cm_axis_parse(const char* name, cm_axis* out) {
  return parse_name(name, out, kAllAxes, &cm_axis_name, "axis");
}

const char* cm_objective_name(cm_objective objective) {
  try {
    return to_string(to_objective(objective));
  } catch (...) {
    return "unknown";
  }
}

cm_status cm_objective_parse(const char* name, cm_objective* out) {
  return parse_name(name, out, kAllObjectives, &cm_objective_name, "objective");
}

const char* cm_qfi_method_name(cm_qfi_method method) {
  switch (method) {
    case CM_QFI_PURE: return to_string(QfiMethod::Pure);
    case CM_QFI_QUBIT_CLOSED_FORM: return to_string(QfiMethod::QubitClosedForm);
    case CM_QFI_SLD_SPECTRAL: return to_string(QfiMethod::SldSpectral);
  }
  return "unknown";
}

const char* cm_figure_name(cm_figure figure) {
  try {
    return to_string(to_figure(figure));
  } catch (...) {
    return "unknown";
  }
}

cm_status cm_figure_parse(const char* name, cm_figure* out) {
  return parse_name(name, out, kAllFigures, &cm_figure_name, "figure");
}

void cm_scenario_params_init(cm_scenario_params* params, cm_kind kind) {
  if (params == nullptr) return;
  *params = cm_scenario_params{};
  params->kind = kind;
  params->n_spins = 1;
}

cm_status cm_scenario_create(const cm_scenario_params* params, cm_scenario** out) {
  if (params == nullptr) return null_argument("params");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    ScenarioSpec spec = to_spec(*params);
    validate(spec);
    *out = new cm_scenario{spec};
  });
}

void cm_scenario_destroy(cm_scenario* scenario) { delete scenario; }

cm_status cm_scenario_params_get(const cm_scenario* scenario, cm_scenario_params* out) {
  if (scenario == nullptr) return null_argument("scenario");
  if (out == nullptr) return null_argument("out");
  const ScenarioSpec& s = scenario->spec;
  out->kind = from_kind(s.kind);
  out->b_z = s.b_z;
  out->b_x = s.b_x;
  out->gamma = s.gamma;
  out->eta = s.eta;
  out->dipole = s.dipole;
  out->t_e = s.t_e;
  out->n_spins = s.n_spins;
  g_last_error.clear();
  return CM_OK;
}

cm_status cm_scenario_qfi(const cm_scenario* scenario, double t, cm_qfi_result* out) {
  if (scenario == nullptr) return null_argument("scenario");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = from_result(qfi_at(scenario->spec, t)); });
}

cm_status cm_scenario_state(const cm_scenario* scenario, double t, double* re, double* im,
                            size_t capacity, size_t* dim) {
  if (scenario == nullptr) return null_argument("scenario");
  if (re == nullptr || im == nullptr) return null_argument("re/im");
  if (dim == nullptr) return null_argument("dim");
  bool too_small = false;
  const cm_status status = guarded([&] {
    const DensityMatrix rho = ScenarioPipeline(scenario->spec).state(t);
    const auto d = static_cast<size_t>(rho.dim());
    *dim = d;
    if (capacity < d * d) {
      too_small = true;
      fail(ErrorCode::InvalidArgument, "buffer holds " + std::to_string(capacity) +
                                           " entries, need " + std::to_string(d * d));
    }
    for (size_t i = 0; i < d; ++i) {
      for (size_t j = 0; j < d; ++j) {
        const Complex v = rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        re[i * d + j] = v.real();
        im[i * d + j] = v.imag();
      }
    }
  });
  return too_small ? CM_ERR_BUFFER_TOO_SMALL : status;
}

cm_status cm_sweep_run(const cm_scenario* scenario, cm_objective objective, cm_axis axis,
                       double from, double to, int points, double t, unsigned threads,
                       cm_sweep_result** out) {
  if (scenario == nullptr) return null_argument("scenario");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const SweepGrid grid{to_axis(axis), from, to, points};
    grid.validate();
    const Objective obj = to_objective(objective);
    std::vector<SweepPoint> pts;
    if (obj == Objective::Dynamics) {
      pts = sweep(scenario->spec, t, grid, threads);
    } else {
      pts = sweep(make_objective(scenario->spec, obj, grid.axis, t), grid, threads);
    }
    *out = new cm_sweep_result{std::move(pts)};
  });
}

size_t cm_sweep_result_size(const cm_sweep_result* result) {
  return result == nullptr ? 0 : result->points.size();
}

size_t cm_sweep_result_failures(const cm_sweep_result* result) {
  if (result == nullptr) return 0;
  size_t n = 0;
  for (const auto& p : result->points) n += p.result ? 0 : 1;
  return n;
}

cm_status cm_sweep_result_point(const cm_sweep_result* result, size_t index, double* x,
                                cm_qfi_result* value, int* ok) {
  if (result == nullptr) return null_argument("result");
  if (index >= result->points.size()) {
    return set_error(CM_ERR_INVALID_ARGUMENT, "sweep point index out of range");
  }
  const SweepPoint& p = result->points[index];
  if (x != nullptr) *x = p.x;
  if (ok != nullptr) *ok = p.result ? 1 : 0;
  if (value != nullptr) {
    if (p.result) {
      *value = from_result(*p.result);
    } else {
      *value = cm_qfi_result{};
      value->value = std::numeric_limits<double>::quiet_NaN();
    }
  }
  g_last_error.clear();
  return CM_OK;
}

const char* cm_sweep_result_diagnostic(const cm_sweep_result* result, size_t index) {
  if (result == nullptr || index >= result->points.size()) return nullptr;
  return result->points[index].diagnostic.c_str();
}

void cm_sweep_result_destroy(cm_sweep_result* result) { delete result; }

cm_status cm_find_region(const cm_scenario* scenario, cm_objective objective, double t,
                         double threshold, double lower, double upper, double tolerance,
                         cm_region* out) {
  if (scenario == nullptr) return null_argument("scenario");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const ScalarObjective f = make_objective(scenario->spec, to_objective(objective), SweepAxis::Bz, t);
    RegionOptions options;
    if (tolerance > 0.0) options.tolerance = tolerance;
    const RegionResult r =
        find_region([&](double x) { return f(x).value; }, threshold, lower, upper, options);
    out->lower = r.lower;
    out->upper = r.upper;
    out->threshold = r.threshold;
    out->resolved = r.resolved ? 1 : 0;
  });
}

cm_status cm_maximize(const cm_scenario* scenario, cm_objective objective, double t,
                      const cm_axis* free_axes, const double* lower, const double* upper,
                      int n_free, double* argmax, double* value) {
  if (scenario == nullptr) return null_argument("scenario");
  if (free_axes == nullptr || lower == nullptr || upper == nullptr) return null_argument("axes/bounds");
  if (argmax == nullptr || value == nullptr) return null_argument("argmax/value");
  if (n_free < 1 || n_free > 2) {
    return set_error(CM_ERR_INVALID_ARGUMENT, "maximize: n_free must be 1 or 2");
  }
  return guarded([&] {
    std::vector<SweepAxis> axes;
    std::vector<Bounds> bounds;
    for (int i = 0; i < n_free; ++i) {
      axes.push_back(to_axis(free_axes[i]));
      bounds.push_back({lower[i], upper[i]});
    }
    const MaximizeResult r = maximize_qfi(scenario->spec, to_objective(objective), t, axes, bounds);
    for (int i = 0; i < n_free; ++i) argmax[i] = r.argmax[static_cast<std::size_t>(i)];
    *value = r.value;
  });
}

cm_status cm_tradeoff_width(double f_max, double t, double* width) {
  if (width == nullptr) return null_argument("width");
  return guarded([&] { *width = tradeoff_width(f_max, t); });
}

cm_status cm_heisenberg_limit(int n_spins, double t, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = heisenberg_limit(n_spins, t); });
}

cm_status cm_standard_limit(cm_kind kind, double rate, double t, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = standard_limit_formula(to_kind(kind), rate, t); });
}

cm_status cm_cramer_rao_bound(double f_q, int m, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = cramer_rao_bound(f_q, m); });
}

cm_status cm_effective_ground_qfi(double b_z, double b_x, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = effective_two_spin_ground_qfi(b_z, b_x); });
}

cm_status cm_figure_write_csv(cm_figure figure, const char* path, unsigned threads) {
  if (path == nullptr) return null_argument("path");
  return guarded([&] { write_csv_file(path, make_figure(to_figure(figure), threads)); });
}

}  // extern "C"
