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

/*
 * C interface to the coopmetro library.
 *
 * Every function returns a cm_status. On failure a human-readable message
 * is available from cm_last_error() on the calling thread until the next
 * call into the library from that thread. Handles are opaque; each *_create
 * or *_run has a matching *_destroy, and destroy functions accept NULL.
 *
 * Conventions: hbar = k_B = 1, sigma_z|0> = +|0>, matrices are exchanged in
 * row-major order as separate real and imaginary arrays.
 */
#ifndef COOPMETRO_COOPMETRO_H
#define COOPMETRO_COOPMETRO_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(COOPMETRO_BUILDING)
#    define CM_API __declspec(dllexport)
#  else
#    define CM_API __declspec(dllimport)
#  endif
#else
#  define CM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cm_status {
  CM_OK = 0,
  CM_ERR_INVALID_ARGUMENT = 1,
  CM_ERR_INVALID_SCENARIO = 2,
  CM_ERR_INVALID_MODEL = 3,
  CM_ERR_DIMENSION = 4,
  CM_ERR_NUMERICAL = 5,
  CM_ERR_OUT_OF_REGIME = 6,
  CM_ERR_DEGENERATE = 7,
  CM_ERR_IO = 8,
  CM_ERR_BUFFER_TOO_SMALL = 9,
  CM_ERR_INTERNAL = 10
} cm_status;

typedef enum cm_kind {
  CM_KIND_STD_SPONT = 0,
  CM_KIND_COOP_SPONT = 1,
  CM_KIND_STD_DEPH = 2,
  CM_KIND_COOP_DEPH = 3,
  CM_KIND_COOP_THERMAL = 4,
  CM_KIND_TWO_SPIN_COOP = 5,
  CM_KIND_UNITARY_BASELINE = 6
} cm_kind;

typedef enum cm_axis { CM_AXIS_BZ = 0, CM_AXIS_BX = 1, CM_AXIS_T = 2 } cm_axis;

typedef enum cm_objective {
  CM_OBJECTIVE_DYNAMICS = 0,
  CM_OBJECTIVE_GROUND_SINGLE = 1,
  CM_OBJECTIVE_GROUND_EXACT = 2,
  CM_OBJECTIVE_GROUND_EFFECTIVE = 3
} cm_objective;

typedef enum cm_qfi_method {
  CM_QFI_PURE = 0,
  CM_QFI_QUBIT_CLOSED_FORM = 1,
  CM_QFI_SLD_SPECTRAL = 2
} cm_qfi_method;

typedef enum cm_figure {
  CM_FIGURE_2 = 0,
  CM_FIGURE_3 = 1,
  CM_FIGURE_4 = 2,
  CM_FIGURE_5 = 3,
  CM_FIGURE_A1 = 4
} cm_figure;

typedef struct cm_scenario_params {
  cm_kind kind;
  double b_z;
  double b_x;
  double gamma;
  double eta;
  double dipole;
  double t_e;
  int n_spins;
} cm_scenario_params;

typedef struct cm_qfi_result {
  double value;
  cm_qfi_method method;
  int has_fd_step;
  double fd_step;
} cm_qfi_result;

typedef struct cm_region {
  double lower;
  double upper;
  double threshold;
  int resolved;
} cm_region;

typedef struct cm_scenario cm_scenario;
typedef struct cm_sweep_result cm_sweep_result;

CM_API const char* cm_version(void);
CM_API const char* cm_status_name(cm_status status);
CM_API const char* cm_last_error(void);

/* Name <-> enum helpers; parse functions return CM_ERR_INVALID_ARGUMENT on unknown names. */
CM_API const char* cm_kind_name(cm_kind kind);
CM_API cm_status cm_kind_parse(const char* name, cm_kind* out);
CM_API const char* cm_axis_name(cm_axis axis);
CM_API cm_status cm_axis_parse(const char* name, cm_axis* out);
CM_API const char* cm_objective_name(cm_objective objective);
CM_API cm_status cm_objective_parse(const char* name, cm_objective* out);
CM_API const char* cm_qfi_method_name(cm_qfi_method method);
CM_API const char* cm_figure_name(cm_figure figure);
CM_API cm_status cm_figure_parse(const char* name, cm_figure* out);

/* Zeroes all fields, sets kind and n_spins = 1. */
CM_API void cm_scenario_params_init(cm_scenario_params* params, cm_kind kind);

/* Validates the parameters used by params->kind. */
CM_API cm_status cm_scenario_create(const cm_scenario_params* params, cm_scenario** out);
CM_API void cm_scenario_destroy(cm_scenario* scenario);
CM_API cm_status cm_scenario_params_get(const cm_scenario* scenario, cm_scenario_params* out);

/* QFI with respect to B_z of the probe evolved for time t. */
CM_API cm_status cm_scenario_qfi(const cm_scenario* scenario, double t, cm_qfi_result* out);

/* Evolved density matrix; `capacity` is the length of re/im, *dim receives 2 or 4. */
CM_API cm_status cm_scenario_state(const cm_scenario* scenario, double t, double* re, double* im,
                                   size_t capacity, size_t* dim);

/* Inclusive linear grid over `axis`; `t` is the evolution time for non-time axes.
 * threads = 0 selects the hardware concurrency. Per-point failures are recorded,
 * not returned. */
CM_API cm_status cm_sweep_run(const cm_scenario* scenario, cm_objective objective, cm_axis axis,
                              double from, double to, int points, double t, unsigned threads,
                              cm_sweep_result** out);
CM_API size_t cm_sweep_result_size(const cm_sweep_result* result);
CM_API size_t cm_sweep_result_failures(const cm_sweep_result* result);
/* *ok is 1 when the point was computed; *value is NaN otherwise. */
CM_API cm_status cm_sweep_result_point(const cm_sweep_result* result, size_t index, double* x,
                                       cm_qfi_result* value, int* ok);
/* Empty string for successful points; NULL for an out-of-range index. */
CM_API const char* cm_sweep_result_diagnostic(const cm_sweep_result* result, size_t index);
CM_API void cm_sweep_result_destroy(cm_sweep_result* result);

/* Region in B_z around the best pre-scan point where the objective >= threshold.
 * tolerance <= 0 selects the default 1e-4. */
CM_API cm_status cm_find_region(const cm_scenario* scenario, cm_objective objective, double t,
                                double threshold, double lower, double upper, double tolerance,
                                cm_region* out);

/* Maximises over n_free (1 or 2) parameters; argmax must hold n_free values. */
CM_API cm_status cm_maximize(const cm_scenario* scenario, cm_objective objective, double t,
                             const cm_axis* free_axes, const double* lower, const double* upper,
                             int n_free, double* argmax, double* value);

CM_API cm_status cm_tradeoff_width(double f_max, double t, double* width);
CM_API cm_status cm_heisenberg_limit(int n_spins, double t, double* out);
CM_API cm_status cm_standard_limit(cm_kind kind, double rate, double t, double* out);
/* 1 / sqrt(m f_q) */
CM_API cm_status cm_cramer_rao_bound(double f_q, int m, double* out);
CM_API cm_status cm_effective_ground_qfi(double b_z, double b_x, double* out);

/* threads = 0 selects the hardware concurrency. */
CM_API cm_status cm_figure_write_csv(cm_figure figure, const char* path, unsigned threads);

#ifdef __cplusplus
}
#endif

#endif /* COOPMETRO_COOPMETRO_H */
