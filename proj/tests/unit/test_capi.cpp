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

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "coopmetro/coopmetro.h"

namespace {

cm_scenario* make(cm_kind kind, double b_z, double b_x) {
  cm_scenario_params p;
  cm_scenario_params_init(&p, kind);
  p.b_z = b_z;
  p.b_x = b_x;
  p.gamma = 0.5;
  p.eta = 0.5;
  p.dipole = 10.0;
  cm_scenario* s = nullptr;
  REQUIRE(cm_scenario_create(&p, &s) == CM_OK);
  return s;
}

}  // namespace

TEST_CASE("c api: names and parsing") {
  cm_kind k;
  CHECK(cm_kind_parse("two-spin-coop", &k) == CM_OK);
  CHECK(k == CM_KIND_TWO_SPIN_COOP);
  CHECK(cm_kind_parse("nope", &k) == CM_ERR_INVALID_ARGUMENT);
  CHECK(std::string(cm_last_error()).find("nope") != std::string::npos);
  CHECK(std::string(cm_kind_name(CM_KIND_STD_DEPH)) == "std-deph");
  cm_axis a;
  CHECK(cm_axis_parse("b_x", &a) == CM_OK);
  CHECK(a == CM_AXIS_BX);
  cm_figure f;
  CHECK(cm_figure_parse("fig5", &f) == CM_OK);
  CHECK(f == CM_FIGURE_5);
  cm_objective o;
  CHECK(cm_objective_parse("ground-effective", &o) == CM_OK);
  CHECK(std::string(cm_qfi_method_name(CM_QFI_QUBIT_CLOSED_FORM)) == "qubit-closed-form");
  CHECK(std::string(cm_status_name(CM_ERR_OUT_OF_REGIME)) == "out of regime");
  CHECK(cm_version() != nullptr);
}

TEST_CASE("c api: scenario lifecycle and qfi") {
  cm_scenario_params p;
  cm_scenario_params_init(&p, CM_KIND_COOP_SPONT);
  CHECK(p.n_spins == 1);
  cm_scenario* bad = nullptr;
  CHECK(cm_scenario_create(&p, &bad) == CM_ERR_INVALID_SCENARIO);  // b_z = 0
  CHECK(bad == nullptr);
  CHECK(std::string(cm_last_error()).size() > 0);
  CHECK(cm_scenario_create(nullptr, &bad) == CM_ERR_INVALID_ARGUMENT);

  cm_scenario* s = make(CM_KIND_COOP_SPONT, 0.1, 0.1);
  cm_scenario_params back;
  CHECK(cm_scenario_params_get(s, &back) == CM_OK);
  CHECK(back.b_z == 0.1);
  CHECK(back.kind == CM_KIND_COOP_SPONT);

  cm_qfi_result r;
  CHECK(cm_scenario_qfi(s, 1.0, &r) == CM_OK);
  CHECK(r.value > 4.0);
  CHECK(r.has_fd_step == 1);
  CHECK(cm_scenario_qfi(s, -1.0, &r) == CM_ERR_INVALID_ARGUMENT);

  double re[4], im[4];
  size_t dim = 0;
  CHECK(cm_scenario_state(s, 0.0, re, im, 4, &dim) == CM_OK);
  CHECK(dim == 2);
  CHECK(re[1] == doctest::Approx(0.5));
  CHECK(cm_scenario_state(s, 1.0, re, im, 3, &dim) == CM_ERR_BUFFER_TOO_SMALL);
  CHECK(dim == 2);
  cm_scenario_destroy(s);
  cm_scenario_destroy(nullptr);
}

TEST_CASE("c api: two-spin state is returned row-major") {
  cm_scenario* s = make(CM_KIND_TWO_SPIN_COOP, 0.9, 0.1);
  std::vector<double> re(16), im(16);
  size_t dim = 0;
  CHECK(cm_scenario_state(s, 0.0, re.data(), im.data(), 16, &dim) == CM_OK);
  CHECK(dim == 4);
  CHECK(re[0 * 4 + 3] == doctest::Approx(0.5));
  CHECK(re[3 * 4 + 0] == doctest::Approx(0.5));
  CHECK(re[1 * 4 + 1] == 0.0);
  cm_scenario_destroy(s);
}

TEST_CASE("c api: sweep with per-point failures") {
  cm_scenario* s = make(CM_KIND_COOP_SPONT, 0.1, 0.1);
  cm_sweep_result* out = nullptr;
  CHECK(cm_sweep_run(s, CM_OBJECTIVE_DYNAMICS, CM_AXIS_BZ, -0.2, 0.2, 5, 1.0, 2, &out) == CM_OK);
  REQUIRE(out != nullptr);
  CHECK(cm_sweep_result_size(out) == 5);
  CHECK(cm_sweep_result_failures(out) == 1);
  double x;
  cm_qfi_result r;
  int ok;
  CHECK(cm_sweep_result_point(out, 2, &x, &r, &ok) == CM_OK);
  CHECK(ok == 0);
  CHECK(std::isnan(r.value));
  CHECK(std::string(cm_sweep_result_diagnostic(out, 2)).size() > 0);
  CHECK(std::string(cm_sweep_result_diagnostic(out, 0)).empty());
  CHECK(cm_sweep_result_diagnostic(out, 99) == nullptr);
  CHECK(cm_sweep_result_point(out, 99, &x, &r, &ok) == CM_ERR_INVALID_ARGUMENT);
  cm_sweep_result_destroy(out);

  CHECK(cm_sweep_run(s, CM_OBJECTIVE_DYNAMICS, CM_AXIS_T, 1.0, 0.0, 5, 0.0, 0, &out) ==
        CM_ERR_INVALID_ARGUMENT);
  cm_scenario_destroy(s);
}

TEST_CASE("c api: region, maximise and formulas") {
  cm_scenario_params p;
  cm_scenario_params_init(&p, CM_KIND_UNITARY_BASELINE);
  p.b_x = 0.1;
  cm_scenario* s = nullptr;
  REQUIRE(cm_scenario_create(&p, &s) == CM_OK);

  cm_region region;
  CHECK(cm_find_region(s, CM_OBJECTIVE_GROUND_EFFECTIVE, 1.0, 16.0, 0.5, 1.5, 1e-11, &region) == CM_OK);
  CHECK(region.resolved == 1);
  double w = 0.0;
  CHECK(cm_tradeoff_width(50.0, 1.0, &w) == CM_OK);
  CHECK(std::abs(region.upper - region.lower - w) <= 1e-8);
  CHECK(cm_tradeoff_width(10.0, 1.0, &w) == CM_ERR_OUT_OF_REGIME);

  const cm_axis axis = CM_AXIS_BZ;
  const double lo = 0.0, hi = 2.0;
  double argmax = 0.0, value = 0.0;
  CHECK(cm_maximize(s, CM_OBJECTIVE_GROUND_EFFECTIVE, 0.0, &axis, &lo, &hi, 1, &argmax, &value) == CM_OK);
  CHECK(std::abs(argmax - 1.0) <= 1e-4);
  CHECK(std::abs(value - 50.0) <= 1e-6);
  CHECK(cm_maximize(s, CM_OBJECTIVE_GROUND_EFFECTIVE, 0.0, &axis, &lo, &hi, 3, &argmax, &value) ==
        CM_ERR_INVALID_ARGUMENT);
  cm_scenario_destroy(s);

  double v = 0.0;
  CHECK(cm_heisenberg_limit(2, 1.0, &v) == CM_OK);
  CHECK(v == 16.0);
  CHECK(cm_standard_limit(CM_KIND_STD_DEPH, 0.5, 1.0, &v) == CM_OK);
  CHECK(v == doctest::Approx(4 * std::exp(-1.0)));
  CHECK(cm_standard_limit(CM_KIND_COOP_DEPH, 0.5, 1.0, &v) != CM_OK);
  CHECK(cm_cramer_rao_bound(4.0, 100, &v) == CM_OK);
  CHECK(v == doctest::Approx(0.05));
  CHECK(cm_cramer_rao_bound(0.0, 1, &v) == CM_ERR_INVALID_ARGUMENT);
  CHECK(cm_effective_ground_qfi(1.0, 0.1, &v) == CM_OK);
  CHECK(v == doctest::Approx(50.0));
}

TEST_CASE("c api: figure writing") {
  const std::string path = "capi_figA1_test.csv";
  CHECK(cm_figure_write_csv(CM_FIGURE_A1, path.c_str(), 2) == CM_OK);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "b_z,f_ground_exact,f_ground_effective");
  in.close();
  std::remove(path.c_str());
  CHECK(cm_figure_write_csv(CM_FIGURE_A1, "/nonexistent-dir/x.csv", 1) == CM_ERR_IO);
  CHECK(std::string(cm_last_error()).find("/nonexistent-dir/x.csv") != std::string::npos);
}
