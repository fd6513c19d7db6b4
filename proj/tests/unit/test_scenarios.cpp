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
#include <vector>

#include "coopmetro/error.hpp"
#include "coopmetro/linalg.hpp"
#include "coopmetro/scenarios.hpp"
#include "support.hpp"

using namespace coopmetro;
using testing::max_diff;
using testing::rel_err;

namespace {

ScenarioSpec fig2(ScenarioKind kind = ScenarioKind::CoopSpont) {
  ScenarioSpec s;
  s.kind = kind;
  s.b_z = 0.1;
  s.b_x = kind == ScenarioKind::StdSpont || kind == ScenarioKind::StdDeph ? 0.0 : 0.1;
  s.gamma = 0.5;
  s.eta = 0.5;
  return s;
}

ScenarioSpec thermal() {
  ScenarioSpec s;
  s.kind = ScenarioKind::CoopThermal;
  s.b_z = 0.3;
  s.b_x = 0.1;
  s.dipole = 2.0;
  return s;
}

ScenarioSpec two_spin(double b_z, double b_x = 0.1, double dipole = 10.0) {
  ScenarioSpec s;
  s.kind = ScenarioKind::TwoSpinCoop;
  s.b_z = b_z;
  s.b_x = b_x;
  s.dipole = dipole;
  return s;
}

}  // namespace

TEST_CASE("kind names round-trip") {
  for (ScenarioKind k : {ScenarioKind::StdSpont, ScenarioKind::CoopSpont, ScenarioKind::StdDeph,
                         ScenarioKind::CoopDeph, ScenarioKind::CoopThermal,
                         ScenarioKind::TwoSpinCoop, ScenarioKind::UnitaryBaseline}) {
    CHECK(parse_scenario_kind(to_string(k)) == k);
  }
  CHECK_FALSE(parse_scenario_kind("coop-magic").has_value());
  CHECK(std::string(to_string(ScenarioKind::CoopSpont)) == "coop-spont");
}

TEST_CASE("scenario validation") {
  ScenarioSpec s = fig2();
  CHECK_NOTHROW(validate(s));
  s.b_z = 0.0;
  CHECK_THROWS_AS(validate(s), Error);
  s = fig2();
  s.gamma = -0.1;
  CHECK_THROWS_AS(validate(s), Error);
  s = fig2();
  s.b_x = -0.1;
  CHECK_THROWS_AS(validate(s), Error);
  CHECK_THROWS_AS(validate(two_spin(0.9, 0.0)), Error);
  ScenarioSpec u;
  u.n_spins = 3;
  CHECK_THROWS_AS(validate(u), Error);
  try {
    validate(two_spin(0.9, 0.0));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidScenario);
  }
  // Fields not read by a kind are not checked.
  ScenarioSpec std_deph = fig2(ScenarioKind::StdDeph);
  std_deph.gamma = -5.0;
  CHECK_NOTHROW(validate(std_deph));
}

TEST_CASE("thermal rates") {
  const ThermalRates r = thermal_rates(0.3, 0.1, 2.0, 0.0);
  CHECK(r.omega == doctest::Approx(0.632456).epsilon(1e-6));
  CHECK(r.gamma0 == doctest::Approx(1.349238).epsilon(1e-6));
  CHECK(r.occupation == 0.0);
  CHECK(r.up() == 0.0);
  CHECK(r.down() == r.gamma0);

  const ThermalRates hot = thermal_rates(0.3, 0.1, 2.0, 0.5);
  CHECK(rel_err(hot.occupation, 1.0 / std::expm1(hot.omega / 0.5)) <= 1e-15);
  CHECK(hot.down() - hot.up() == doctest::Approx(hot.gamma0));
  CHECK(dipole_decay_rate(1.0, 1.0) == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("build_model channel structure") {
  const LindbladModel zero_temp = build_model(thermal());
  REQUIRE(zero_temp.channels().size() == 1);
  CHECK(zero_temp.channels()[0].rate == doctest::Approx(1.349238).epsilon(1e-6));

  ScenarioSpec hot = thermal();
  hot.t_e = 0.5;
  CHECK(build_model(hot).channels().size() == 2);

  // Cooperative decay lowers |e> to |g> of the controlled Hamiltonian.
  const LindbladModel coop = build_model(fig2());
  REQUIRE(coop.channels().size() == 1);
  const HermitianEigensystem es = eigh(single_spin_hamiltonian(0.1, 0.1));
  CHECK(max_diff(coop.channels()[0].jump, outer(es.vector(0), es.vector(1))) <= 1e-14);

  // Cooperative dephasing uses the normalised controlled Hamiltonian.
  const LindbladModel deph = build_model(fig2(ScenarioKind::CoopDeph));
  REQUIRE(deph.channels().size() == 1);
  CHECK(max_diff(deph.channels()[0].jump, single_spin_hamiltonian(0.1, 0.1) / std::sqrt(0.02)) <=
        1e-14);
  CHECK(deph.channels()[0].rate == doctest::Approx(0.25));

  const LindbladModel pair = build_model(two_spin(0.9));
  CHECK(pair.dim() == 4);
  CHECK(pair.channels().size() == 4);
  const HermitianEigensystem levels = eigh(two_spin_hamiltonian(0.9, 0.1));
  const int transitions[4][2] = {{3, 2}, {3, 1}, {2, 1}, {2, 0}};
  for (int k = 0; k < 4; ++k) {
    const int i = transitions[k][0];
    const int j = transitions[k][1];
    const double gap = levels.values(i) - levels.values(j);
    CHECK(rel_err(pair.channels()[k].rate, 4 * gap * gap * gap * 100.0 / 3.0) <= 1e-12);
    CHECK(max_diff(pair.channels()[k].jump, outer(levels.vector(j), levels.vector(i))) <= 1e-12);
  }
}

TEST_CASE("two-spin spectrum in the vanishing control limit") {
  const HermitianEigensystem es = eigh(two_spin_hamiltonian(0.3, 1e-6));
  CHECK(std::abs(es.values(2) - es.values(0) - 1.4) <= 1e-6);
  CHECK(std::abs(es.values(3) - es.values(0) - 2.6) <= 1e-6);
  CHECK(std::abs(es.values(1) + 1.0) <= 1e-12);
}

TEST_CASE("probe states") {
  const DensityMatrix one = probe_state(fig2());
  CHECK(max_diff(one.matrix(), ComplexMatrix::Constant(2, 2, 0.5)) <= 1e-15);
  CHECK(one.purity() == doctest::Approx(1.0));

  const DensityMatrix two = probe_state(two_spin(0.9));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 0.5;
  CHECK(max_diff(two.matrix(), expected) <= 1e-15);
  CHECK(two.purity() == doctest::Approx(1.0));
}

TEST_CASE("qfi_at examples") {
  for (ScenarioKind k : {ScenarioKind::StdSpont, ScenarioKind::CoopSpont, ScenarioKind::CoopDeph,
                         ScenarioKind::UnitaryBaseline}) {
    ScenarioSpec s = fig2(k);
    CHECK(qfi_at(s, 0.0).value == 0.0);
  }
  CHECK(qfi_at(two_spin(0.9), 0.0).value == 0.0);

  const QfiResult r = qfi_at(fig2(), 1.0);
  REQUIRE(r.fd_step.has_value());
  CHECK(*r.fd_step == doctest::Approx(1e-5));
  CHECK(qfi_at(two_spin(0.9), 1.0).method == QfiMethod::SldSpectral);

  for (double t : {0.5, 1.0, 2.0, 5.0}) {
    CHECK(rel_err(qfi_at(fig2(), t).value, analytic_coop_spont_qfi(0.1, 0.1, 0.5, t)) <= 1e-6);
  }
}

TEST_CASE("coop-spont approach to the ground-state limit") {
  // gamma t = 25 is within 2e-3 of the limit, gamma t = 50 within 1e-9; the
  // pipeline agrees with the closed form at both.
  const double at25 = qfi_at(fig2(), 50.0).value;
  CHECK(rel_err(at25, analytic_coop_spont_qfi(0.1, 0.1, 0.5, 50.0)) <= 1e-6);
  CHECK(std::abs(at25 - 25.0) <= 2e-3);
  CHECK(std::abs(qfi_at(fig2(), 100.0).value - 25.0) <= 1e-6);
}

TEST_CASE("coop-spont limit within 1e-3 at gamma t = 25" * doctest::should_fail()) {
  CHECK(std::abs(qfi_at(fig2(), 50.0).value - 25.0) <= 1e-3);
}

TEST_CASE("analytic state examples") {
  const DensityMatrix start = analytic_coop_spont_state(0.1, 0.1, 0.5, 0.0);
  CHECK(max_diff(start.matrix(), ComplexMatrix::Constant(2, 2, 0.5)) <= 1e-15);

  const ComplexMatrix eig = analytic_coop_spont_state_eigenbasis(0.1, 0.1, 0.5, 1.0);
  CHECK(eig(0, 0).real() == doctest::Approx(0.517706).epsilon(1e-6));

  const StateVector g = eigh(single_spin_hamiltonian(0.1, 0.1)).vector(0);
  CHECK(max_diff(analytic_coop_spont_state(0.1, 0.1, 0.5, 60.0).matrix(), outer(g, g)) <= 1e-6);
}

TEST_CASE("analytic state at gamma t = 30 within 1e-10 of the ground state" * doctest::should_fail()) {
  const StateVector g = eigh(single_spin_hamiltonian(0.1, 0.1)).vector(0);
  CHECK(max_diff(analytic_coop_spont_state(0.1, 0.1, 0.5, 60.0).matrix(), outer(g, g)) <= 1e-10);
}

TEST_CASE("analytic qfi examples") {
  CHECK(analytic_coop_spont_qfi(0.1, 0.1, 0.5, 0.0) == doctest::Approx(0.0));
  CHECK(std::abs(analytic_coop_spont_qfi(0.1, 0.1, 0.5, 400.0) - 25.0) <= 1e-9);
  const double h = 1e-3;
  const double slope = analytic_coop_spont_qfi(0.1, 0.1, 0.5, h) / h;
  CHECK(rel_err(slope, 6.25) <= 1e-2);
}

TEST_CASE("taylor coefficients") {
  const TaylorCoefficients c = taylor_coefficients(0.1, 0.1, 0.5);
  CHECK(c.fdot0 == doctest::Approx(6.25));
  const TaylorCoefficients u = taylor_coefficients(0.1, 0.1, 0.0);
  CHECK(u.fdot0 == 0.0);
  CHECK(u.fddot0 == 8.0);

  // Cubic fit through F(0) = 0 and three small times.
  const double h = 1e-3;
  const double f1 = analytic_coop_spont_qfi(0.1, 0.1, 0.5, h);
  const double f2 = analytic_coop_spont_qfi(0.1, 0.1, 0.5, 2 * h);
  const double f3 = analytic_coop_spont_qfi(0.1, 0.1, 0.5, 3 * h);
  const double a = (18 * f1 - 9 * f2 + 2 * f3) / (6 * h);
  const double b = (-5 * f1 + 4 * f2 - f3) / (2 * h * h);
  CHECK(rel_err(a, c.fdot0) <= 1e-4);
  CHECK(rel_err(2 * b, c.fddot0) <= 1e-4);
}

TEST_CASE("standard limit formulas") {
  CHECK(standard_limit_formula(ScenarioKind::StdSpont, 0.5, 1.0) == doctest::Approx(2.426123).epsilon(1e-6));
  CHECK(standard_limit_formula(ScenarioKind::StdDeph, 0.5, 1.0) == doctest::Approx(1.471518).epsilon(1e-6));
  CHECK(standard_limit_formula(ScenarioKind::StdSpont, 0.0, 1.7) == doctest::Approx(4 * 1.7 * 1.7));
  CHECK(standard_limit_formula(ScenarioKind::StdDeph, 0.0, 1.7) == doctest::Approx(4 * 1.7 * 1.7));
  CHECK_THROWS_AS(standard_limit_formula(ScenarioKind::CoopSpont, 0.5, 1.0), Error);
}

TEST_CASE("heisenberg limit") {
  CHECK(heisenberg_limit(1, 1.0) == 4.0);
  CHECK(heisenberg_limit(2, 1.0) == 16.0);
  CHECK(heisenberg_limit(1, 0.0) == 0.0);
  CHECK_THROWS_AS(heisenberg_limit(0, 1.0), Error);
}

TEST_CASE("ground-state QFIs") {
  CHECK(effective_two_spin_ground_qfi(1.0, 0.1) == doctest::Approx(50.0));
  CHECK(effective_two_spin_ground_qfi(0.89, 0.1) == doctest::Approx(19.41).epsilon(1e-3));
  CHECK(effective_two_spin_ground_qfi(1e6, 0.1) < 1e-20);
  CHECK(effective_two_spin_ground_qfi(-1e6, 0.1) < 1e-20);
  CHECK_THROWS_AS(effective_two_spin_ground_qfi(1.0, 0.0), Error);

  CHECK(rel_err(exact_two_spin_ground_qfi(1.0, 0.1), 50.0) <= 0.10);
  CHECK(exact_two_spin_ground_qfi(5.0, 0.1) < 0.01);
  CHECK_THROWS_AS(exact_two_spin_ground_qfi(1.0, 0.0), Error);

  for (double b_z : {0.05, 0.1, 0.3, 0.7, -0.4}) {
    CHECK(rel_err(single_spin_ground_qfi(b_z, 0.1), single_spin_ground_qfi_closed_form(b_z, 0.1)) <=
          1e-6);
  }
  CHECK(single_spin_ground_qfi_closed_form(0.1, 0.1) == doctest::Approx(25.0));
  CHECK(single_spin_ground_qfi_closed_form(0.3, 0.1) == doctest::Approx(1.0));
}

TEST_CASE("effective model is symmetric about the critical point") {
  double worst_exact = 0.0;
  for (double d : {0.02, 0.05, 0.1, 0.2, 0.3}) {
    CHECK(std::abs(effective_two_spin_ground_qfi(1 - d, 0.1) -
                   effective_two_spin_ground_qfi(1 + d, 0.1)) <= 1e-6);
    const double lo = exact_two_spin_ground_qfi(1 - d, 0.1);
    const double hi = exact_two_spin_ground_qfi(1 + d, 0.1);
    worst_exact = std::max(worst_exact, std::abs(lo - hi) / std::max(lo, hi));
  }
  MESSAGE("exact-model asymmetry about B_z = 1 (relative): " << worst_exact);
}

TEST_CASE("trade-off width") {
  CHECK(tradeoff_width(50, 1) == doctest::Approx(0.247833).epsilon(1e-6));
  CHECK(tradeoff_width(16 + 1e-12, 1) < 1e-5);
  CHECK_THROWS_AS(tradeoff_width(16, 1), Error);
  CHECK_THROWS_AS(tradeoff_width(50, 0), Error);
  try {
    tradeoff_width(10, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRegime);
  }
  const TradeoffPoint p = make_tradeoff_point(50, 1);
  const double identity_defect =
      p.width * p.width / 4 - (1 / std::sqrt(p.f_max)) * (1 / (4 * p.t) - 1 / std::sqrt(p.f_max));
  CHECK(std::abs(identity_defect) <= 1e-12);
}

TEST_CASE("trade-off identity against the effective closed form") {
  // Solving 2 B_x^2 / (2 B_x^2 + d^2)^2 = 16 T^2 for the half width d.
  for (double t : {0.5, 1.0, 2.0}) {
    const double lo = std::log(16 * t * t);
    for (int k = 1; k <= 40; ++k) {
      const double f_max = std::exp(lo + (std::log(1e4) - lo) * k / 40.0);
      if (f_max <= 16 * t * t) continue;
      const double bx2 = 1.0 / (2 * f_max);
      const double half = std::sqrt(std::sqrt(2 * bx2) / (4 * t) - 2 * bx2);
      CHECK(std::abs(2 * half - tradeoff_width(f_max, t)) <= 1e-12);
    }
  }
}

TEST_CASE("trade-off width is unimodal in F_max with its peak at 64 T^2") {
  for (double t : {0.5, 1.0, 2.0}) {
    const double peak = 64 * t * t;
    CHECK(tradeoff_width(peak, t) == doctest::Approx(1.0 / (4 * t)));
    double prev = 0.0;
    for (double f = 16 * t * t * 1.01; f < peak; f *= 1.05) {
      const double w = tradeoff_width(f, t);
      CHECK(w > prev);
      prev = w;
    }
    prev = tradeoff_width(peak, t);
    for (double f = peak * 1.05; f < 1e5; f *= 1.05) {
      const double w = tradeoff_width(f, t);
      CHECK(w < prev);
      prev = w;
    }
  }
}

TEST_CASE("cooperative schemes beat the standard ones at the figure parameters") {
  for (int k = 1; k <= 20; ++k) {
    const double t = 0.25 * k;
    CHECK(qfi_at(fig2(), t).value > qfi_at(fig2(ScenarioKind::StdSpont), t).value);
  }
  for (ScenarioKind k : {ScenarioKind::CoopSpont, ScenarioKind::CoopDeph}) {
    for (double t : {0.05, 0.1, 0.15, 0.2, 0.25}) {
      CHECK(qfi_at(fig2(k), t).value > heisenberg_limit(1, t));
    }
  }
}

TEST_CASE("standard dephasing attains the cited formula") {
  for (double t : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    CHECK(rel_err(qfi_at(fig2(ScenarioKind::StdDeph), t).value,
                  standard_limit_formula(ScenarioKind::StdDeph, 0.5, t)) <= 1e-6);
  }
}

TEST_CASE("thermal scheme exceeds the Heisenberg limit at some t in (0, 3]") {
  bool exceeded = false;
  for (int k = 1; k <= 60; ++k) {
    const double t = 0.05 * k;
    exceeded = exceeded || qfi_at(thermal(), t).value > heisenberg_limit(1, t);
  }
  CHECK(exceeded);
}

TEST_CASE("vanishing rates reduce to unitary baselines") {
  for (ScenarioKind k : {ScenarioKind::CoopSpont, ScenarioKind::CoopDeph, ScenarioKind::CoopThermal}) {
    ScenarioSpec s;
    s.kind = k;
    s.b_z = 0.3;
    s.b_x = 0.0;
    for (double t : {0.5, 1.0, 3.0}) {
      CHECK(rel_err(qfi_at(s, t).value, 4 * t * t) <= 1e-6);
    }
    // With a transverse control the unitary value stays below 4 t^2.
    s.b_x = 0.1;
    for (double t : {0.5, 1.0, 3.0}) CHECK(qfi_at(s, t).value <= 4 * t * t * (1 + 1e-9));
  }
  for (int n : {1, 2}) {
    ScenarioSpec u;
    u.kind = ScenarioKind::UnitaryBaseline;
    u.b_z = 0.37;
    u.n_spins = n;
    for (double t : {0.5, 1.0, 2.0}) {
      CHECK(rel_err(qfi_at(u, t).value, heisenberg_limit(n, t)) <= 1e-8);
    }
  }
}

TEST_CASE("pipeline method selection and single-spin triangle") {
  for (ScenarioKind k : {ScenarioKind::StdSpont, ScenarioKind::CoopSpont, ScenarioKind::StdDeph,
                         ScenarioKind::CoopDeph}) {
    const ScenarioPipeline pipe(fig2(k));
    for (double t : {0.5, 1.0, 2.0, 5.0}) {
      const DensityMatrix rho = pipe.state(t);
      const StateFamily fam{[&](double b) { return pipe.state_at(b, t); }, pipe.spec().b_z};
      const ComplexMatrix d = differentiate_state(fam, pipe.fd_step());
      const QfiResult q = qfi_qubit(rho, d);
      const QfiResult s = qfi_sld(rho, d);
      CHECK(rel_err(q.value, s.value) <= 1e-6);
      CHECK(pipe.qfi(t).value == q.value);
    }
  }
}
