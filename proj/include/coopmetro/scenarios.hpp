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

#include <array>
#include <optional>
#include <string_view>

#include "coopmetro/lindblad.hpp"
#include "coopmetro/qfi.hpp"

namespace coopmetro {

enum class ScenarioKind {
  StdSpont,
  CoopSpont,
  StdDeph,
  CoopDeph,
  CoopThermal,
  TwoSpinCoop,
  UnitaryBaseline,
};

const char* to_string(ScenarioKind kind) noexcept;
std::optional<ScenarioKind> parse_scenario_kind(std::string_view name) noexcept;

/// One physical setup. Units: hbar = k_B = 1; fields, rates and temperature
/// share one inverse-time scale. Only the fields used by `kind` are read.
struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::UnitaryBaseline;
  double b_z = 0.0;
  double b_x = 0.0;
  double gamma = 0.0;   // spontaneous emission rate
  double eta = 0.0;     // dephasing rate
  double dipole = 0.0;  // |d|
  double t_e = 0.0;     // bath temperature
  int n_spins = 1;      // read by unitary-baseline only

  int spin_count() const noexcept;
  bool operator==(const ScenarioSpec&) const = default;
};

/// Throws InvalidScenario when the fields used by `spec.kind` are out of range.
void validate(const ScenarioSpec& spec);

/// Hamiltonian of B_z sigma_z + B_x sigma_x.
ComplexMatrix single_spin_hamiltonian(double b_z, double b_x);
/// sigma_z^1 sigma_z^2 + B_z (sigma_z^1 + sigma_z^2) + B_x (sigma_x^1 + sigma_x^2).
ComplexMatrix two_spin_hamiltonian(double b_z, double b_x);

/// Thermal-bath decay parameters of the single-spin cooperative scheme.
struct ThermalRates {
  double omega = 0.0;       // 2 sqrt(B_z^2 + B_x^2)
  double gamma0 = 0.0;      // 4 omega^3 |d|^2 / 3
  double occupation = 0.0;  // 1 / (exp(omega / T_e) - 1), exactly 0 at T_e = 0
  double up() const noexcept { return gamma0 * occupation; }
  double down() const noexcept { return gamma0 * (occupation + 1.0); }
};
ThermalRates thermal_rates(double b_z, double b_x, double dipole, double t_e);

/// Dipole decay rate 4 omega^3 |d|^2 / 3 for a transition of gap omega.
double dipole_decay_rate(double omega, double dipole);

LindbladModel build_model(const ScenarioSpec& spec);
DensityMatrix probe_state(const ScenarioSpec& spec);

/// Evaluates QFI in B_z of the state reached after time t. The five models
/// needed by the finite-difference stencil are built once, so one instance
/// can serve a whole sweep over t.
class ScenarioPipeline {
 public:
  explicit ScenarioPipeline(const ScenarioSpec& spec);

  DensityMatrix state(double t) const;
  DensityMatrix state_at(double b_z, double t) const;
  QfiResult qfi(double t) const;
  double fd_step() const noexcept { return step_; }
  const ScenarioSpec& spec() const noexcept { return spec_; }

 private:
  ScenarioSpec spec_;
  DensityMatrix probe_;
  double step_;
  // b - h, b - h/2, b, b + h/2, b + h
  std::array<std::optional<Propagator>, 5> stencil_;
};

QfiResult qfi_at(const ScenarioSpec& spec, double t);

// Closed forms for the cooperative spontaneous-emission scheme, probe |+>.
// theta = atan2(B_x, B_z), Delta = sqrt(B_z^2 + B_x^2).

/// Evolved state expressed in the computational basis (sigma_z|0> = +|0>).
DensityMatrix analytic_coop_spont_state(double b_z, double b_x, double gamma, double t);

/// The same state in the ordered eigenbasis (|e>, |g>).
ComplexMatrix analytic_coop_spont_state_eigenbasis(double b_z, double b_x, double gamma,
                                                   double t);

double analytic_coop_spont_qfi(double b_z, double b_x, double gamma, double t);

struct TaylorCoefficients {
  double fdot0 = 0.0;
  double fddot0 = 0.0;
};
TaylorCoefficients taylor_coefficients(double b_z, double b_x, double gamma);

/// 4 e^{-gamma t} t^2 for std-spont, 4 e^{-2 eta t} t^2 for std-deph.
double standard_limit_formula(ScenarioKind kind, double rate, double t);

/// 4 n^2 t^2
double heisenberg_limit(int n_spins, double t);

/// Ground state of B_z sigma_z + B_x sigma_x, numerically differentiated.
double single_spin_ground_qfi(double b_z, double b_x);
/// B_x^2 / (B_x^2 + B_z^2)^2
double single_spin_ground_qfi_closed_form(double b_z, double b_x);

/// 2 B_x^2 / (2 B_x^2 + (B_z - 1)^2)^2 from the two-level effective model.
double effective_two_spin_ground_qfi(double b_z, double b_x);

/// Ground state of the full two-spin Hamiltonian, numerically differentiated.
double exact_two_spin_ground_qfi(double b_z, double b_x);

struct TradeoffPoint {
  double f_max = 0.0;
  double width = 0.0;
  double t = 0.0;
};

/// W = 2 sqrt(F_max^{-1/2} (1/(4T) - F_max^{-1/2})), valid for F_max > 16 T^2.
double tradeoff_width(double f_max, double t);
TradeoffPoint make_tradeoff_point(double f_max, double t);

}  // namespace coopmetro
