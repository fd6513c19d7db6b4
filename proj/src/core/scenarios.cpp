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

#include "coopmetro/scenarios.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "coopmetro/error.hpp"
#include "coopmetro/linalg.hpp"

namespace coopmetro {
namespace {

constexpr std::pair<ScenarioKind, const char*> kKindNames[] = {
    {ScenarioKind::StdSpont, "std-spont"},
    {ScenarioKind::CoopSpont, "coop-spont"},
    {ScenarioKind::StdDeph, "std-deph"},
    {ScenarioKind::CoopDeph, "coop-deph"},
    {ScenarioKind::CoopThermal, "coop-thermal"},
    {ScenarioKind::TwoSpinCoop, "two-spin-coop"},
    {ScenarioKind::UnitaryBaseline, "unitary-baseline"},
};

// Decay channels among two-spin levels, 1-based (from, to) with E_1 < ... < E_4.
constexpr std::pair<int, int> kTwoSpinTransitions[] = {{4, 3}, {4, 2}, {3, 2}, {3, 1}};

bool is_cooperative(ScenarioKind kind) {
  return kind == ScenarioKind::CoopSpont || kind == ScenarioKind::CoopDeph ||
         kind == ScenarioKind::CoopThermal || kind == ScenarioKind::TwoSpinCoop;
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InvalidScenario, "scenario: " + what);
}

void require_rate(double value, const char* name) {
  require(std::isfinite(value) && value >= 0.0, std::string(name) + " must be finite and >= 0");
}

void push_channel(std::vector<LindbladChannel>& out, double rate, ComplexMatrix jump) {
  if (rate > 0.0) out.push_back({rate, std::move(jump)});
}

// Smallest adjacent gap of an ascending spectrum.
double min_gap(const RealVector& values) {
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 1; k < values.size(); ++k) gap = std::min(gap, values(k) - values(k - 1));
  return gap;
}

HermitianEigensystem nondegenerate_eigh(const ComplexMatrix& h, const char* who) {
  HermitianEigensystem es = eigh(h);
  if (min_gap(es.values) < kDegeneracyGap) {
    fail(ErrorCode::Degenerate, std::string(who) + ": degenerate energy levels");
  }
  return es;
}

StateVector plus_state() {
  StateVector v(2);
  v << 1.0, 1.0;
  return v / std::sqrt(2.0);
}

StateVector bell_state() {
  StateVector v = StateVector::Zero(4);
  v(0) = 1.0;
  v(3) = 1.0;
  return v / std::sqrt(2.0);
}

double ground_qfi(const std::function<ComplexMatrix(double)>& hamiltonian, double b_z,
                  const char* who) {
  auto ground = [&](double b) {
    const HermitianEigensystem es = eigh(hamiltonian(b));
    if (es.values(1) - es.values(0) < kDegeneracyGap) {
      fail(ErrorCode::Degenerate, std::string(who) + ": ground level is degenerate");
    }
    return StateVector(es.vector(0));
  };
  const PureStateFamily family{ground, b_z};
  return qfi_pure(ground(b_z), differentiate_pure(family)).value;
}

}  // namespace

const char* to_string(ScenarioKind kind) noexcept {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ScenarioKind> parse_scenario_kind(std::string_view name) noexcept {
  for (const auto& [k, n] : kKindNames) {
    if (name == n) return k;
  }
  return std::nullopt;
}

int ScenarioSpec::spin_count() const noexcept {
  if (kind == ScenarioKind::TwoSpinCoop) return 2;
  if (kind == ScenarioKind::UnitaryBaseline) return n_spins;
  return 1;
}

void validate(const ScenarioSpec& spec) {
  require(std::isfinite(spec.b_z), "b_z must be finite");
  switch (spec.kind) {
    case ScenarioKind::StdSpont:
      require_rate(spec.gamma, "gamma");
      break;
    case ScenarioKind::StdDeph:
      require_rate(spec.eta, "eta");
      break;
    case ScenarioKind::CoopSpont:
      require_rate(spec.gamma, "gamma");
      break;
    case ScenarioKind::CoopDeph:
      require_rate(spec.eta, "eta");
      break;
    case ScenarioKind::CoopThermal:
      require_rate(spec.dipole, "dipole");
      require_rate(spec.t_e, "t_e");
      break;
    case ScenarioKind::TwoSpinCoop:
      require_rate(spec.dipole, "dipole");
      require(spec.b_x > 0.0, "b_x must be > 0 for two-spin-coop (E_2 = E_3 at b_x = 0)");
      break;
    case ScenarioKind::UnitaryBaseline:
      require(spec.n_spins == 1 || spec.n_spins == 2, "n_spins must be 1 or 2");
      break;
  }
  if (is_cooperative(spec.kind)) {
    require(std::isfinite(spec.b_x) && spec.b_x >= 0.0, "b_x must be finite and >= 0");
    require(spec.b_z != 0.0, "b_z must be non-zero for cooperative kinds");
  }
}

ComplexMatrix single_spin_hamiltonian(double b_z, double b_x) {
  return b_z * pauli(Axis::Z) + b_x * pauli(Axis::X);
}

ComplexMatrix two_spin_hamiltonian(double b_z, double b_x) {
  const ComplexMatrix id = identity(2);
  const ComplexMatrix z1 = tensor(pauli(Axis::Z), id);
  const ComplexMatrix z2 = tensor(id, pauli(Axis::Z));
  const ComplexMatrix x1 = tensor(pauli(Axis::X), id);
  const ComplexMatrix x2 = tensor(id, pauli(Axis::X));
  return z1 * z2 + b_z * (z1 + z2) + b_x * (x1 + x2);
}

double dipole_decay_rate(double omega, double dipole) {
  return 4.0 * omega * omega * omega * dipole * dipole / 3.0;
}

ThermalRates thermal_rates(double b_z, double b_x, double dipole, double t_e) {
  ThermalRates r;
  r.omega = 2.0 * std::hypot(b_z, b_x);
  r.gamma0 = dipole_decay_rate(r.omega, dipole);
  r.occupation = t_e > 0.0 ? 1.0 / std::expm1(r.omega / t_e) : 0.0;
  return r;
}

LindbladModel build_model(const ScenarioSpec& spec) {
  validate(spec);
  std::vector<LindbladChannel> channels;

  switch (spec.kind) {
    case ScenarioKind::StdSpont: {
      // Fixed lowering operator |1><0|: decay into the ground level of
      // B_z sigma_z for B_z > 0, independent of the field.
      push_channel(channels, spec.gamma, sigma_minus());
      return LindbladModel(spec.b_z * pauli(Axis::Z), std::move(channels));
    }
    case ScenarioKind::StdDeph: {
      push_channel(channels, spec.eta / 2.0, pauli(Axis::Z));
      return LindbladModel(spec.b_z * pauli(Axis::Z), std::move(channels));
    }
    case ScenarioKind::CoopSpont: {
      ComplexMatrix h = single_spin_hamiltonian(spec.b_z, spec.b_x);
      const auto es = nondegenerate_eigh(h, "coop-spont");
      push_channel(channels, spec.gamma, outer(es.vector(0), es.vector(1)));
      return LindbladModel(std::move(h), std::move(channels));
    }
    case ScenarioKind::CoopDeph: {
      ComplexMatrix h = single_spin_hamiltonian(spec.b_z, spec.b_x);
      push_channel(channels, spec.eta / 2.0, h / std::hypot(spec.b_z, spec.b_x));
      return LindbladModel(std::move(h), std::move(channels));
    }
    case ScenarioKind::CoopThermal: {
      ComplexMatrix h = single_spin_hamiltonian(spec.b_z, spec.b_x);
      const auto es = nondegenerate_eigh(h, "coop-thermal");
      const ThermalRates rates = thermal_rates(spec.b_z, spec.b_x, spec.dipole, spec.t_e);
      push_channel(channels, rates.up(), outer(es.vector(1), es.vector(0)));
      push_channel(channels, rates.down(), outer(es.vector(0), es.vector(1)));
      return LindbladModel(std::move(h), std::move(channels));
    }
    case ScenarioKind::TwoSpinCoop: {
      ComplexMatrix h = two_spin_hamiltonian(spec.b_z, spec.b_x);
      const auto es = nondegenerate_eigh(h, "two-spin-coop");
      for (const auto& [from, to] : kTwoSpinTransitions) {
        const double omega = es.values(from - 1) - es.values(to - 1);
        push_channel(channels, dipole_decay_rate(omega, spec.dipole),
                     outer(es.vector(to - 1), es.vector(from - 1)));
      }
      return LindbladModel(std::move(h), std::move(channels));
    }
    case ScenarioKind::UnitaryBaseline: {
      if (spec.n_spins == 1) return LindbladModel(spec.b_z * pauli(Axis::Z), {});
      return LindbladModel(two_spin_hamiltonian(spec.b_z, 0.0), {});
    }
  }
  fail(ErrorCode::InvalidScenario, "scenario: unknown kind");
}

DensityMatrix probe_state(const ScenarioSpec& spec) {
  return DensityMatrix::from_pure(spec.spin_count() == 2 ? bell_state() : plus_state());
}

ScenarioPipeline::ScenarioPipeline(const ScenarioSpec& spec)
    : spec_(spec), probe_(probe_state(spec)), step_(default_fd_step(spec.b_z)) {
  validate(spec_);
  const double b = spec_.b_z;
  const double h = step_;
  const std::array<double, 5> points = {b - h, b - h / 2, b, b + h / 2, b + h};
  for (std::size_t k = 0; k < points.size(); ++k) {
    ScenarioSpec shifted = spec_;
    shifted.b_z = points[k];
    stencil_[k].emplace(build_model(shifted));
  }
}

DensityMatrix ScenarioPipeline::state(double t) const { return stencil_[2]->evolve(probe_, t); }

DensityMatrix ScenarioPipeline::state_at(double b_z, double t) const {
  const double b = spec_.b_z;
  const double h = step_;
  const std::array<double, 5> points = {b - h, b - h / 2, b, b + h / 2, b + h};
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k] == b_z) return stencil_[k]->evolve(probe_, t);
  }
  ScenarioSpec shifted = spec_;
  shifted.b_z = b_z;
  return propagate(build_model(shifted), probe_, t);
}

QfiResult ScenarioPipeline::qfi(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    fail(ErrorCode::InvalidArgument, "qfi_at: time must be finite and >= 0");
  }
  const StateFamily family{[this, t](double b) { return state_at(b, t); }, spec_.b_z};
  const ComplexMatrix drho = differentiate_state(family, step_);
  const DensityMatrix rho = state(t);
  QfiResult result = rho.dim() == 2 ? qfi_qubit(rho, drho) : qfi_sld(rho, drho);
  result.fd_step = step_;
  return result;
}

QfiResult qfi_at(const ScenarioSpec& spec, double t) { return ScenarioPipeline(spec).qfi(t); }

ComplexMatrix analytic_coop_spont_state_eigenbasis(double b_z, double b_x, double gamma,
                                                   double t) {
  if (b_z == 0.0 && b_x == 0.0) {
    fail(ErrorCode::InvalidArgument, "analytic state: field must be non-zero");
  }
  const double theta = std::atan2(b_x, b_z);
  const double delta = std::hypot(b_z, b_x);
  const double excited = 0.5 * (1.0 + std::sin(theta)) * std::exp(-gamma * t);
  const Complex coherence =
      0.5 * std::cos(theta) * std::exp(Complex(-0.5 * gamma * t, -2.0 * delta * t));

  ComplexMatrix m(2, 2);
  m << excited, coherence, std::conj(coherence), 1.0 - excited;
  return m;
}

DensityMatrix analytic_coop_spont_state(double b_z, double b_x, double gamma, double t) {
  const ComplexMatrix eig = analytic_coop_spont_state_eigenbasis(b_z, b_x, gamma, t);
  const double theta = std::atan2(b_x, b_z);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  // Columns are |e> and |g> of B_z sigma_z + B_x sigma_x with sigma_z|0> = +|0>.
  ComplexMatrix basis(2, 2);
  basis << c, -s, s, c;
  return DensityMatrix(basis * eig * basis.adjoint());
}

double analytic_coop_spont_qfi(double b_z, double b_x, double gamma, double t) {
  if (b_z == 0.0 && b_x == 0.0) {
    fail(ErrorCode::InvalidArgument, "analytic qfi: field must be non-zero");
  }
  const double th = std::atan2(b_x, b_z);
  const double d = std::hypot(b_z, b_x);
  const double gt = gamma * t;
  const double d2t2 = d * d * t * t;
  const double sn = std::sin(th);
  const double cs = std::cos(th);
  const double half_decay = std::exp(-0.5 * gt);

  const double bracket =
      -24.0 * sn + 8.0 * std::sin(3.0 * th) + 8.0 * std::cos(2.0 * th) * (4.0 * d2t2 + 1.0) +
      std::cos(4.0 * th) * (8.0 * d2t2 - 1.0) + 24.0 * d2t2 +
      64.0 * d * t * sn * cs * cs * half_decay * std::sin(2.0 * d * t) *
          (sn - std::exp(gt) + 1.0) +
      32.0 * sn * sn * half_decay * std::cos(2.0 * d * t) * (sn * std::expm1(gt) - 1.0) -
      16.0 * (sn + 2.0) * sn * sn * sn * std::sinh(gt) -
      8.0 * sn * sn * (-4.0 * sn + std::cos(2.0 * th) - 5.0) * std::cosh(gt) +
      2.0 * std::pow(std::sin(2.0 * th), 2) * std::cos(4.0 * d * t) - 7.0;
  return std::exp(-gt) * bracket / (16.0 * d * d);
}

TaylorCoefficients taylor_coefficients(double b_z, double b_x, double gamma) {
  if (b_z == 0.0 && b_x == 0.0) {
    fail(ErrorCode::InvalidArgument, "taylor coefficients: field must be non-zero");
  }
  const double th = std::atan2(b_x, b_z);
  const double d2 = b_z * b_z + b_x * b_x;
  const double sn = std::sin(th);
  const double cs = std::cos(th);
  TaylorCoefficients c;
  c.fdot0 = gamma * sn * sn * cs * cs / d2;
  c.fddot0 = gamma * gamma * sn * sn / (2.0 * d2) * (6.0 * sn * sn + 4.0 * sn - 1.0) + 8.0;
  return c;
}

double standard_limit_formula(ScenarioKind kind, double rate, double t) {
  if (!(t >= 0.0)) fail(ErrorCode::InvalidArgument, "standard limit: time must be >= 0");
  switch (kind) {
    case ScenarioKind::StdSpont: return 4.0 * std::exp(-rate * t) * t * t;
    case ScenarioKind::StdDeph: return 4.0 * std::exp(-2.0 * rate * t) * t * t;
    default:
      fail(ErrorCode::InvalidArgument,
           std::string("standard limit: no formula for kind ") + to_string(kind));
  }
}

double heisenberg_limit(int n_spins, double t) {
  if (n_spins < 1) fail(ErrorCode::InvalidArgument, "heisenberg limit: n_spins must be >= 1");
  return 4.0 * n_spins * n_spins * t * t;
}

double single_spin_ground_qfi(double b_z, double b_x) {
  return ground_qfi([b_x](double b) { return single_spin_hamiltonian(b, b_x); }, b_z,
                    "single-spin ground state");
}

double single_spin_ground_qfi_closed_form(double b_z, double b_x) {
  const double d2 = b_x * b_x + b_z * b_z;
  if (d2 == 0.0) fail(ErrorCode::InvalidArgument, "ground qfi: field must be non-zero");
  return b_x * b_x / (d2 * d2);
}

double effective_two_spin_ground_qfi(double b_z, double b_x) {
  const double denom = 2.0 * b_x * b_x + (b_z - 1.0) * (b_z - 1.0);
  if (denom == 0.0) {
    fail(ErrorCode::InvalidArgument, "effective ground qfi: undefined at b_z = 1, b_x = 0");
  }
  return 2.0 * b_x * b_x / (denom * denom);
}

double exact_two_spin_ground_qfi(double b_z, double b_x) {
  if (!(b_x > 0.0)) fail(ErrorCode::InvalidArgument, "exact ground qfi: b_x must be > 0");
  return ground_qfi([b_x](double b) { return two_spin_hamiltonian(b, b_x); }, b_z,
                    "two-spin ground state");
}

double tradeoff_width(double f_max, double t) {
  if (!(t > 0.0)) fail(ErrorCode::InvalidArgument, "tradeoff: time must be > 0");
  if (!(f_max > 16.0 * t * t)) {
    fail(ErrorCode::OutOfRegime, "tradeoff: requires f_max > 16 t^2");
  }
  const double inv_root = 1.0 / std::sqrt(f_max);
  return 2.0 * std::sqrt(inv_root * (1.0 / (4.0 * t) - inv_root));
}

TradeoffPoint make_tradeoff_point(double f_max, double t) {
  return {f_max, tradeoff_width(f_max, t), t};
}

}  // namespace coopmetro
