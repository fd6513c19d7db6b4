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

#include <functional>
#include <optional>

#include "coopmetro/lindblad.hpp"
#include "coopmetro/matrix.hpp"

namespace coopmetro {

enum class QfiMethod { Pure, QubitClosedForm, SldSpectral };

const char* to_string(QfiMethod method) noexcept;

struct QfiResult {
  double value = 0.0;
  QfiMethod method = QfiMethod::SldSpectral;
  std::optional<double> fd_step;
};

/// Parameter-to-state map b -> rho(b) with a nominal point. `evaluate` must be
/// re-entrant; it is called concurrently during sweeps.
struct StateFamily {
  std::function<DensityMatrix(double)> evaluate;
  double nominal = 0.0;
};

/// Parameter-to-ket map used for ground-state sensitivity.
struct PureStateFamily {
  std::function<StateVector(double)> evaluate;
  double nominal = 0.0;
};

/// 4 (<dpsi|dpsi> - |<dpsi|psi>|^2)
QfiResult qfi_pure(const StateVector& psi, const StateVector& dpsi);

/// Dittmann's qubit formula Tr[(d rho)^2] + Tr[(rho d rho)^2] / det(rho).
/// Falls back to the spectral SLD form (and reports it) when det(rho) < 1e-10.
QfiResult qfi_qubit(const DensityMatrix& rho, const ComplexMatrix& drho);

/// 2 sum_{l_i + l_j > 1e-12} |<i|d rho|j>|^2 / (l_i + l_j) over the spectrum of rho.
QfiResult qfi_sld(const DensityMatrix& rho, const ComplexMatrix& drho);

/// Cramer-Rao lower bound 1 / sqrt(m F_Q) on the standard deviation of an
/// unbiased estimator after m repetitions.
double cramer_rao_bound(double f_q, int repetitions);

/// 1e-5 * max(1, |b0|)
double default_fd_step(double nominal);

/// Central difference at steps h and h/2 combined by one Richardson step,
/// (4 D_{h/2} - D_h) / 3, then Hermitised. `step` <= 0 selects the default.
ComplexMatrix differentiate_state(const StateFamily& family, double step = 0.0);

/// Same scheme for kets; every sample is first rotated so that its overlap
/// with psi(b0) is real and positive.
StateVector differentiate_pure(const PureStateFamily& family, double step = 0.0);

}  // namespace coopmetro
