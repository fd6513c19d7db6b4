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

#include "coopmetro/qfi.hpp"

#include <cmath>

#include "coopmetro/error.hpp"
#include "coopmetro/linalg.hpp"

namespace coopmetro {
namespace {

constexpr double kNegativeQfiTolerance = -1e-9;
constexpr double kNearPureDeterminant = 1e-10;
constexpr double kSldEigenvalueFloor = 1e-12;
constexpr double kDerivativeHermitianTolerance = 1e-8;

QfiResult make_result(double value, QfiMethod method) {
  if (!std::isfinite(value) || value < kNegativeQfiTolerance) {
    fail(ErrorCode::NumericalFailure,
         "qfi: invalid value " + std::to_string(value) + " from " + to_string(method));
  }
  return {std::max(0.0, value), method, std::nullopt};
}

void check_derivative(const ComplexMatrix& drho, Eigen::Index dim, const char* who) {
  if (drho.rows() != dim || drho.cols() != dim) {
    fail(ErrorCode::Dimension, std::string(who) + ": derivative dimension mismatch");
  }
  if (hermiticity_defect(drho) > kDerivativeHermitianTolerance) {
    fail(ErrorCode::InvalidArgument, std::string(who) + ": derivative is not Hermitian");
  }
}

StateVector align_phase(const StateVector& v, const StateVector& reference) {
  const Complex overlap = reference.dot(v);
  const double mod = std::abs(overlap);
  if (mod == 0.0) return v;
  return v * (std::conj(overlap) / mod);
}

}  // namespace

const char* to_string(QfiMethod method) noexcept {
  switch (method) {
    case QfiMethod::Pure: return "pure";
    case QfiMethod::QubitClosedForm: return "qubit-closed-form";
    case QfiMethod::SldSpectral: return "sld-spectral";
  }
  return "unknown";
}

QfiResult qfi_pure(const StateVector& psi, const StateVector& dpsi) {
  if (std::abs(psi.norm() - 1.0) > 1e-12) {
    fail(ErrorCode::InvalidArgument, "qfi_pure: state is not normalised");
  }
  if (dpsi.size() != psi.size()) {
    fail(ErrorCode::Dimension, "qfi_pure: derivative dimension mismatch");
  }
  const double value = 4.0 * (dpsi.squaredNorm() - std::norm(dpsi.dot(psi)));
  return make_result(value, QfiMethod::Pure);
}

QfiResult qfi_qubit(const DensityMatrix& rho, const ComplexMatrix& drho) {
  if (rho.dim() != 2) fail(ErrorCode::Dimension, "qfi_qubit: state must be a qubit");
  check_derivative(drho, 2, "qfi_qubit");

  const ComplexMatrix& r = rho.matrix();
  const double det = r.determinant().real();
  if (det < kNearPureDeterminant) return qfi_sld(rho, drho);

  const ComplexMatrix rd = r * drho;
  const double value = (drho * drho).trace().real() + (rd * rd).trace().real() / det;
  return make_result(value, QfiMethod::QubitClosedForm);
}

QfiResult qfi_sld(const DensityMatrix& rho, const ComplexMatrix& drho) {
  check_derivative(drho, rho.dim(), "qfi_sld");
  const HermitianEigensystem es = eigh(rho.matrix());
  const ComplexMatrix d = es.vectors.adjoint() * drho * es.vectors;
  double value = 0.0;
  for (Eigen::Index i = 0; i < es.dim(); ++i) {
    for (Eigen::Index j = 0; j < es.dim(); ++j) {
      const double denom = es.values(i) + es.values(j);
      if (denom > kSldEigenvalueFloor) value += 2.0 * std::norm(d(i, j)) / denom;
    }
  }
  return make_result(value, QfiMethod::SldSpectral);
}

double cramer_rao_bound(double f_q, int repetitions) {
  if (!(f_q > 0.0) || !std::isfinite(f_q)) {
    fail(ErrorCode::InvalidArgument, "cramer-rao bound: undefined for f_q <= 0");
  }
  if (repetitions < 1) fail(ErrorCode::InvalidArgument, "cramer-rao bound: m must be >= 1");
  return 1.0 / std::sqrt(static_cast<double>(repetitions) * f_q);
}

double default_fd_step(double nominal) { return 1e-5 * std::max(1.0, std::abs(nominal)); }

ComplexMatrix differentiate_state(const StateFamily& family, double step) {
  const double h = step > 0.0 ? step : default_fd_step(family.nominal);
  const double b = family.nominal;
  auto at = [&](double x) { return family.evaluate(x).matrix(); };

  const ComplexMatrix coarse = (at(b + h) - at(b - h)) / (2.0 * h);
  const ComplexMatrix fine = (at(b + h / 2) - at(b - h / 2)) / h;
  return hermitize((4.0 * fine - coarse) / 3.0);
}

StateVector differentiate_pure(const PureStateFamily& family, double step) {
  const double h = step > 0.0 ? step : default_fd_step(family.nominal);
  const double b = family.nominal;
  const StateVector ref = family.evaluate(b);
  auto at = [&](double x) { return align_phase(family.evaluate(x), ref); };

  const StateVector coarse = (at(b + h) - at(b - h)) / (2.0 * h);
  const StateVector fine = (at(b + h / 2) - at(b - h / 2)) / h;
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace coopmetro
