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

#include "coopmetro/lindblad.hpp"

#include <cmath>
#include <string>

#include "coopmetro/error.hpp"
#include "coopmetro/linalg.hpp"

namespace coopmetro {
namespace {

// Returns an empty string when m satisfies the density-matrix invariants.
std::string density_violation(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || (m.rows() != 2 && m.rows() != 4)) {
    return "dimension must be 2 or 4";
  }
  if (!m.allFinite()) return "non-finite entries";
  if (hermiticity_defect(m) > kHermitianTolerance) return "not Hermitian";
  const double trace_error = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_error > kTraceTolerance) {
    return "trace differs from one by " + std::to_string(trace_error);
  }
  const double lowest = eigh(hermitize(m)).values(0);
  if (lowest < kPositivityTolerance) {
    return "negative eigenvalue " + std::to_string(lowest);
  }
  return {};
}

DensityMatrix finish(const ComplexMatrix& raw, const char* who) {
  ComplexMatrix m = hermitize(raw);
  if (auto why = density_violation(m); !why.empty()) {
    fail(ErrorCode::NumericalFailure, std::string(who) + ": evolved state invalid, " + why);
  }
  return DensityMatrix(m);
}

}  // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix& m) {
  if (auto why = density_violation(m); !why.empty()) {
    fail(ErrorCode::InvalidArgument, "density matrix: " + why);
  }
  m_ = hermitize(m);
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-12) {
    fail(ErrorCode::InvalidArgument, "density matrix: state vector is not normalised");
  }
  return DensityMatrix(outer(psi, psi));
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

double DensityMatrix::min_eigenvalue() const { return eigh(m_).values(0); }

LindbladModel::LindbladModel(ComplexMatrix hamiltonian, std::vector<LindbladChannel> channels)
    : hamiltonian_(std::move(hamiltonian)), channels_(std::move(channels)) {
  const Eigen::Index d = hamiltonian_.rows();
  if (d == 0 || hamiltonian_.cols() != d) {
    fail(ErrorCode::InvalidModel, "lindblad model: Hamiltonian must be square");
  }
  if (hermiticity_defect(hamiltonian_) > kHermitianTolerance * std::max(1.0, max_abs(hamiltonian_))) {
    fail(ErrorCode::InvalidModel, "lindblad model: Hamiltonian is not Hermitian");
  }
  for (const auto& ch : channels_) {
    if (!(ch.rate >= 0.0) || !std::isfinite(ch.rate)) {
      fail(ErrorCode::InvalidModel, "lindblad model: channel rate must be finite and >= 0");
    }
    if (ch.jump.rows() != d || ch.jump.cols() != d) {
      fail(ErrorCode::InvalidModel, "lindblad model: jump operator dimension mismatch");
    }
  }
}

ComplexMatrix LindbladModel::generator(const ComplexMatrix& rho) const {
  const Complex i(0.0, 1.0);
  ComplexMatrix out = -i * (hamiltonian_ * rho - rho * hamiltonian_);
  for (const auto& ch : channels_) {
    const ComplexMatrix& l = ch.jump;
    const ComplexMatrix ldl = l.adjoint() * l;
    out += ch.rate * (l * rho * l.adjoint() - 0.5 * (ldl * rho + rho * ldl));
  }
  return out;
}

Eigen::VectorXcd vectorize(const ComplexMatrix& rho) {
  return Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
}

ComplexMatrix unvectorize(const Eigen::VectorXcd& v, Eigen::Index dim) {
  if (v.size() != dim * dim) {
    fail(ErrorCode::Dimension, "unvectorize: length is not dim^2");
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), dim, dim);
}

ComplexMatrix liouvillian(const LindbladModel& model) {
  const Eigen::Index d = model.dim();
  const ComplexMatrix id = identity(d);
  const ComplexMatrix& h = model.hamiltonian();
  const Complex i(0.0, 1.0);

  ComplexMatrix l = -i * (tensor(id, h) - tensor(h.transpose(), id));
  for (const auto& ch : model.channels()) {
    const ComplexMatrix& j = ch.jump;
    const ComplexMatrix jdj = j.adjoint() * j;
    l += ch.rate * (tensor(j.conjugate(), j) - 0.5 * tensor(id, jdj) -
                    0.5 * tensor(jdj.transpose(), id));
  }
  return l;
}

Propagator::Propagator(const LindbladModel& model)
    : liouvillian_(coopmetro::liouvillian(model)), dim_(model.dim()) {}

DensityMatrix Propagator::evolve(const DensityMatrix& rho0, double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    fail(ErrorCode::InvalidArgument, "propagate: time must be finite and >= 0");
  }
  if (rho0.dim() != dim_) {
    fail(ErrorCode::Dimension, "propagate: state and model dimensions differ");
  }
  if (t == 0.0) return rho0;
  const Eigen::VectorXcd v = expm(liouvillian_ * t) * vectorize(rho0.matrix());
  return finish(unvectorize(v, dim_), "propagate");
}

DensityMatrix propagate(const LindbladModel& model, const DensityMatrix& rho0, double t) {
  return Propagator(model).evolve(rho0, t);
}

DensityMatrix propagate_rk4(const LindbladModel& model, const DensityMatrix& rho0, double t,
                            int steps) {
  if (steps < 1) fail(ErrorCode::InvalidArgument, "propagate_rk4: steps must be >= 1");
  if (!(t >= 0.0) || !std::isfinite(t)) {
    fail(ErrorCode::InvalidArgument, "propagate_rk4: time must be finite and >= 0");
  }
  if (rho0.dim() != model.dim()) {
    fail(ErrorCode::Dimension, "propagate_rk4: state and model dimensions differ");
  }
  if (t == 0.0) return rho0;

  const double dt = t / steps;
  ComplexMatrix rho = rho0.matrix();
  for (int n = 0; n < steps; ++n) {
    const ComplexMatrix k1 = model.generator(rho);
    const ComplexMatrix k2 = model.generator(rho + 0.5 * dt * k1);
    const ComplexMatrix k3 = model.generator(rho + 0.5 * dt * k2);
    const ComplexMatrix k4 = model.generator(rho + dt * k3);
    rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return finish(rho, "propagate_rk4");
}

}  // namespace coopmetro
