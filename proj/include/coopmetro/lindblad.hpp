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

#include <vector>

#include "coopmetro/matrix.hpp"

namespace coopmetro {

inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPositivityTolerance = -1e-9;

/// Trace-one Hermitian positive-semidefinite state of dimension 2 or 4.
///
/// Construction validates the invariants (Hermitian and trace to 1e-10,
/// smallest eigenvalue >= -1e-9) and stores the exactly Hermitian part.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& m);

  static DensityMatrix from_pure(const StateVector& psi);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  double purity() const;
  double min_eigenvalue() const;

 private:
  ComplexMatrix m_;
};

struct LindbladChannel {
  double rate = 0.0;
  ComplexMatrix jump;
};

/// H plus dissipators sum_i rate_i D[L_i]. Construction checks that H is
/// Hermitian, rates are non-negative and all operators share one dimension.
class LindbladModel {
 public:
  LindbladModel(ComplexMatrix hamiltonian, std::vector<LindbladChannel> channels);

  const ComplexMatrix& hamiltonian() const noexcept { return hamiltonian_; }
  const std::vector<LindbladChannel>& channels() const noexcept { return channels_; }
  Eigen::Index dim() const noexcept { return hamiltonian_.rows(); }

  /// Right-hand side of the master equation applied to rho.
  ComplexMatrix generator(const ComplexMatrix& rho) const;

 private:
  ComplexMatrix hamiltonian_;
  std::vector<LindbladChannel> channels_;
};

/// Column-stacking vectorisation: vec(rho)[i + j*d] = rho(i, j), so that
/// vec(A rho B) = (B^T kron A) vec(rho).
Eigen::VectorXcd vectorize(const ComplexMatrix& rho);
ComplexMatrix unvectorize(const Eigen::VectorXcd& v, Eigen::Index dim);

/// d/dt vec(rho) = L vec(rho).
ComplexMatrix liouvillian(const LindbladModel& model);

/// Holds the Liouvillian of one model so repeated evolutions over different
/// times do not rebuild it. Immutable after construction.
class Propagator {
 public:
  explicit Propagator(const LindbladModel& model);

  DensityMatrix evolve(const DensityMatrix& rho0, double t) const;
  const ComplexMatrix& liouvillian() const noexcept { return liouvillian_; }
  Eigen::Index dim() const noexcept { return dim_; }

 private:
  ComplexMatrix liouvillian_;
  Eigen::Index dim_;
};

/// rho(t) = unvec(exp(L t) vec(rho0)), re-Hermitised and validated.
DensityMatrix propagate(const LindbladModel& model, const DensityMatrix& rho0, double t);

/// Fixed-step classical RK4 on the matrix form of the master equation.
/// Only used to cross-check `propagate`.
DensityMatrix propagate_rk4(const LindbladModel& model, const DensityMatrix& rho0, double t,
                            int steps);

}  // namespace coopmetro
