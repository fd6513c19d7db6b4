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

#include <complex>

#include <Eigen/Dense>

namespace coopmetro {

using Complex = std::complex<double>;

// Dense complex matrices are the carrier for operators, states and
// superoperators. Hilbert-space dimensions are 2 or 4, superoperators up to 16.
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

enum class Axis { X, Y, Z };

/// Pauli matrix in the computational basis, sigma_z|0> = +|0>.
ComplexMatrix pauli(Axis which);

ComplexMatrix identity(Eigen::Index dim);

/// (sigma_x + i sigma_y)/2 = |0><1|.
ComplexMatrix sigma_plus();
/// (sigma_x - i sigma_y)/2 = |1><0|.
ComplexMatrix sigma_minus();

/// Kronecker product; the result has dimension dim(a) * dim(b).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// |ket><bra|
ComplexMatrix outer(const StateVector& ket, const StateVector& bra);

/// (m + m^dagger) / 2
ComplexMatrix hermitize(const ComplexMatrix& m);

/// max_{ij} |m_ij - conj(m_ji)|
double hermiticity_defect(const ComplexMatrix& m);

/// max_{ij} |m_ij|
double max_abs(const ComplexMatrix& m);

/// State vector with the given amplitudes normalised to unit length.
StateVector normalized(const StateVector& v);

}  // namespace coopmetro
