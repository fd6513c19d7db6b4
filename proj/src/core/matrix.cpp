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

#include "coopmetro/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "coopmetro/error.hpp"

namespace coopmetro {

ComplexMatrix pauli(Axis which) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  switch (which) {
    case Axis::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Axis::Y:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    case Axis::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

ComplexMatrix identity(Eigen::Index dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix sigma_plus() {
  return (pauli(Axis::X) + Complex(0.0, 1.0) * pauli(Axis::Y)) / 2.0;
}

ComplexMatrix sigma_minus() {
  return (pauli(Axis::X) - Complex(0.0, 1.0) * pauli(Axis::Y)) / 2.0;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols();
  const Eigen::Index rb = b.rows(), cb = b.cols();
  ComplexMatrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i) {
    for (Eigen::Index j = 0; j < ca; ++j) {
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix outer(const StateVector& ket, const StateVector& bra) {
  return ket * bra.adjoint();
}

ComplexMatrix hermitize(const ComplexMatrix& m) {
  ComplexMatrix out = (m + m.adjoint()) / 2.0;
  // Exact zero defect: mirror the upper triangle and make the diagonal real.
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    out(i, i) = out(i, i).real();
    for (Eigen::Index j = i + 1; j < out.cols(); ++j) {
      out(j, i) = std::conj(out(i, j));
    }
  }
  return out;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    fail(ErrorCode::Dimension, "hermiticity_defect: matrix is not square");
  }
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

StateVector normalized(const StateVector& v) {
  const double n = v.norm();
  if (!(n > 0.0)) {
    fail(ErrorCode::InvalidArgument, "normalized: zero vector");
  }
  return v / n;
}

}  // namespace coopmetro
