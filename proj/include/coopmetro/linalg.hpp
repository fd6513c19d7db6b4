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

#include "coopmetro/matrix.hpp"

namespace coopmetro {

/// Spectrum of a Hermitian matrix.
///
/// Eigenvalues are ascending and column k of `vectors` belongs to
/// `values[k]`. The phase of each column is fixed so that its first component
/// with modulus above 1e-12 is real and positive; inside a degenerate block
/// (gap below 1e-9) columns are ordered by descending modulus of their first
/// component.
struct HermitianEigensystem {
  RealVector values;
  ComplexMatrix vectors;

  Eigen::Index dim() const { return values.size(); }
  StateVector vector(Eigen::Index k) const { return vectors.col(k); }
};

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kDegeneracyGap = 1e-9;

/// Cyclic complex Jacobi diagonalisation. Throws InvalidOperator when `h`
/// departs from Hermitian by more than 1e-10 (relative to max(1, |h|_max)).
HermitianEigensystem eigh(const ComplexMatrix& h);

/// Matrix exponential by scaling and squaring with a diagonal Pade
/// approximant of degree 3..13 chosen from the 1-norm.
ComplexMatrix expm(const ComplexMatrix& m);

}  // namespace coopmetro
