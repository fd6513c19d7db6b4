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

#include <algorithm>
#include <cmath>
#include <random>

#include "coopmetro/matrix.hpp"

namespace testing {

using coopmetro::Complex;
using coopmetro::ComplexMatrix;
using coopmetro::StateVector;

inline double rel_err(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20261018);
  return engine;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline ComplexMatrix random_hermitian(Eigen::Index dim, double scale = 1.0) {
  ComplexMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = Complex(uniform(-1, 1), uniform(-1, 1));
  }
  return scale * (m + m.adjoint()) / 2.0;
}

inline StateVector random_state(Eigen::Index dim) {
  StateVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(uniform(-1, 1), uniform(-1, 1));
  return v.normalized();
}

}  // namespace testing
