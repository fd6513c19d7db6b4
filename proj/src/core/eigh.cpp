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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "coopmetro/error.hpp"
#include "coopmetro/linalg.hpp"

namespace coopmetro {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kGaugeThreshold = 1e-12;

// One complex Jacobi rotation annihilating a(p, q).
//
// With a_pq = |b| e^{i phi} the unitary G = diag(1, e^{-i phi}) R turns the
// pair into a real symmetric 2x2 block which the real rotation
// R = [[c, s], [-s, c]] diagonalises.
void rotate(ComplexMatrix& a, ComplexMatrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex b = a(p, q);
  const double mod = std::abs(b);
  const Complex phase_conj = std::conj(b) / mod;

  const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mod);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex g_pp = c;
  const Complex g_pq = s;
  const Complex g_qp = -s * phase_conj;
  const Complex g_qq = c * phase_conj;

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * g_pp + akq * g_qp;
    a(k, q) = akp * g_pq + akq * g_qq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
    a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * g_pp + vkq * g_qp;
    v(k, q) = vkp * g_pq + vkq * g_qq;
  }
}

bool negligible(double off, double diag) { return std::abs(diag) + 100.0 * off == std::abs(diag); }

void fix_phase(ComplexMatrix& v, Eigen::Index col) {
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    const double mod = std::abs(v(i, col));
    if (mod > kGaugeThreshold) {
      v.col(col) *= std::conj(v(i, col)) / mod;
      v(i, col) = mod;
      return;
    }
  }
}

}  // namespace

HermitianEigensystem eigh(const ComplexMatrix& h) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    fail(ErrorCode::Dimension, "eigh: matrix must be square and non-empty");
  }
  const double scale = std::max(1.0, max_abs(h));
  if (hermiticity_defect(h) > kHermitianTolerance * scale) {
    fail(ErrorCode::InvalidOperator, "eigh: matrix is not Hermitian");
  }

  const Eigen::Index n = h.rows();
  ComplexMatrix a = hermitize(h);
  ComplexMatrix v = ComplexMatrix::Identity(n, n);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    }
    if (off == 0.0) break;

    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double mod = std::abs(a(p, q));
        if (mod == 0.0) continue;
        if (sweep > 3 && negligible(mod, a(p, p).real()) && negligible(mod, a(q, q).real())) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotate(a, v, p, q);
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() < a(j, j).real();
  });

  // Within each block of nearly equal eigenvalues, larger first component first.
  for (std::size_t start = 0; start < order.size();) {
    std::size_t end = start + 1;
    while (end < order.size() &&
           a(order[end], order[end]).real() - a(order[end - 1], order[end - 1]).real() <
               kDegeneracyGap) {
      ++end;
    }
    if (end - start > 1) {
      std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(start),
                       order.begin() + static_cast<std::ptrdiff_t>(end),
                       [&](Eigen::Index i, Eigen::Index j) {
                         return std::abs(v(0, i)) > std::abs(v(0, j));
                       });
    }
    start = end;
  }

  HermitianEigensystem out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src).real();
    out.vectors.col(k) = v.col(src);
    fix_phase(out.vectors, k);
  }
  return out;
}

}  // namespace coopmetro
