// Copyright 2026 The qcorr Authors
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

#include "qcorr/eigen_jacobi.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace qcorr {

namespace {

template <int N>
double off_diagonal_norm(const Eigen::Matrix<Complex, N, N>& a) {
  double sum = 0.0;
  for (int p = 0; p < N; ++p)
    for (int q = p + 1; q < N; ++q) sum += 2.0 * std::norm(a(p, q));
  return std::sqrt(sum);
}

}  // namespace

template <int N>
EigenSystem<N> hermitian_eigensystem(const Eigen::Matrix<Complex, N, N>& m) {
  using MatrixN = Eigen::Matrix<Complex, N, N>;

  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol::hermiticity) throw NotHermitian(herm);

  MatrixN a = 0.5 * (m + m.adjoint());
  MatrixN v = MatrixN::Identity();

  constexpr int max_sweeps = 64;
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm<N>(a) < tol::jacobi_off_norm) {
      converged = true;
      break;
    }
    for (int p = 0; p < N; ++p) {
      for (int q = p + 1; q < N; ++q) {
        const Complex g = a(p, q);
        const double mag = std::abs(g);
        if (mag == 0.0) continue;

        // Rotation annihilating a(p,q): phase strips the argument of g,
        // then the usual stable-tangent real Jacobi angle.
        const Complex phase = g / mag;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        for (int k = 0; k < N; ++k) {
          if (k == p || k == q) continue;
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(phase) * akq;
          a(k, q) = s * phase * akp + c * akq;
          a(p, k) = std::conj(a(k, p));
          a(q, k) = std::conj(a(k, q));
        }
        a(p, p) = Complex(c * c * app + s * s * aqq - 2.0 * c * s * mag, 0.0);
        a(q, q) = Complex(s * s * app + c * c * aqq + 2.0 * c * s * mag, 0.0);
        a(p, q) = Complex(0.0, 0.0);
        a(q, p) = Complex(0.0, 0.0);

        for (int k = 0; k < N; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * std::conj(phase) * vkq;
          v(k, q) = s * phase * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged && off_diagonal_norm<N>(a) >= tol::jacobi_off_norm)
    throw NoConvergence("Jacobi sweeps exhausted without reaching off-norm 1e-14");

  EigenSystem<N> out;
  std::array<int, N> order;
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&a](int i, int j) {
    return a(i, i).real() > a(j, j).real();
  });
  for (int i = 0; i < N; ++i) {
    out.values(i) = a(order[i], order[i]).real();
    out.vectors.col(i) = v.col(order[i]);
  }
  return out;
}

template EigenSystem<2> hermitian_eigensystem<2>(const Matrix2& m);
template EigenSystem<4> hermitian_eigensystem<4>(const Matrix4& m);

}  // namespace qcorr
