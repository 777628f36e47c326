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

#pragma once

#include <Eigen/Dense>

#include "qcorr/density_matrix.hpp"

namespace qcorr {

/// Eigendecomposition of a small Hermitian matrix.
///
/// values are sorted in descending order and vectors holds the matching
/// orthonormal eigenvectors as columns, so m ~= vectors * diag(values) *
/// vectors.adjoint() with a max-norm residual below 1e-10.
template <int N>
struct EigenSystem {
  Eigen::Matrix<double, N, 1> values;
  Eigen::Matrix<Complex, N, N> vectors;

  Eigen::Matrix<Complex, N, N> reconstruct() const {
    return vectors * values.template cast<Complex>().asDiagonal() *
           vectors.adjoint();
  }
};

/// Cyclic complex Jacobi rotations, iterated until the off-diagonal Frobenius
/// norm drops below 1e-14. The input must be Hermitian within 1e-12. Throws
/// NoConvergence if the sweep budget is exhausted.
template <int N>
EigenSystem<N> hermitian_eigensystem(const Eigen::Matrix<Complex, N, N>& m);

extern template EigenSystem<2> hermitian_eigensystem<2>(const Matrix2& m);
extern template EigenSystem<4> hermitian_eigensystem<4>(const Matrix4& m);

}  // namespace qcorr
