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

#include "qcorr/density_matrix.hpp"

#include <cmath>

#include "qcorr/eigen_jacobi.hpp"

namespace qcorr {

Matrix2 pauli_x() {
  Matrix2 m;
  m << 0, 1, 1, 0;
  return m;
}

Matrix2 pauli_y() {
  Matrix2 m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Matrix2 pauli_z() {
  Matrix2 m;
  m << 1, 0, 0, -1;
  return m;
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Vector4c singlet_ket() {
  Vector4c k = Vector4c::Zero();
  const double r = 1.0 / std::sqrt(2.0);
  k(basis::eg) = r;
  k(basis::ge) = -r;
  return k;
}

Vector4c symmetric_ket() {
  Vector4c k = Vector4c::Zero();
  const double r = 1.0 / std::sqrt(2.0);
  k(basis::eg) = r;
  k(basis::ge) = r;
  return k;
}

DensityMatrix DensityMatrix::pure(const Vector4c& ket) {
  Vector4c n = ket / ket.norm();
  return DensityMatrix::trusted(n * n.adjoint());
}

DensityMatrix DensityMatrix::validated(const Matrix4& m) {
  double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol::hermiticity) throw NotHermitian(herm);

  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > tol::trace_one) throw TraceNotOne(trace);

  Matrix4 sym = 0.5 * (m + m.adjoint());
  EigenSystem<4> es = hermitian_eigensystem<4>(sym);
  const double lambda_min = es.values.minCoeff();
  if (lambda_min < -tol::positivity) throw NotPositive(lambda_min);

  if (lambda_min < 0.0) {
    // Clamp eigenvalues in [-1e-10, 0) to zero and renormalize the trace.
    Eigen::Vector4d clamped = es.values.cwiseMax(0.0);
    Matrix4 rebuilt = es.vectors * clamped.cast<Complex>().asDiagonal() *
                      es.vectors.adjoint();
    rebuilt = 0.5 * (rebuilt + rebuilt.adjoint());
    rebuilt /= rebuilt.trace().real();
    return DensityMatrix(rebuilt);
  }

  return DensityMatrix(sym / trace);
}

DensityMatrix validate_density_matrix(const Matrix4& m) {
  return DensityMatrix::validated(m);
}

ReducedState partial_trace(const DensityMatrix& m, Subsystem keep) {
  const Matrix4& r = m.matrix();
  Matrix2 out = Matrix2::Zero();
  if (keep == Subsystem::A) {
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l)
        out(k, l) = r(2 * k + 0, 2 * l + 0) + r(2 * k + 1, 2 * l + 1);
  } else {
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q)
        out(p, q) = r(0 + p, 0 + q) + r(2 + p, 2 + q);
  }
  return ReducedState(out, keep);
}

}  // namespace qcorr
