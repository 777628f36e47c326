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

#include <complex>

#include <Eigen/Dense>

#include "qcorr/errors.hpp"

namespace qcorr {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;

/// Numerical tolerances shared across the library.
namespace tol {
inline constexpr double hermiticity = 1e-12;
inline constexpr double trace_one = 1e-10;
inline constexpr double positivity = 1e-10;  // eigenvalue clamp window
inline constexpr double jacobi_off_norm = 1e-14;
inline constexpr double projector = 1e-12;
inline constexpr double reduced_degeneracy = 1e-9;
inline constexpr double x_pattern = 1e-12;
inline constexpr double null_outcome = 1e-12;
}  // namespace tol

enum class Subsystem { A, B };

inline Subsystem other(Subsystem s) {
  return s == Subsystem::A ? Subsystem::B : Subsystem::A;
}

// Product basis order (|ee>, |eg>, |ge>, |gg>); e is single-qubit index 0.
namespace basis {
inline constexpr int ee = 0;
inline constexpr int eg = 1;
inline constexpr int ge = 2;
inline constexpr int gg = 3;
}  // namespace basis

Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();

/// Kronecker product with the first factor acting on qubit A.
Matrix4 kron(const Matrix2& a, const Matrix2& b);

Vector4c singlet_ket();
Vector4c symmetric_ket();

/// Two-qubit state, Hermitian, unit trace, positive up to numerical noise.
class DensityMatrix {
 public:
  /// Checks all invariants, clamps eigenvalues in [-1e-10, 0) to zero and
  /// renormalizes the trace. Throws NotHermitian / TraceNotOne / NotPositive.
  static DensityMatrix validated(const Matrix4& m);

  /// No checks; for internal paths that construct valid states by design.
  static DensityMatrix trusted(const Matrix4& m) { return DensityMatrix(m); }

  static DensityMatrix pure(const Vector4c& ket);

  const Matrix4& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

 private:
  explicit DensityMatrix(const Matrix4& m) : m_(m) {}
  Matrix4 m_;
};

/// Validates a raw 4x4 matrix as a two-qubit state.
DensityMatrix validate_density_matrix(const Matrix4& m);

/// Single-qubit state obtained by tracing out the other qubit.
class ReducedState {
 public:
  ReducedState(const Matrix2& m, Subsystem label) : m_(m), label_(label) {}
  const Matrix2& matrix() const { return m_; }
  Subsystem label() const { return label_; }

 private:
  Matrix2 m_;
  Subsystem label_;
};

/// Contracts the discarded qubit's indices; `keep` names the surviving one.
ReducedState partial_trace(const DensityMatrix& m, Subsystem keep);

}  // namespace qcorr
