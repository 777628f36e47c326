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

#include "qcorr/information.hpp"

#include <cmath>

#include "qcorr/eigen_jacobi.hpp"

namespace qcorr {

namespace {

template <int N>
double spectrum_entropy(const Eigen::Matrix<Complex, N, N>& m) {
  EigenSystem<N> es = hermitian_eigensystem<N>(m);
  double s = 0.0;
  for (int i = 0; i < N; ++i) s -= plog2(es.values(i));
  return s;
}

void check_projector_pair(const ProjectorPair& p) {
  const double completeness =
      (p[0] + p[1] - Matrix2::Identity()).cwiseAbs().maxCoeff();
  if (completeness > tol::projector)
    throw IncompleteProjectorSet(
        "projector pair does not sum to identity: deviation = " +
        std::to_string(completeness));
  const double overlap = (p[0] * p[1]).cwiseAbs().maxCoeff();
  if (overlap > tol::projector)
    throw IncompleteProjectorSet(
        "projector pair is not orthogonal: |P0 P1| = " +
        std::to_string(overlap));
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& m) {
  return spectrum_entropy<4>(m.matrix());
}

double von_neumann_entropy(const ReducedState& m) {
  return spectrum_entropy<2>(m.matrix());
}

double mutual_information(const DensityMatrix& m) {
  return von_neumann_entropy(partial_trace(m, Subsystem::A)) +
         von_neumann_entropy(partial_trace(m, Subsystem::B)) -
         von_neumann_entropy(m);
}

ProjectorPair bloch_projectors(const MeasurementDirection& dir) {
  const double nx = std::sin(dir.theta) * std::cos(dir.phi);
  const double ny = std::sin(dir.theta) * std::sin(dir.phi);
  const double nz = std::cos(dir.theta);
  Matrix2 ns;
  ns << Complex(nz, 0.0), Complex(nx, -ny), Complex(nx, ny), Complex(-nz, 0.0);
  return {0.5 * (Matrix2::Identity() + ns), 0.5 * (Matrix2::Identity() - ns)};
}

DensityMatrix apply_local_projectors(const DensityMatrix& m,
                                     const std::optional<ProjectorPair>& pa,
                                     const std::optional<ProjectorPair>& pb) {
  if (pa) check_projector_pair(*pa);
  if (pb) check_projector_pair(*pb);

  const ProjectorPair identity = {Matrix2::Identity(), Matrix2::Zero()};
  const ProjectorPair& a = pa ? *pa : identity;
  const ProjectorPair& b = pb ? *pb : identity;
  const int na = pa ? 2 : 1;
  const int nb = pb ? 2 : 1;

  Matrix4 out = Matrix4::Zero();
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      const Matrix4 pij = kron(a[i], b[j]);
      out += pij * m.matrix() * pij;
    }
  }
  out = 0.5 * (out + out.adjoint());
  return DensityMatrix::trusted(out);
}

}  // namespace qcorr
