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

#include <array>
#include <optional>

#include "qcorr/density_matrix.hpp"

namespace qcorr {

/// p * log2(p) with the 0 log 0 = 0 convention.
inline double plog2(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

/// Binary Shannon entropy in bits.
inline double binary_entropy(double p) { return -plog2(p) - plog2(1.0 - p); }

/// Von Neumann entropy in bits, -sum lambda_i log2 lambda_i.
double von_neumann_entropy(const DensityMatrix& m);
double von_neumann_entropy(const ReducedState& m);

/// S(rho_A) + S(rho_B) - S(rho_AB), in [0, 2].
double mutual_information(const DensityMatrix& m);

/// Polar/azimuthal angles of a Bloch vector; the projector pair is
/// (I +- n.sigma)/2.
struct MeasurementDirection {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2*pi)
};

using ProjectorPair = std::array<Matrix2, 2>;

/// Rank-one projectors onto the +-n eigenstates of n.sigma.
ProjectorPair bloch_projectors(const MeasurementDirection& dir);

/// Non-selective local projective measurement
/// rho -> sum_ij (Pa_i x Pb_j) rho (Pa_i x Pb_j); a missing pair means
/// identity action on that side. Each supplied pair must be complete and
/// orthogonal within 1e-12, else IncompleteProjectorSet.
DensityMatrix apply_local_projectors(const DensityMatrix& m,
                                     const std::optional<ProjectorPair>& pa,
                                     const std::optional<ProjectorPair>& pb);

}  // namespace qcorr
