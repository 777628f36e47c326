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

#include <vector>

#include "qcorr/density_matrix.hpp"
#include "qcorr/xstate.hpp"

namespace qcorr {

/// Emitter pair geometry: separation in units of the transition wavelength
/// and the cosine between the dipole moment and the interatomic axis.
struct CouplingGeometry {
  double separation = 0.0;     // r12 / lambda, > 0
  double dipole_cosine = 0.0;  // mu^ . r12^ in [-1, 1]
};

/// Dimensionless couplings of the two-qubit master equation, all in units of
/// the single-qubit decay rate.
struct DynamicsParams {
  double gamma = 0.0;   // Gamma_12 / Gamma, collective damping, |gamma| <= 1
  double omega = 0.0;   // Omega_12 / Gamma, dipole-dipole shift
  double omega0 = 0.0;  // omega_0 / Gamma, used only by the free-evolution term
};

/// Collective damping and dipole-dipole shift from the free-space
/// vacuum-coupling closed forms. Requires separation > 1e-6; the r -> 0
/// limit is served by dicke_state.
DynamicsParams coupling_from_geometry(const CouplingGeometry& g);

/// Closed-form state at time tau for two initially excited qubits:
/// a = exp(-2 tau) and b, c from the sub/superradiant channel amplitudes.
/// Within |1 - gamma| < 1e-6 the Dicke forms with a first-order correction in
/// (1 - gamma) are used to avoid the 1/(1 - gamma) cancellation.
SymmetricXState analytic_state(double gamma, double tau);

/// gamma -> 1 limit: a = exp(-2 tau), b = c = tau exp(-2 tau).
SymmetricXState dicke_state(double tau);

/// Full master-equation right-hand side in units of the single-qubit decay
/// rate: free evolution (omega0), excitation exchange (omega) and the
/// collective dissipator. The result is traceless and Hermitian.
Matrix4 lindblad_rhs(const DensityMatrix& m, const DynamicsParams& p);

struct TrajectoryPoint {
  double tau = 0.0;
  DensityMatrix state = DensityMatrix::trusted(Matrix4::Identity() * 0.25);
};

/// Fixed-step RK4 propagation of the master equation. By default the
/// free-evolution term is dropped (rotating frame); it only rotates
/// coherences that local unitaries would anyway leave invisible to every
/// correlation measure. Requires step in (0, 0.01] and tau_end in [0, 50].
/// Every emitted state is validated; throws StateInvariantViolated if the
/// trace drifts beyond 1e-10 or an invariant breaks mid-run.
std::vector<TrajectoryPoint> integrate(const DensityMatrix& initial,
                                       const DynamicsParams& p,
                                       double tau_end, double step,
                                       bool drop_free_evolution = true);

/// Populations of the (|eg> +- |ge>)/sqrt(2) channels.
struct PopulationPair {
  double symmetric = 0.0;
  double antisymmetric = 0.0;
};

/// symmetric = b + c, antisymmetric = b - c.
PopulationPair populations_sym_antisym(const SymmetricXState& s);

/// Same populations read off an arbitrary state.
PopulationPair populations_sym_antisym(const DensityMatrix& m);

}  // namespace qcorr
