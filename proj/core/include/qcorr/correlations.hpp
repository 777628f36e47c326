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

#include "qcorr/density_matrix.hpp"
#include "qcorr/information.hpp"
#include "qcorr/xstate.hpp"

namespace qcorr {

// ---------------------------------------------------------------------------
// Entanglement
// ---------------------------------------------------------------------------

/// Wootters concurrence: max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)}
/// over the descending eigenvalues of rho (sy x sy) rho* (sy x sy), clamped
/// at zero before the square root.
double concurrence(const DensityMatrix& m);

/// Pre-clamp concurrence gap Lambda for the symmetric X family, evaluated
/// from the closed multiset {sqrt(a d), sqrt(a d), |b - c|, |b + c|}.
double concurrence_lambda(const SymmetricXState& s);

/// max{0, Lambda}; equals concurrence() on the embedded matrix within 1e-10.
double concurrence_x_symmetric(const SymmetricXState& s);

// ---------------------------------------------------------------------------
// Measurement-based quantifiers
// ---------------------------------------------------------------------------

/// Measurement grid for the Bloch-sphere scan; the minimum accepted
/// resolution is 64 x 128 (polar x azimuthal).
struct MeasurementGrid {
  int polar = 64;
  int azimuthal = 128;
};

/// Average post-measurement entropy of the unmeasured qubit,
/// sum_j p_j S(rho_other | Pi_j), for a projective measurement of `side`
/// along `dir`. Outcomes with p_j < 1e-12 contribute zero.
double conditional_entropy(const DensityMatrix& m, Subsystem side,
                           const MeasurementDirection& dir);

struct DiscordResult {
  double value = 0.0;
  MeasurementDirection argmin;
};

/// Ollivier-Zurek discord with the projective measurement applied to `side`:
/// exhaustive grid scan followed by Nelder-Mead refinement from the best
/// cell.
DiscordResult discord_min(const DensityMatrix& m, Subsystem side,
                          const MeasurementGrid& grid = {});

struct MidResult {
  double value = 0.0;
  bool degenerate = false;  // a reduced spectrum was degenerate within 1e-9
};

/// Measurement-induced disturbance I(rho) - I(Pi(rho)) with Pi built from the
/// eigenprojectors of the reduced states; the computational basis is used on
/// a side whose reduced spectrum is degenerate within 1e-9.
MidResult mid(const DensityMatrix& m);

/// Henderson-Vedral classical correlations, measurement on `side`:
/// max over directions of S(rho_other) - sum_j p_j S(rho_other | Pi_j).
double classical_correlation(const DensityMatrix& m, Subsystem side,
                             const MeasurementGrid& grid = {});

// ---------------------------------------------------------------------------
// Closed forms for the symmetric X family
// ---------------------------------------------------------------------------

enum class DiscordBranch { D1, D2 };

struct BranchValues {
  double d1 = 0.0;  // computational-basis measurement
  double d2 = 0.0;  // equatorial measurement
};

/// Both discord branches; alpha^2 = (a-d)^2 + 4c^2 = [2(a+b)-1]^2 + 4c^2.
BranchValues discord_branches(const SymmetricXState& s);

struct XDiscord {
  double value = 0.0;
  DiscordBranch branch = DiscordBranch::D1;  // ties report D1
};

/// min{D1, D2} for the symmetric X family.
XDiscord discord_x_symmetric(const SymmetricXState& s);

/// Closed form -2b log2 b + (b-c) log2(b-c) + (b+c) log2(b+c); identical to
/// the D1 branch for every valid input.
double mid_x_symmetric(const SymmetricXState& s);

/// Mutual information of the embedded state, in closed form.
double mutual_information(const SymmetricXState& s);

/// Classical correlations on the selected branch; satisfies
/// CC_branch = mutual_information - D_branch within 1e-9.
double classical_correlation_x_symmetric(const SymmetricXState& s,
                                         DiscordBranch branch);

// ---------------------------------------------------------------------------
// Aggregate report
// ---------------------------------------------------------------------------

/// All correlation measures evaluated at one instant.
struct CorrelationReport {
  double mutual_info = 0.0;
  double discord = 0.0;
  double mid = 0.0;
  double classical = 0.0;
  double concurrence = 0.0;
  DiscordBranch discord_branch = DiscordBranch::D1;
  bool mid_degenerate = false;
  bool x_fast_path = false;  // closed forms used instead of the grid scan
};

/// Uses the symmetric-X closed forms when the matrix matches that pattern
/// within 1e-12, the grid/eigenprojector paths otherwise.
CorrelationReport full_report(const DensityMatrix& m, Subsystem side,
                              const MeasurementGrid& grid = {});

}  // namespace qcorr
