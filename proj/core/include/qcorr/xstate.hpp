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

#include <optional>

#include "qcorr/density_matrix.hpp"

namespace qcorr {

/// X state with equal middle populations and a real inner coherence:
///
///   | a  0  0  0 |
///   | 0  b  c  0 |        d = 1 - a - 2b
///   | 0  c  b  0 |
///   | 0  0  0  d |
///
/// Valid when a, b, d are in [0, 1] and |c| <= b.
struct SymmetricXState {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double d() const { return 1.0 - a - 2.0 * b; }
  Matrix4 matrix() const;
  DensityMatrix to_density_matrix() const { return DensityMatrix::trusted(matrix()); }
};

/// Validates the population/coherence bounds; values within 1e-12 of a bound
/// are snapped onto it. Throws ParamOutOfRange otherwise.
SymmetricXState make_symmetric_x(double a, double b, double c);

/// Returns the parameters when the matrix matches the symmetric X pattern
/// within `tolerance` (zero pattern, equal middle populations, real inner
/// coherence, no outer coherence).
std::optional<SymmetricXState> match_symmetric_x(
    const Matrix4& m, double tolerance = tol::x_pattern);

/// General X state: diagonal (a, b1, b2, d), inner coherence z between |eg>
/// and |ge>, outer coherence w between |ee> and |gg>.
struct GeneralXState {
  double a = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double d = 0.0;
  Complex z{0.0, 0.0};
  Complex w{0.0, 0.0};

  Matrix4 matrix() const;
};

/// Validates trace one, |z| <= sqrt(b1 b2) and |w| <= sqrt(a d).
GeneralXState make_general_x(double a, double b1, double b2, double d,
                             Complex z, Complex w);

/// Pattern match for the general X zero structure.
std::optional<GeneralXState> match_general_x(const Matrix4& m,
                                             double tolerance = tol::x_pattern);

}  // namespace qcorr
