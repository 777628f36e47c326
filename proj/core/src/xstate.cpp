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

#include "qcorr/xstate.hpp"

#include <cmath>
#include <string>

namespace qcorr {

namespace {

constexpr double kSnap = 1e-12;

double snap_unit_interval(double v, const char* name) {
  if (v < 0.0) {
    if (v < -kSnap)
      throw ParamOutOfRange(std::string(name) + " = " + std::to_string(v) +
                            " is negative");
    return 0.0;
  }
  if (v > 1.0) {
    if (v > 1.0 + kSnap)
      throw ParamOutOfRange(std::string(name) + " = " + std::to_string(v) +
                            " exceeds one");
    return 1.0;
  }
  return v;
}

}  // namespace

Matrix4 SymmetricXState::matrix() const {
  Matrix4 m = Matrix4::Zero();
  m(basis::ee, basis::ee) = a;
  m(basis::eg, basis::eg) = b;
  m(basis::ge, basis::ge) = b;
  m(basis::gg, basis::gg) = d();
  m(basis::eg, basis::ge) = c;
  m(basis::ge, basis::eg) = c;
  return m;
}

SymmetricXState make_symmetric_x(double a, double b, double c) {
  a = snap_unit_interval(a, "a");
  b = snap_unit_interval(b, "b");
  snap_unit_interval(1.0 - a - 2.0 * b, "d = 1 - a - 2b");
  if (std::abs(c) > b) {
    if (std::abs(c) > b + kSnap)
      throw ParamOutOfRange("|c| = " + std::to_string(std::abs(c)) +
                            " exceeds b = " + std::to_string(b));
    c = c >= 0.0 ? b : -b;
  }
  return SymmetricXState{a, b, c};
}

std::optional<SymmetricXState> match_symmetric_x(const Matrix4& m,
                                                 double tolerance) {
  // Zero pattern of the symmetric X family plus equal middle populations,
  // a real inner coherence and no outer coherence.
  static constexpr int zero_pairs[][2] = {{0, 1}, {0, 2}, {0, 3},
                                          {1, 3}, {2, 3}};
  for (auto [i, j] : zero_pairs) {
    if (std::abs(m(i, j)) > tolerance || std::abs(m(j, i)) > tolerance)
      return std::nullopt;
  }
  for (int i = 0; i < 4; ++i)
    if (std::abs(m(i, i).imag()) > tolerance) return std::nullopt;
  if (std::abs(m(1, 1) - m(2, 2)) > tolerance) return std::nullopt;
  if (std::abs(m(1, 2).imag()) > tolerance ||
      std::abs(m(1, 2) - std::conj(m(2, 1))) > tolerance)
    return std::nullopt;

  const double a = m(0, 0).real();
  const double b = 0.5 * (m(1, 1).real() + m(2, 2).real());
  double c = m(1, 2).real();
  if (std::abs(c) > b) {
    if (std::abs(c) > b + tolerance) return std::nullopt;
    c = c >= 0.0 ? b : -b;
  }
  if (a < -tolerance || b < -tolerance || 1.0 - a - 2.0 * b < -tolerance)
    return std::nullopt;
  return make_symmetric_x(a, b, c);
}

Matrix4 GeneralXState::matrix() const {
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = a;
  m(1, 1) = b1;
  m(2, 2) = b2;
  m(3, 3) = d;
  m(1, 2) = z;
  m(2, 1) = std::conj(z);
  m(0, 3) = w;
  m(3, 0) = std::conj(w);
  return m;
}

GeneralXState make_general_x(double a, double b1, double b2, double d,
                             Complex z, Complex w) {
  if (std::abs(a + b1 + b2 + d - 1.0) > kSnap)
    throw ParamOutOfRange("X-state populations do not sum to one");
  if (a < 0.0 || b1 < 0.0 || b2 < 0.0 || d < 0.0)
    throw ParamOutOfRange("negative X-state population");
  if (std::abs(z) > std::sqrt(b1 * b2) + kSnap)
    throw ParamOutOfRange("|z| exceeds sqrt(b1 b2)");
  if (std::abs(w) > std::sqrt(a * d) + kSnap)
    throw ParamOutOfRange("|w| exceeds sqrt(a d)");
  return GeneralXState{a, b1, b2, d, z, w};
}

std::optional<GeneralXState> match_general_x(const Matrix4& m,
                                             double tolerance) {
  static constexpr int zero_pairs[][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  for (auto [i, j] : zero_pairs) {
    if (std::abs(m(i, j)) > tolerance || std::abs(m(j, i)) > tolerance)
      return std::nullopt;
  }
  for (int i = 0; i < 4; ++i)
    if (std::abs(m(i, i).imag()) > tolerance) return std::nullopt;
  return GeneralXState{m(0, 0).real(), m(1, 1).real(), m(2, 2).real(),
                       m(3, 3).real(), m(1, 2),        m(0, 3)};
}

}  // namespace qcorr
