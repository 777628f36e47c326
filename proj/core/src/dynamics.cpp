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

#include "qcorr/dynamics.hpp"

#include <cmath>
#include <string>

namespace qcorr {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDickeSwitch = 1e-6;  // |1 - gamma| below which the
                                       // expanded Dicke forms are used

struct TwoQubitOperators {
  Matrix4 sp[2];   // raising on qubit 1 / 2
  Matrix4 sm[2];   // lowering
  Matrix4 a[2][2];  // a[i][j] = sp[i] * sm[j]
  Matrix4 sz_sum;  // S1z + S2z
  Matrix4 exchange;  // S1+ S2- + S2+ S1-

  TwoQubitOperators() {
    Matrix2 up = Matrix2::Zero();  // |e><g| with e = index 0
    up(0, 1) = 1.0;
    Matrix2 down = up.adjoint();
    Matrix2 z = Matrix2::Zero();
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    const Matrix2 id = Matrix2::Identity();

    sp[0] = kron(up, id);
    sp[1] = kron(id, up);
    sm[0] = kron(down, id);
    sm[1] = kron(id, down);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) a[i][j] = sp[i] * sm[j];
    sz_sum = kron(z, id) + kron(id, z);
    exchange = a[0][1] + a[1][0];
  }
};

const TwoQubitOperators& ops() {
  static const TwoQubitOperators instance;
  return instance;
}

Matrix4 master_equation_rhs(const Matrix4& rho, double gamma, double omega,
                            double omega0) {
  const TwoQubitOperators& op = ops();
  const Complex i_unit(0.0, 1.0);

  Matrix4 rhs = Matrix4::Zero();
  if (omega0 != 0.0)
    rhs -= i_unit * omega0 * (op.sz_sum * rho - rho * op.sz_sum);
  if (omega != 0.0)
    rhs -= i_unit * omega * (op.exchange * rho - rho * op.exchange);

  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double rate = (i == j) ? 1.0 : gamma;
      if (rate == 0.0) continue;
      rhs -= 0.5 * rate *
             (rho * op.a[i][j] + op.a[i][j] * rho -
              2.0 * op.sm[j] * rho * op.sp[i]);
    }
  }
  return rhs;
}

}  // namespace

DynamicsParams coupling_from_geometry(const CouplingGeometry& g) {
  if (!(g.separation > 1e-6))
    throw ParamOutOfRange("separation must exceed 1e-6 wavelengths (the r -> 0 "
                          "limit is served by dicke_state)");
  if (std::abs(g.dipole_cosine) > 1.0)
    throw ParamOutOfRange("dipole cosine outside [-1, 1]");

  const double x = 2.0 * kPi * g.separation;  // k0 r12
  const double u2 = g.dipole_cosine * g.dipole_cosine;
  const double perp = 1.0 - u2;
  const double axial = 1.0 - 3.0 * u2;

  const double sx = std::sin(x);
  const double cx = std::cos(x);

  // cos(x)/x^2 - sin(x)/x^3 cancels catastrophically for small x; switch to
  // the series there.
  double far_field;
  if (x < 1e-2) {
    const double x2 = x * x;
    far_field = -1.0 / 3.0 + x2 / 30.0 - x2 * x2 / 840.0;
  } else {
    far_field = cx / (x * x) - sx / (x * x * x);
  }

  DynamicsParams p;
  p.gamma = 1.5 * (perp * sx / x + axial * far_field);
  p.omega = 0.75 * (-perp * cx / x + axial * (sx / (x * x) + cx / (x * x * x)));
  p.omega0 = 0.0;
  return p;
}

SymmetricXState dicke_state(double tau) {
  if (!(tau >= 0.0)) throw ParamOutOfRange("tau must be nonnegative");
  const double a = std::exp(-2.0 * tau);
  const double b = tau * a;
  return make_symmetric_x(a, b, b);
}

SymmetricXState analytic_state(double gamma, double tau) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw ParamOutOfRange("gamma outside [0, 1]: " + std::to_string(gamma));
  if (!(tau >= 0.0)) throw ParamOutOfRange("tau must be nonnegative");

  const double a = std::exp(-2.0 * tau);
  const double eps = 1.0 - gamma;

  if (eps < kDickeSwitch) {
    // First order in (1 - gamma) around the Dicke forms; avoids the
    // 1/(1 - gamma) cancellation while keeping the relative error ~eps^2.
    const double base = tau * a;
    const double shared = 0.5 * a * (tau * tau - tau);
    const double split = 0.25 * (1.0 - a);
    return make_symmetric_x(a, base + eps * (shared + split),
                            base + eps * (shared - split));
  }

  const double sub =
      (std::exp(-(1.0 - gamma) * tau) - a) * (1.0 - gamma) / (2.0 * (1.0 + gamma));
  const double super =
      (std::exp(-(1.0 + gamma) * tau) - a) * (1.0 + gamma) / (2.0 * (1.0 - gamma));
  return make_symmetric_x(a, sub + super, super - sub);
}

Matrix4 lindblad_rhs(const DensityMatrix& m, const DynamicsParams& p) {
  if (std::abs(p.gamma) > 1.0)
    throw ParamOutOfRange("|gamma| exceeds 1");
  return master_equation_rhs(m.matrix(), p.gamma, p.omega, p.omega0);
}

std::vector<TrajectoryPoint> integrate(const DensityMatrix& initial,
                                       const DynamicsParams& p,
                                       double tau_end, double step,
                                       bool drop_free_evolution) {
  if (!(step > 0.0 && step <= 0.01))
    throw ParamOutOfRange("step must lie in (0, 0.01]");
  if (!(tau_end >= 0.0 && tau_end <= 50.0))
    throw ParamOutOfRange("tau_end must lie in [0, 50]");
  if (std::abs(p.gamma) > 1.0) throw ParamOutOfRange("|gamma| exceeds 1");

  const double omega0 = drop_free_evolution ? 0.0 : p.omega0;
  const int n_steps =
      tau_end > 0.0 ? static_cast<int>(std::ceil(tau_end / step - 1e-12)) : 0;
  const double h = n_steps > 0 ? tau_end / n_steps : 0.0;

  std::vector<TrajectoryPoint> trajectory;
  trajectory.reserve(n_steps + 1);
  trajectory.push_back({0.0, initial});

  Matrix4 rho = initial.matrix();
  for (int i = 0; i < n_steps; ++i) {
    const Matrix4 k1 = master_equation_rhs(rho, p.gamma, p.omega, omega0);
    const Matrix4 k2 =
        master_equation_rhs(rho + 0.5 * h * k1, p.gamma, p.omega, omega0);
    const Matrix4 k3 =
        master_equation_rhs(rho + 0.5 * h * k2, p.gamma, p.omega, omega0);
    const Matrix4 k4 =
        master_equation_rhs(rho + h * k3, p.gamma, p.omega, omega0);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = 0.5 * (rho + rho.adjoint());

    const double tau = (i + 1) * h;
    const double drift = std::abs(rho.trace().real() - 1.0);
    if (drift > tol::trace_one)
      throw StateInvariantViolated("trace drifted by " + std::to_string(drift) +
                                   " at tau = " + std::to_string(tau));
    try {
      trajectory.push_back({tau, DensityMatrix::validated(rho)});
    } catch (const Error& e) {
      throw StateInvariantViolated("state invariant broken at tau = " +
                                   std::to_string(tau) + ": " + e.what());
    }
  }
  return trajectory;
}

PopulationPair populations_sym_antisym(const SymmetricXState& s) {
  return {s.b + s.c, s.b - s.c};
}

PopulationPair populations_sym_antisym(const DensityMatrix& m) {
  const Matrix4& r = m.matrix();
  const double diag = (r(basis::eg, basis::eg) + r(basis::ge, basis::ge)).real();
  const double cross = (r(basis::eg, basis::ge) + r(basis::ge, basis::eg)).real();
  return {0.5 * (diag + cross), 0.5 * (diag - cross)};
}

}  // namespace qcorr
