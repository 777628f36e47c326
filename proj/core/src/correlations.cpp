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

#include "qcorr/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "qcorr/eigen_jacobi.hpp"

namespace qcorr {

namespace {

constexpr double kPi = 3.14159265358979323846;

// x log2(x / y) with the 0 log 0 convention on x.
double xlog_ratio(double x, double y) {
  if (x <= 0.0 || y <= 0.0) return 0.0;
  return x * std::log2(x / y);
}

// Entropy of a 2x2 Hermitian matrix with trace p, via the closed-form
// spectrum, after normalizing by p.
double entropy2_normalized(double diag0, double diag1, const Complex& off,
                           double p) {
  const double mean = 0.5 * (diag0 + diag1);
  const double disc =
      std::sqrt(0.25 * (diag0 - diag1) * (diag0 - diag1) + std::norm(off));
  const double l0 = std::max(0.0, (mean + disc) / p);
  const double l1 = std::max(0.0, (mean - disc) / p);
  return -plog2(l0) - plog2(l1);
}

// Pauli decomposition of the measured side's 2x2 blocks. For a projector
// (I + s n.sigma)/2 on the measured qubit, the unnormalized conditional state
// of the other qubit has entries 0.5 * (t0 + s * n . (tx, ty, tz)), so a grid
// point costs a handful of multiplications once the traces are cached.
struct MeasurementKernel {
  Complex t0[2][2], tx[2][2], ty[2][2], tz[2][2];

  static MeasurementKernel build(const Matrix4& rho, Subsystem measured) {
    MeasurementKernel k;
    const Complex i_unit(0.0, 1.0);
    for (int r = 0; r < 2; ++r) {
      for (int s = 0; s < 2; ++s) {
        // 2x2 block over the measured qubit's indices, with the surviving
        // qubit's indices fixed at (r, s).
        Complex b00, b01, b10, b11;
        if (measured == Subsystem::B) {
          b00 = rho(2 * r + 0, 2 * s + 0);
          b01 = rho(2 * r + 0, 2 * s + 1);
          b10 = rho(2 * r + 1, 2 * s + 0);
          b11 = rho(2 * r + 1, 2 * s + 1);
        } else {
          b00 = rho(0 + r, 0 + s);
          b01 = rho(0 + r, 2 + s);
          b10 = rho(2 + r, 0 + s);
          b11 = rho(2 + r, 2 + s);
        }
        k.t0[r][s] = b00 + b11;
        k.tx[r][s] = b01 + b10;
        k.ty[r][s] = i_unit * (b01 - b10);
        k.tz[r][s] = b00 - b11;
      }
    }
    return k;
  }

  // sum_j p_j S(rho_other | outcome j) for the measurement along n.
  double conditional_entropy(double nx, double ny, double nz) const {
    Complex dot[2][2];
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s)
        dot[r][s] = nx * tx[r][s] + ny * ty[r][s] + nz * tz[r][s];

    double total = 0.0;
    double psum = 0.0;
    for (double sign : {1.0, -1.0}) {
      const double c00 = 0.5 * (t0[0][0] + sign * dot[0][0]).real();
      const double c11 = 0.5 * (t0[1][1] + sign * dot[1][1]).real();
      const Complex c01 = 0.5 * (t0[0][1] + sign * dot[0][1]);
      const double p = c00 + c11;
      psum += p;
      if (p < tol::null_outcome) continue;  // null outcome contributes zero
      total += p * entropy2_normalized(c00, c11, c01, p);
    }
    if (psum < tol::null_outcome)
      throw DegenerateInput("all measurement outcomes are null");
    return total;
  }

  double conditional_entropy_dir(const MeasurementDirection& d) const {
    return conditional_entropy(std::sin(d.theta) * std::cos(d.phi),
                               std::sin(d.theta) * std::sin(d.phi),
                               std::cos(d.theta));
  }
};

// Downhill simplex on (theta, phi). The objective is smooth and periodic, so
// the walk is left unconstrained and the angles are normalized afterwards.
template <typename F>
std::pair<std::array<double, 2>, double> nelder_mead(
    F&& f, std::array<double, 2> x0, std::array<double, 2> step, double ftol,
    int max_iter) {
  struct Vertex {
    std::array<double, 2> x;
    double f;
  };
  std::array<Vertex, 3> v{
      Vertex{x0, f(x0)},
      Vertex{{x0[0] + step[0], x0[1]}, 0.0},
      Vertex{{x0[0], x0[1] + step[1]}, 0.0}};
  v[1].f = f(v[1].x);
  v[2].f = f(v[2].x);

  auto order = [&v] {
    std::sort(v.begin(), v.end(),
              [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  };
  order();

  for (int it = 0; it < max_iter; ++it) {
    if (v[2].f - v[0].f < ftol) break;
    const std::array<double, 2> centroid{0.5 * (v[0].x[0] + v[1].x[0]),
                                         0.5 * (v[0].x[1] + v[1].x[1])};
    auto at = [&centroid, &v](double coef) {
      return std::array<double, 2>{
          centroid[0] + coef * (centroid[0] - v[2].x[0]),
          centroid[1] + coef * (centroid[1] - v[2].x[1])};
    };

    const auto xr = at(1.0);
    const double fr = f(xr);
    if (fr < v[0].f) {
      const auto xe = at(2.0);
      const double fe = f(xe);
      v[2] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
    } else if (fr < v[1].f) {
      v[2] = Vertex{xr, fr};
    } else {
      const bool outside = fr < v[2].f;
      const auto xc = at(outside ? 0.5 : -0.5);
      const double fc = f(xc);
      if (fc < (outside ? fr : v[2].f)) {
        v[2] = Vertex{xc, fc};
      } else {
        for (int i = 1; i < 3; ++i) {
          v[i].x = {0.5 * (v[i].x[0] + v[0].x[0]),
                    0.5 * (v[i].x[1] + v[0].x[1])};
          v[i].f = f(v[i].x);
        }
      }
    }
    order();
  }
  return {v[0].x, v[0].f};
}

MeasurementDirection normalized_direction(double theta, double phi) {
  const double nx = std::sin(theta) * std::cos(phi);
  const double ny = std::sin(theta) * std::sin(phi);
  const double nz = std::cos(theta);
  MeasurementDirection d;
  d.theta = std::acos(std::clamp(nz, -1.0, 1.0));
  d.phi = std::atan2(ny, nx);
  if (d.phi < 0.0) d.phi += 2.0 * kPi;
  if (d.phi >= 2.0 * kPi) d.phi = 0.0;
  return d;
}

struct MeasurementOptimum {
  double min_conditional_entropy = 0.0;
  MeasurementDirection direction;
};

// Exhaustive grid scan followed by Nelder-Mead refinement from the best
// cell. Deterministic: fixed scan order, ties keep the first hit.
MeasurementOptimum optimize_measurement(const Matrix4& rho, Subsystem side,
                                        const MeasurementGrid& grid) {
  if (grid.polar < 64 || grid.azimuthal < 128)
    throw ParamOutOfRange("measurement grid below the 64x128 minimum");

  const MeasurementKernel kernel = MeasurementKernel::build(rho, side);

  const double dtheta = kPi / (grid.polar - 1);
  const double dphi = 2.0 * kPi / grid.azimuthal;

  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0, best_phi = 0.0;
  for (int i = 0; i < grid.polar; ++i) {
    const double theta = i * dtheta;
    const double st = std::sin(theta);
    const double nz = std::cos(theta);
    for (int j = 0; j < grid.azimuthal; ++j) {
      const double phi = j * dphi;
      const double e =
          kernel.conditional_entropy(st * std::cos(phi), st * std::sin(phi), nz);
      if (e < best) {
        best = e;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  auto objective = [&kernel](const std::array<double, 2>& x) {
    return kernel.conditional_entropy(std::sin(x[0]) * std::cos(x[1]),
                                      std::sin(x[0]) * std::sin(x[1]),
                                      std::cos(x[0]));
  };
  const auto [x, fx] = nelder_mead(objective, {best_theta, best_phi},
                                   {0.5 * dtheta, 0.5 * dphi}, 1e-10, 200);

  MeasurementOptimum opt;
  if (fx <= best) {
    opt.min_conditional_entropy = fx;
    opt.direction = normalized_direction(x[0], x[1]);
  } else {
    opt.min_conditional_entropy = best;
    opt.direction = normalized_direction(best_theta, best_phi);
  }
  return opt;
}

DiscordBranch branch_from_direction(const MeasurementDirection& dir) {
  // Polar optimum corresponds to the computational-basis branch.
  return std::abs(std::cos(dir.theta)) > 1.0 - 1e-9 ? DiscordBranch::D1
                                                    : DiscordBranch::D2;
}

}  // namespace

// ---------------------------------------------------------------------------
// Entanglement
// ---------------------------------------------------------------------------

double concurrence(const DensityMatrix& m) {
  const Matrix4 yy = kron(pauli_y(), pauli_y());
  const Matrix4& rho = m.matrix();
  const Matrix4 rho_tilde = yy * rho.conjugate() * yy;

  // sqrt(rho) rho_tilde sqrt(rho) is Hermitian and shares the spectrum of
  // rho * rho_tilde.
  EigenSystem<4> es = hermitian_eigensystem<4>(rho);
  const Eigen::Vector4d clamped = es.values.cwiseMax(0.0);
  const Matrix4 sqrt_rho = es.vectors *
                           clamped.cwiseSqrt().cast<Complex>().asDiagonal() *
                           es.vectors.adjoint();
  Matrix4 herm = sqrt_rho * rho_tilde * sqrt_rho;
  herm = 0.5 * (herm + herm.adjoint());

  EigenSystem<4> prod = hermitian_eigensystem<4>(herm);
  Eigen::Vector4d roots = prod.values.cwiseMax(0.0).cwiseSqrt();
  const double lambda = roots(0) - roots(1) - roots(2) - roots(3);
  return std::max(0.0, lambda);
}

double concurrence_lambda(const SymmetricXState& s) {
  const double flip = std::sqrt(std::max(0.0, s.a * s.d()));
  const double minus = std::abs(s.b - s.c);
  const double plus = std::abs(s.b + s.c);
  // Lambda = sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4) over the descending
  // multiset {flip, flip, minus, plus} = 2 max - sum.
  const double largest = std::max({flip, minus, plus});
  return 2.0 * largest - (2.0 * flip + minus + plus);
}

double concurrence_x_symmetric(const SymmetricXState& s) {
  return std::max(0.0, concurrence_lambda(s));
}

// ---------------------------------------------------------------------------
// Measurement-based quantifiers
// ---------------------------------------------------------------------------

double conditional_entropy(const DensityMatrix& m, Subsystem side,
                           const MeasurementDirection& dir) {
  return MeasurementKernel::build(m.matrix(), side).conditional_entropy_dir(dir);
}

DiscordResult discord_min(const DensityMatrix& m, Subsystem side,
                          const MeasurementGrid& grid) {
  const double info = mutual_information(m);
  const double s_other = von_neumann_entropy(partial_trace(m, other(side)));
  const MeasurementOptimum opt = optimize_measurement(m.matrix(), side, grid);
  return {info - (s_other - opt.min_conditional_entropy), opt.direction};
}

double classical_correlation(const DensityMatrix& m, Subsystem side,
                             const MeasurementGrid& grid) {
  const double s_other = von_neumann_entropy(partial_trace(m, other(side)));
  const MeasurementOptimum opt = optimize_measurement(m.matrix(), side, grid);
  return s_other - opt.min_conditional_entropy;
}

MidResult mid(const DensityMatrix& m) {
  MidResult result;

  auto side_projectors = [&result](const ReducedState& r) {
    EigenSystem<2> es = hermitian_eigensystem<2>(r.matrix());
    if (es.values(0) - es.values(1) < tol::reduced_degeneracy) {
      // Degenerate reduced spectrum: eigenprojectors are not unique, fall
      // back to the computational basis and flag it.
      result.degenerate = true;
      Matrix2 p0 = Matrix2::Zero(), p1 = Matrix2::Zero();
      p0(0, 0) = 1.0;
      p1(1, 1) = 1.0;
      return ProjectorPair{p0, p1};
    }
    const Eigen::Vector2cd v0 = es.vectors.col(0);
    const Eigen::Vector2cd v1 = es.vectors.col(1);
    return ProjectorPair{v0 * v0.adjoint(), v1 * v1.adjoint()};
  };

  const ProjectorPair pa = side_projectors(partial_trace(m, Subsystem::A));
  const ProjectorPair pb = side_projectors(partial_trace(m, Subsystem::B));
  const DensityMatrix measured = apply_local_projectors(m, pa, pb);
  result.value = mutual_information(m) - mutual_information(measured);
  return result;
}

// ---------------------------------------------------------------------------
// Closed forms for the symmetric X family
// ---------------------------------------------------------------------------

namespace {

double x_total_entropy(const SymmetricXState& s) {
  // Spectrum {a, d, b + c, b - c}.
  return -plog2(s.a) - plog2(s.d()) - plog2(s.b + s.c) - plog2(s.b - s.c);
}

}  // namespace

double mutual_information(const SymmetricXState& s) {
  return 2.0 * binary_entropy(s.a + s.b) - x_total_entropy(s);
}

BranchValues discord_branches(const SymmetricXState& s) {
  const double a = s.a, b = s.b, c = s.c, d = s.d();
  const double s_reduced = binary_entropy(a + b);
  const double s_total = x_total_entropy(s);

  BranchValues out;
  out.d1 = s_reduced - s_total - xlog_ratio(a, a + b) - xlog_ratio(b, a + b) -
           xlog_ratio(d, b + d) - xlog_ratio(b, b + d);
  const double alpha =
      std::sqrt((2.0 * (a + b) - 1.0) * (2.0 * (a + b) - 1.0) + 4.0 * c * c);
  out.d2 = s_reduced - s_total + binary_entropy(0.5 * (1.0 + alpha));
  return out;
}

XDiscord discord_x_symmetric(const SymmetricXState& s) {
  const BranchValues bv = discord_branches(s);
  if (bv.d1 <= bv.d2) return {bv.d1, DiscordBranch::D1};
  return {bv.d2, DiscordBranch::D2};
}

double mid_x_symmetric(const SymmetricXState& s) {
  return -2.0 * plog2(s.b) + plog2(s.b - s.c) + plog2(s.b + s.c);
}

double classical_correlation_x_symmetric(const SymmetricXState& s,
                                         DiscordBranch branch) {
  const double a = s.a, b = s.b, c = s.c, d = s.d();
  if (branch == DiscordBranch::D1) {
    return -2.0 * plog2(a + b) - 2.0 * plog2(1.0 - a - b) + plog2(d) +
           plog2(a) + 2.0 * plog2(b);
  }
  const double alpha =
      std::sqrt((2.0 * (a + b) - 1.0) * (2.0 * (a + b) - 1.0) + 4.0 * c * c);
  return binary_entropy(a + b) - binary_entropy(0.5 * (1.0 + alpha));
}

// ---------------------------------------------------------------------------
// Aggregate report
// ---------------------------------------------------------------------------

CorrelationReport full_report(const DensityMatrix& m, Subsystem side,
                              const MeasurementGrid& grid) {
  CorrelationReport report;

  if (auto xs = match_symmetric_x(m.matrix())) {
    const XDiscord dx = discord_x_symmetric(*xs);
    report.mutual_info = mutual_information(*xs);
    report.discord = dx.value;
    report.discord_branch = dx.branch;
    report.mid = mid_x_symmetric(*xs);
    report.mid_degenerate =
        std::abs(2.0 * (xs->a + xs->b) - 1.0) < tol::reduced_degeneracy;
    report.classical = classical_correlation_x_symmetric(*xs, dx.branch);
    report.concurrence = concurrence_x_symmetric(*xs);
    report.x_fast_path = true;
    return report;
  }

  report.mutual_info = mutual_information(m);
  const double s_other = von_neumann_entropy(partial_trace(m, other(side)));
  const MeasurementOptimum opt = optimize_measurement(m.matrix(), side, grid);
  report.classical = s_other - opt.min_conditional_entropy;
  report.discord = report.mutual_info - report.classical;
  report.discord_branch = branch_from_direction(opt.direction);
  const MidResult mr = mid(m);
  report.mid = mr.value;
  report.mid_degenerate = mr.degenerate;
  report.concurrence = concurrence(m);
  report.x_fast_path = false;
  return report;
}

}  // namespace qcorr
