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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcorr/correlations.hpp"
#include "qcorr/dynamics.hpp"
#include "support/test_rand.hpp"

using namespace qcorr;
using qcorr::testing::Rng;

namespace {

DensityMatrix basis_state(int index) {
  Vector4c ket = Vector4c::Zero();
  ket(index) = 1.0;
  return DensityMatrix::pure(ket);
}

double max_coeff_diff(const SymmetricXState& x, const SymmetricXState& y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b),
                   std::abs(x.c - y.c)});
}

}  // namespace

// ---------------------------------------------------------------------------
// Geometry map
// ---------------------------------------------------------------------------

TEST_CASE("coupling at lambda/8 with perpendicular dipoles") {
  const DynamicsParams p = coupling_from_geometry({0.125, 0.0});
  CHECK(std::abs(p.gamma - 0.8806) < 5e-4);
  // Direct evaluation of the closed forms at k0 r12 = pi/4.
  CHECK(p.gamma == doctest::Approx(0.8806452236547957).epsilon(1e-12));
  CHECK(p.omega == doctest::Approx(1.2791548929248713).epsilon(1e-9));
}

TEST_CASE("couplings vanish at large separation") {
  const DynamicsParams p = coupling_from_geometry({1000.0, 0.0});
  CHECK(std::abs(p.gamma) < 1e-3);
  CHECK(std::abs(p.omega) < 1e-3);
}

TEST_CASE("collective damping saturates at small separation") {
  const DynamicsParams p = coupling_from_geometry({1e-4, 0.0});
  CHECK(std::abs(p.gamma - 1.0) < 1e-6);
}

TEST_CASE("small-separation series joins the direct evaluation smoothly") {
  // The series branch takes over below k0 r12 = 1e-2.
  const double at_switch = 1e-2 / (2.0 * 3.14159265358979323846);
  const DynamicsParams lo = coupling_from_geometry({at_switch * 0.999, 0.3});
  const DynamicsParams hi = coupling_from_geometry({at_switch * 1.001, 0.3});
  CHECK(std::abs(lo.gamma - hi.gamma) < 1e-9);
}

TEST_CASE("collective damping never exceeds the single-qubit rate") {
  for (int i = 1; i <= 60; ++i) {
    const double separation = 0.02 * i;
    for (int j = 0; j <= 10; ++j) {
      const double cosine = -1.0 + 0.2 * j;
      const DynamicsParams p = coupling_from_geometry({separation, cosine});
      CHECK(std::abs(p.gamma) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("coupling_from_geometry rejects out-of-domain input") {
  CHECK_THROWS_AS(coupling_from_geometry({0.0, 0.0}), ParamOutOfRange);
  CHECK_THROWS_AS(coupling_from_geometry({0.1, 1.5}), ParamOutOfRange);
}

// ---------------------------------------------------------------------------
// Closed-form evolution
// ---------------------------------------------------------------------------

TEST_CASE("analytic_state starts from the doubly excited state") {
  const SymmetricXState s = analytic_state(0.8806, 0.0);
  CHECK(s.a == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.b == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(s.c == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("gamma = 0 reproduces two independently decayed qubits") {
  for (double tau : {0.2, 0.7, 1.9, 4.0}) {
    const SymmetricXState s = analytic_state(0.0, tau);
    const double e1 = std::exp(-tau);
    CHECK(s.a == doctest::Approx(e1 * e1).epsilon(1e-14));
    CHECK(s.b == doctest::Approx(e1 * (1.0 - e1)).epsilon(1e-13));
    CHECK(s.c == doctest::Approx(0.0).epsilon(1e-15));
  }
}

TEST_CASE("analytic_state near gamma = 1 matches the Dicke limit") {
  for (double tau : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    CHECK(max_coeff_diff(analytic_state(1.0 - 1e-9, tau), dicke_state(tau)) <
          1e-6);
  }
}

TEST_CASE("the Dicke-switch boundary is seamless") {
  for (double tau : {0.3, 1.0, 3.0}) {
    const SymmetricXState below = analytic_state(1.0 - 0.999e-6, tau);
    const SymmetricXState above = analytic_state(1.0 - 1.001e-6, tau);
    CHECK(max_coeff_diff(below, above) < 1e-10);
  }
}

TEST_CASE("analytic_state rejects out-of-domain parameters") {
  CHECK_THROWS_AS(analytic_state(-0.1, 1.0), ParamOutOfRange);
  CHECK_THROWS_AS(analytic_state(1.1, 1.0), ParamOutOfRange);
  CHECK_THROWS_AS(analytic_state(0.5, -1.0), ParamOutOfRange);
}

TEST_CASE("dicke_state values and non-entanglement") {
  const SymmetricXState s0 = dicke_state(0.0);
  CHECK(s0.a == doctest::Approx(1.0));
  CHECK(s0.b == doctest::Approx(0.0));

  const SymmetricXState s = dicke_state(0.5);
  CHECK(s.a == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(s.b == doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-15));
  CHECK(s.c == doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-15));

  for (int i = 0; i <= 1000; ++i)
    CHECK(concurrence_x_symmetric(dicke_state(0.01 * i)) == 0.0);
}

TEST_CASE("trajectory coefficients respect the Appendix bounds") {
  for (double gamma : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    double prev_f = 1.0;
    double prev_ab = 1.0;
    for (int i = 1; i <= 300; ++i) {
      const double tau = 0.05 * i;
      const SymmetricXState s = analytic_state(gamma, tau);
      CHECK(s.b > 0.0);
      CHECK(s.b > s.c);
      const double f = s.a + 2.0 * s.b + s.b * s.c / s.a;
      CHECK(f <= 1.0 + 1e-12);
      CHECK(f <= prev_f + 1e-12);
      const double ab = s.a + s.b;
      CHECK(ab < prev_ab + 1e-15);
      prev_f = f;
      prev_ab = ab;
    }
  }
}

// ---------------------------------------------------------------------------
// Master equation
// ---------------------------------------------------------------------------

TEST_CASE("the ground state is stationary") {
  const Matrix4 rhs =
      lindblad_rhs(basis_state(basis::gg), {0.8, 2.0, 1.5});
  CHECK(rhs.cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("the singlet is decoherence-free in the Dicke limit") {
  const Matrix4 rhs =
      lindblad_rhs(DensityMatrix::pure(singlet_ket()), {1.0, 7.0, 3.0});
  CHECK(rhs.cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("the doubly excited population leaves at rate 2") {
  const Matrix4 rhs = lindblad_rhs(basis_state(basis::ee), {0.8806, 0.0, 0.0});
  CHECK(rhs(0, 0).real() == doctest::Approx(-2.0).epsilon(1e-14));
}

TEST_CASE("the right-hand side is traceless and Hermitian") {
  Rng rng(0x4a5);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix m = qcorr::testing::random_density_matrix(rng);
    const DynamicsParams p{rng.uniform(-1.0, 1.0), rng.uniform(-5.0, 5.0),
                           rng.uniform(0.0, 10.0)};
    const Matrix4 rhs = lindblad_rhs(m, p);
    CHECK(std::abs(rhs.trace()) < 1e-12);
    CHECK((rhs - rhs.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

// ---------------------------------------------------------------------------
// Integrator
// ---------------------------------------------------------------------------

TEST_CASE("integrate matches the closed-form solution") {
  const double gamma = 0.8806;
  const auto trajectory =
      integrate(basis_state(basis::ee), {gamma, 0.0, 0.0}, 2.0, 1e-3);
  double worst = 0.0;
  for (const auto& pt : trajectory) {
    const Matrix4 expected = analytic_state(gamma, pt.tau).matrix();
    worst = std::max(worst,
                     (pt.state.matrix() - expected).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("the |ee> trajectory is independent of the exchange strength") {
  const auto base =
      integrate(basis_state(basis::ee), {0.8806, 0.0, 0.0}, 2.0, 2e-3);
  for (double omega : {5.0, 50.0}) {
    const auto shifted =
        integrate(basis_state(basis::ee), {0.8806, omega, 0.0}, 2.0, 2e-3);
    REQUIRE(shifted.size() == base.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < base.size(); ++i) {
      worst = std::max(worst, (base[i].state.matrix() -
                               shifted[i].state.matrix())
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("free evolution does not move any correlation measure") {
  const auto plain = integrate(basis_state(basis::eg), {0.7, 1.0, 25.0}, 1.0,
                               2e-3, /*drop_free_evolution=*/true);
  const auto rotated = integrate(basis_state(basis::eg), {0.7, 1.0, 25.0}, 1.0,
                                 2e-3, /*drop_free_evolution=*/false);
  const CorrelationReport a = full_report(plain.back().state, Subsystem::B);
  const CorrelationReport b = full_report(rotated.back().state, Subsystem::B);
  CHECK(a.mutual_info == doctest::Approx(b.mutual_info).epsilon(1e-8));
  CHECK(a.discord == doctest::Approx(b.discord).epsilon(1e-6));
  CHECK(a.mid == doctest::Approx(b.mid).epsilon(1e-8));
  CHECK(a.concurrence == doctest::Approx(b.concurrence).epsilon(1e-8));
}

TEST_CASE("initial |eg> in the Dicke limit pins the antisymmetric channel") {
  const auto trajectory =
      integrate(basis_state(basis::eg), {1.0, 0.0, 0.0}, 8.0, 5e-3);
  for (std::size_t i = 0; i < trajectory.size(); i += 100) {
    const PopulationPair pops =
        populations_sym_antisym(trajectory[i].state);
    CHECK(pops.antisymmetric == doctest::Approx(0.5).epsilon(1e-9));
  }
  // ... which sustains asymptotic entanglement.
  CHECK(concurrence(trajectory.back().state) > 0.4);
}

TEST_CASE("halving the step shifts the endpoint by O(h^4)") {
  const DensityMatrix start = basis_state(basis::ee);
  const DynamicsParams p{0.6, 0.0, 0.0};
  const Matrix4 exact = analytic_state(0.6, 1.0).matrix();
  const auto coarse = integrate(start, p, 1.0, 8e-3);
  const auto fine = integrate(start, p, 1.0, 4e-3);
  const double err_coarse =
      (coarse.back().state.matrix() - exact).cwiseAbs().maxCoeff();
  const double err_fine =
      (fine.back().state.matrix() - exact).cwiseAbs().maxCoeff();
  // Fourth order: the ratio should sit near 16; allow slack for round-off.
  CHECK(err_coarse / err_fine > 8.0);
}

TEST_CASE("every emitted state is a valid density matrix") {
  const auto trajectory =
      integrate(basis_state(basis::ee), {0.95, 3.0, 0.0}, 3.0, 5e-3);
  for (std::size_t i = 0; i < trajectory.size(); i += 50) {
    CHECK_NOTHROW(validate_density_matrix(trajectory[i].state.matrix()));
  }
}

TEST_CASE("integrate rejects out-of-domain steps and horizons") {
  const DensityMatrix start = basis_state(basis::ee);
  CHECK_THROWS_AS(integrate(start, {0.5, 0.0, 0.0}, 1.0, 0.02), ParamOutOfRange);
  CHECK_THROWS_AS(integrate(start, {0.5, 0.0, 0.0}, 1.0, 0.0), ParamOutOfRange);
  CHECK_THROWS_AS(integrate(start, {0.5, 0.0, 0.0}, 60.0, 1e-3), ParamOutOfRange);
  CHECK_THROWS_AS(integrate(start, {1.5, 0.0, 0.0}, 1.0, 1e-3), ParamOutOfRange);
}

// ---------------------------------------------------------------------------
// Channel populations
// ---------------------------------------------------------------------------

TEST_CASE("populations_sym_antisym splits the middle block") {
  const PopulationPair aligned =
      populations_sym_antisym(make_symmetric_x(0.2, 0.3, 0.3));
  CHECK(aligned.symmetric == doctest::Approx(0.6));
  CHECK(aligned.antisymmetric == doctest::Approx(0.0));

  const PopulationPair anti =
      populations_sym_antisym(make_symmetric_x(0.2, 0.3, -0.3));
  CHECK(anti.symmetric == doctest::Approx(0.0));
  CHECK(anti.antisymmetric == doctest::Approx(0.6));

  Rng rng(0xb0b);
  for (int trial = 0; trial < 100; ++trial) {
    const SymmetricXState s = qcorr::testing::random_symmetric_x(rng);
    const PopulationPair pops = populations_sym_antisym(s);
    CHECK(pops.symmetric >= 0.0);
    CHECK(pops.antisymmetric >= 0.0);
    CHECK(pops.symmetric + pops.antisymmetric ==
          doctest::Approx(2.0 * s.b).epsilon(1e-12));
    // The matrix route agrees with the coefficient route.
    const PopulationPair via_matrix =
        populations_sym_antisym(s.to_density_matrix());
    CHECK(via_matrix.symmetric == doctest::Approx(pops.symmetric).epsilon(1e-12));
    CHECK(via_matrix.antisymmetric ==
          doctest::Approx(pops.antisymmetric).epsilon(1e-12));
  }
}

TEST_CASE("the antisymmetric population decays at rate 1 - gamma") {
  const double gamma = 0.9460;
  // log-slope between two late times; the channel is a pure exponential
  // up to an exp(-2 tau) correction that is ~1e-13 here.
  const double t1 = 16.0, t2 = 24.0;
  const double p1 = populations_sym_antisym(analytic_state(gamma, t1)).antisymmetric;
  const double p2 = populations_sym_antisym(analytic_state(gamma, t2)).antisymmetric;
  const double slope = (std::log(p2) - std::log(p1)) / (t2 - t1);
  CHECK(slope == doctest::Approx(-(1.0 - gamma)).epsilon(1e-6));
}
