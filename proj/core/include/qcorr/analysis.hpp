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
#include <utility>
#include <vector>

#include "qcorr/correlations.hpp"
#include "qcorr/dynamics.hpp"

namespace qcorr {

/// Correlation measures, state coefficients and channel populations along a
/// strictly increasing tau grid.
struct TimeSeries {
  double gamma = 0.0;
  std::vector<double> taus;
  std::vector<SymmetricXState> coefficients;
  std::vector<CorrelationReport> reports;
  std::vector<PopulationPair> populations;
};

/// Uniform grid over [0, tau_max] with n_points >= 2 samples, each computed
/// through analytic_state + full_report + populations_sym_antisym.
TimeSeries sweep(double gamma, double tau_max, int n_points, Subsystem side);

/// Same series for the gamma -> 1 limit, using dicke_state coefficients.
TimeSeries dicke_sweep(double tau_max, int n_points, Subsystem side);

/// First instant with positive concurrence, located by a 0.01-step scan of
/// the concurrence gap up to tau = 50 followed by bisection to 1e-10.
/// Returns nullopt for gamma in {0, 1} and when no crossing exists.
std::optional<double> onset_time(double gamma);

/// Connected region where the D1 branch lies at or below D2. Degenerates to
/// a point when the bisected width is below 1e-6.
struct MidDiscordWindow {
  double start = 0.0;
  double end = 0.0;
  bool is_point = false;
  double width() const { return end - start; }
};

/// Sign-scan of D2 - D1 on a 0.005-step grid with boundary bisection to 1e-9.
std::optional<MidDiscordWindow> mid_discord_interval(double gamma,
                                                     double tau_max);

/// Unique root of a(tau) + b(tau) = 1/2 (both reduced states become
/// maximally mixed there), bisected to 1e-12 on [0, 50].
double degeneracy_time(double gamma);

enum class SeriesColumn { Discord, Mid, Antisymmetric };

/// Least-squares slope of ln(value) versus tau over the window; the column
/// must be strictly positive there (NonPositiveData otherwise).
double decay_rate_fit(const TimeSeries& series, SeriesColumn column,
                      std::pair<double, double> window);

/// Structural events of one trajectory.
struct EventSet {
  std::optional<double> onset_tau;
  std::optional<MidDiscordWindow> mid_discord;
  double degeneracy_tau = 0.0;
  std::optional<double> decay_rate;  // antisymmetric-population exponent
};

/// Convenience bundle used by the gamma-sweep front end. The decay fit uses
/// the antisymmetric population over [15, min(25, tau_max)].
EventSet event_set(double gamma, double tau_max);

}  // namespace qcorr
