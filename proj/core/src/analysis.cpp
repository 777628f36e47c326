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

#include "qcorr/analysis.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace qcorr {

namespace {

constexpr double kTauHorizon = 50.0;  // populations are < e^-5 by then for
                                      // every gamma the events care about
constexpr double kOnsetScanStep = 0.01;
constexpr double kBranchScanStep = 0.005;

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double flo, double xtol) {
  // Assumes a sign change in [lo, hi]; keeps the bracket on f's sign.
  double a = lo, b = hi, fa = flo;
  while (b - a > xtol) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if ((fm > 0.0) == (fa > 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

TimeSeries assemble_series(double gamma, double tau_max, int n_points,
                           Subsystem side,
                           const std::function<SymmetricXState(double)>& at) {
  if (n_points < 2) throw ParamOutOfRange("n_points must be at least 2");
  if (!(tau_max > 0.0)) throw ParamOutOfRange("tau_max must be positive");

  TimeSeries series;
  series.gamma = gamma;
  series.taus.reserve(n_points);
  series.coefficients.reserve(n_points);
  series.reports.reserve(n_points);
  series.populations.reserve(n_points);

  const double dt = tau_max / (n_points - 1);
  for (int i = 0; i < n_points; ++i) {
    const double tau = i * dt;
    const SymmetricXState s = at(tau);
    series.taus.push_back(tau);
    series.coefficients.push_back(s);
    series.reports.push_back(full_report(s.to_density_matrix(), side));
    series.populations.push_back(populations_sym_antisym(s));
  }
  return series;
}

}  // namespace

TimeSeries sweep(double gamma, double tau_max, int n_points, Subsystem side) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw ParamOutOfRange("gamma outside [0, 1]");
  return assemble_series(gamma, tau_max, n_points, side,
                         [gamma](double tau) { return analytic_state(gamma, tau); });
}

TimeSeries dicke_sweep(double tau_max, int n_points, Subsystem side) {
  return assemble_series(1.0, tau_max, n_points, side,
                         [](double tau) { return dicke_state(tau); });
}

std::optional<double> onset_time(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw ParamOutOfRange("gamma outside [0, 1]");
  if (gamma == 0.0 || gamma == 1.0) return std::nullopt;

  auto gap = [gamma](double tau) {
    return concurrence_lambda(analytic_state(gamma, tau));
  };

  double prev_tau = 0.0;
  double prev_gap = 0.0;  // Lambda(0) = 0 for the doubly excited start
  const int n_scan = static_cast<int>(kTauHorizon / kOnsetScanStep);
  for (int i = 1; i <= n_scan; ++i) {
    const double tau = i * kOnsetScanStep;
    const double g = gap(tau);
    if (g > 0.0) {
      return bisect(gap, prev_tau, tau, prev_gap, 1e-10);
    }
    prev_tau = tau;
    prev_gap = g;
  }
  return std::nullopt;
}

std::optional<MidDiscordWindow> mid_discord_interval(double gamma,
                                                     double tau_max) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw ParamOutOfRange("gamma outside (0, 1)");
  if (!(tau_max > 0.0)) throw ParamOutOfRange("tau_max must be positive");

  auto h = [gamma](double tau) {
    const BranchValues bv = discord_branches(analytic_state(gamma, tau));
    return bv.d2 - bv.d1;  // positive where D1 <= D2
  };

  // First contiguous run of positive sign on the scan grid.
  double run_start = -1.0, run_end = -1.0;
  double before_start = 0.0;
  double prev_tau = 0.0;
  const int n_scan = static_cast<int>(tau_max / kBranchScanStep + 1e-9);
  for (int i = 1; i <= n_scan; ++i) {
    const double tau = i * kBranchScanStep;
    const double value = h(tau);
    if (value > 0.0) {
      if (run_start < 0.0) {
        run_start = tau;
        before_start = prev_tau;
      }
      run_end = tau;
    } else if (run_start >= 0.0) {
      break;
    }
    prev_tau = tau;
  }
  if (run_start < 0.0) return std::nullopt;

  const double left =
      bisect(h, before_start, run_start, h(before_start), 1e-9);
  double right = run_end;
  if (run_end + kBranchScanStep <= tau_max + 1e-12) {
    right = bisect(h, run_end, run_end + kBranchScanStep, h(run_end), 1e-9);
  }

  MidDiscordWindow window;
  if (right - left < 1e-6) {
    const double mid_point = 0.5 * (left + right);
    window = {mid_point, mid_point, true};
  } else {
    window = {left, right, false};
  }
  return window;
}

double degeneracy_time(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw ParamOutOfRange("gamma outside [0, 1]");
  auto f = [gamma](double tau) {
    const SymmetricXState s = analytic_state(gamma, tau);
    return s.a + s.b - 0.5;  // strictly decreasing from 1/2 at tau = 0
  };
  return bisect(f, 0.0, kTauHorizon, f(0.0), 1e-12);
}

double decay_rate_fit(const TimeSeries& series, SeriesColumn column,
                      std::pair<double, double> window) {
  if (series.taus.empty() || window.first >= window.second ||
      window.first < series.taus.front() - 1e-12 ||
      window.second > series.taus.back() + 1e-12)
    throw ParamOutOfRange("fit window outside the series grid");

  auto value_at = [&](std::size_t i) {
    switch (column) {
      case SeriesColumn::Discord:
        return series.reports[i].discord;
      case SeriesColumn::Mid:
        return series.reports[i].mid;
      case SeriesColumn::Antisymmetric:
        return series.populations[i].antisymmetric;
    }
    return 0.0;
  };

  // Plain least squares of ln(value) on tau.
  double n = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < series.taus.size(); ++i) {
    const double tau = series.taus[i];
    if (tau < window.first - 1e-12 || tau > window.second + 1e-12) continue;
    const double v = value_at(i);
    if (!(v > 0.0))
      throw NonPositiveData("column not strictly positive at tau = " +
                            std::to_string(tau));
    const double y = std::log(v);
    n += 1.0;
    sx += tau;
    sy += y;
    sxx += tau * tau;
    sxy += tau * y;
  }
  if (n < 2.0) throw ParamOutOfRange("fit window contains fewer than 2 points");
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

EventSet event_set(double gamma, double tau_max) {
  EventSet events;
  events.onset_tau = onset_time(gamma);
  if (gamma > 0.0 && gamma < 1.0)
    events.mid_discord = mid_discord_interval(gamma, tau_max);
  events.degeneracy_tau = degeneracy_time(gamma);

  const double hi = std::min(25.0, tau_max);
  const double lo = 15.0;
  if (hi > lo) {
    try {
      const TimeSeries series =
          sweep(gamma, hi, static_cast<int>(hi / 0.0125) + 1, Subsystem::B);
      events.decay_rate =
          decay_rate_fit(series, SeriesColumn::Antisymmetric, {lo, hi});
    } catch (const NonPositiveData&) {
      events.decay_rate = std::nullopt;  // gamma = 1: the channel is empty
    }
  }
  return events;
}

}  // namespace qcorr
