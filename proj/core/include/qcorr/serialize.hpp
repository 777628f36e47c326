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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcorr/analysis.hpp"

namespace qcorr {

/// Decimal rendering with 12 significant digits; survives a parse round trip
/// at the library's 1e-10 tolerances.
std::string format_sig(double v);

/// State file schema: {"matrix": [[[re, im] x4] x4]} in the fixed basis
/// order. Throws ParseError on malformed input.
Matrix4 load_state_json(std::istream& in);
void save_state_json(std::ostream& out, const Matrix4& m);

/// Optional "# gamma=... omega=..." comment emitted before the CSV header
/// when the couplings came from a geometry.
struct GeometryNote {
  double gamma = 0.0;
  double omega = 0.0;
};

/// CSV columns: tau,a,b,c,mutual_info,discord,discord_branch,mid,
/// mid_degenerate,classical,concurrence,pop_sym,pop_antisym.
void write_series_csv(std::ostream& out, const TimeSeries& series,
                      const std::optional<GeometryNote>& note = {});
void write_series_json(std::ostream& out, const TimeSeries& series,
                       const std::optional<GeometryNote>& note = {});

void write_report_json(std::ostream& out, const CorrelationReport& report,
                       Subsystem side);

/// Onset table: one gamma,tau_e row per input, "none" when absent.
void write_onset_csv(std::ostream& out,
                     const std::vector<std::pair<double, std::optional<double>>>& rows);

/// Structural-event table emitted by the gamma sweep front end.
void write_events_csv(std::ostream& out,
                      const std::vector<std::pair<double, EventSet>>& rows);

}  // namespace qcorr
