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

#include "qcorr/serialize.hpp"

#include <cstdio>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace qcorr {

namespace {

using nlohmann::json;

const char* branch_name(DiscordBranch b) {
  return b == DiscordBranch::D1 ? "D1" : "D2";
}

json point_json(const TimeSeries& s, std::size_t i) {
  const CorrelationReport& r = s.reports[i];
  return json{{"tau", s.taus[i]},
              {"a", s.coefficients[i].a},
              {"b", s.coefficients[i].b},
              {"c", s.coefficients[i].c},
              {"mutual_info", r.mutual_info},
              {"discord", r.discord},
              {"discord_branch", branch_name(r.discord_branch)},
              {"mid", r.mid},
              {"mid_degenerate", r.mid_degenerate},
              {"classical", r.classical},
              {"concurrence", r.concurrence},
              {"pop_sym", s.populations[i].symmetric},
              {"pop_antisym", s.populations[i].antisymmetric}};
}

}  // namespace

std::string format_sig(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

Matrix4 load_state_json(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("matrix"))
    throw ParseError("state file must be an object with a \"matrix\" key");
  const json& rows = j["matrix"];
  if (!rows.is_array() || rows.size() != 4)
    throw ParseError("\"matrix\" must hold 4 rows");

  Matrix4 m;
  for (int i = 0; i < 4; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != 4)
      throw ParseError("matrix row " + std::to_string(i) +
                       " must hold 4 entries");
    for (int k = 0; k < 4; ++k) {
      const json& entry = row[k];
      if (!entry.is_array() || entry.size() != 2 ||
          !entry[0].is_number() || !entry[1].is_number())
        throw ParseError("matrix entry (" + std::to_string(i) + "," +
                         std::to_string(k) + ") must be a [re, im] pair");
      m(i, k) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

void save_state_json(std::ostream& out, const Matrix4& m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int k = 0; k < 4; ++k)
      row.push_back(json::array({m(i, k).real(), m(i, k).imag()}));
    rows.push_back(row);
  }
  out << json{{"matrix", rows}}.dump(2) << '\n';
}

void write_series_csv(std::ostream& out, const TimeSeries& series,
                      const std::optional<GeometryNote>& note) {
  if (note)
    out << "# gamma=" << format_sig(note->gamma)
        << " omega=" << format_sig(note->omega) << '\n';
  out << "tau,a,b,c,mutual_info,discord,discord_branch,mid,mid_degenerate,"
         "classical,concurrence,pop_sym,pop_antisym\n";
  for (std::size_t i = 0; i < series.taus.size(); ++i) {
    const CorrelationReport& r = series.reports[i];
    out << format_sig(series.taus[i]) << ',' << format_sig(series.coefficients[i].a)
        << ',' << format_sig(series.coefficients[i].b) << ','
        << format_sig(series.coefficients[i].c) << ','
        << format_sig(r.mutual_info) << ',' << format_sig(r.discord) << ','
        << branch_name(r.discord_branch) << ',' << format_sig(r.mid) << ','
        << (r.mid_degenerate ? '1' : '0') << ',' << format_sig(r.classical)
        << ',' << format_sig(r.concurrence) << ','
        << format_sig(series.populations[i].symmetric) << ','
        << format_sig(series.populations[i].antisymmetric) << '\n';
  }
}

void write_series_json(std::ostream& out, const TimeSeries& series,
                       const std::optional<GeometryNote>& note) {
  json j{{"gamma", series.gamma}};
  if (note) {
    j["geometry_gamma"] = note->gamma;
    j["geometry_omega"] = note->omega;
  }
  json points = json::array();
  for (std::size_t i = 0; i < series.taus.size(); ++i)
    points.push_back(point_json(series, i));
  j["points"] = points;
  out << j.dump(2) << '\n';
}

void write_report_json(std::ostream& out, const CorrelationReport& report,
                       Subsystem side) {
  const json j{{"side", side == Subsystem::A ? "A" : "B"},
               {"mutual_info", report.mutual_info},
               {"discord", report.discord},
               {"discord_branch", branch_name(report.discord_branch)},
               {"mid", report.mid},
               {"mid_degenerate", report.mid_degenerate},
               {"classical", report.classical},
               {"concurrence", report.concurrence},
               {"x_fast_path", report.x_fast_path}};
  out << j.dump(2) << '\n';
}

void write_onset_csv(
    std::ostream& out,
    const std::vector<std::pair<double, std::optional<double>>>& rows) {
  out << "gamma,tau_e\n";
  for (const auto& [gamma, tau] : rows) {
    out << format_sig(gamma) << ',' << (tau ? format_sig(*tau) : "none")
        << '\n';
  }
}

void write_events_csv(std::ostream& out,
                      const std::vector<std::pair<double, EventSet>>& rows) {
  out << "gamma,onset_tau,mid_discord_start,mid_discord_end,degeneracy_tau,"
         "antisym_decay_rate\n";
  for (const auto& [gamma, ev] : rows) {
    out << format_sig(gamma) << ','
        << (ev.onset_tau ? format_sig(*ev.onset_tau) : "none") << ',';
    if (ev.mid_discord)
      out << format_sig(ev.mid_discord->start) << ','
          << format_sig(ev.mid_discord->end) << ',';
    else
      out << "none,none,";
    out << format_sig(ev.degeneracy_tau) << ','
        << (ev.decay_rate ? format_sig(*ev.decay_rate) : "none") << '\n';
  }
}

}  // namespace qcorr
