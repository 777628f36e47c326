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

// Command-line front end: figure-ready CSV/JSON time series and single-state
// correlation reports.
//
// Exit codes: 0 ok, 2 parse failure, 3 invariant violation, 4 output I/O.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcorr/analysis.hpp"
#include "qcorr/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitIo = 4;

struct CommonOptions {
  std::string out;  // empty = stdout
  std::string format = "csv";
  std::string side = "B";
};

qcorr::Subsystem parse_side(const std::string& side) {
  if (side == "A" || side == "a") return qcorr::Subsystem::A;
  if (side == "B" || side == "b") return qcorr::Subsystem::B;
  throw qcorr::ParseError("side must be A or B");
}

std::vector<double> parse_gamma_list(const std::string& text) {
  std::vector<double> gammas;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw qcorr::ParseError("malformed gamma list entry: " + item);
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos])))
      ++pos;
    if (pos != item.size())
      throw qcorr::ParseError("malformed gamma list entry: " + item);
    if (!(value >= 0.0 && value <= 1.0))
      throw qcorr::ParamOutOfRange("gamma outside [0, 1]: " + item);
    gammas.push_back(value);
  }
  if (gammas.empty()) throw qcorr::ParseError("empty gamma list");
  return gammas;
}

// Writes through a stringstream so a failed run never truncates a file.
void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    if (!std::cout) throw std::ios_base::failure("stdout write failed");
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot open " + out_path);
  f << payload;
  f.flush();
  if (!f) throw std::ios_base::failure("write failed: " + out_path);
}

qcorr::DensityMatrix load_and_validate(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw qcorr::ParseError("cannot read state file " + path);
  return qcorr::validate_density_matrix(qcorr::load_state_json(f));
}

qcorr::DensityMatrix initial_state(const std::string& spec) {
  using qcorr::basis::ee;
  using qcorr::basis::eg;
  using qcorr::basis::ge;
  using qcorr::basis::gg;
  if (spec == "ee" || spec == "eg" || spec == "ge" || spec == "gg") {
    const int idx = spec == "ee" ? ee : spec == "eg" ? eg : spec == "ge" ? ge : gg;
    qcorr::Vector4c ket = qcorr::Vector4c::Zero();
    ket(idx) = 1.0;
    return qcorr::DensityMatrix::pure(ket);
  }
  if (spec.rfind("file:", 0) == 0) return load_and_validate(spec.substr(5));
  throw qcorr::ParseError("--initial must be ee|eg|ge|gg|file:<path>");
}

struct EvolveArgs {
  double gamma = -1.0;          // < 0 means unset
  double distance = -1.0;       // wavelength units
  double dipole_cos = 0.0;
  bool have_dipole_cos = false;
  double omega = 0.0;
  double tau_max = 10.0;
  int points = 1000;
  std::string initial = "ee";
  CommonOptions common;
};

// Resolves --gamma vs --distance/--dipole-cos; fills the geometry comment
// when the couplings came from a geometry.
std::pair<qcorr::DynamicsParams, std::optional<qcorr::GeometryNote>>
resolve_couplings(const EvolveArgs& args) {
  const bool have_gamma = args.gamma >= 0.0;
  const bool have_geometry = args.distance >= 0.0;
  if (have_gamma == have_geometry)
    throw qcorr::ParseError("supply exactly one of --gamma or --distance");

  qcorr::DynamicsParams p;
  std::optional<qcorr::GeometryNote> note;
  if (have_geometry) {
    p = qcorr::coupling_from_geometry({args.distance, args.dipole_cos});
    note = qcorr::GeometryNote{p.gamma, p.omega};
  } else {
    p.gamma = args.gamma;
    p.omega = args.omega;
  }
  return {p, note};
}

std::string render_series(const qcorr::TimeSeries& series,
                          const std::optional<qcorr::GeometryNote>& note,
                          const std::string& format) {
  std::ostringstream os;
  if (format == "csv")
    qcorr::write_series_csv(os, series, note);
  else if (format == "json")
    qcorr::write_series_json(os, series, note);
  else
    throw qcorr::ParseError("format must be csv or json");
  return os.str();
}

// Evolution through the RK4 integrator for non-|ee> initial states. The
// a/b/c columns carry the matching matrix entries (Re rho_00, mean middle
// population, Re rho_eg,ge); for symmetric-X trajectories they coincide with
// the closed-form coefficients.
qcorr::TimeSeries integrated_series(const qcorr::DensityMatrix& initial,
                                    const qcorr::DynamicsParams& p,
                                    double tau_max, int points,
                                    qcorr::Subsystem side) {
  if (points < 2) throw qcorr::ParamOutOfRange("points must be at least 2");
  const double dt = tau_max / (points - 1);
  const int substeps = std::max(1, static_cast<int>(std::ceil(dt / 0.005)));
  const double h = dt / substeps;

  const auto trajectory = qcorr::integrate(initial, p, tau_max, h);

  qcorr::TimeSeries series;
  series.gamma = p.gamma;
  for (int i = 0; i < points; ++i) {
    const auto& pt = trajectory[static_cast<std::size_t>(i) * substeps];
    const qcorr::Matrix4& m = pt.state.matrix();
    series.taus.push_back(pt.tau);
    series.coefficients.push_back(qcorr::SymmetricXState{
        m(0, 0).real(), 0.5 * (m(1, 1) + m(2, 2)).real(), m(1, 2).real()});
    series.reports.push_back(qcorr::full_report(pt.state, side));
    series.populations.push_back(qcorr::populations_sym_antisym(pt.state));
  }
  return series;
}

int run_report(const std::string& state_path, const CommonOptions& common) {
  const qcorr::DensityMatrix state = load_and_validate(state_path);
  const qcorr::Subsystem side = parse_side(common.side);
  std::ostringstream os;
  qcorr::write_report_json(os, qcorr::full_report(state, side), side);
  emit(common.out, os.str());
  return kExitOk;
}

int run_evolve(const EvolveArgs& args) {
  const auto [params, note] = resolve_couplings(args);
  const qcorr::Subsystem side = parse_side(args.common.side);

  qcorr::TimeSeries series;
  if (args.initial == "ee") {
    series = qcorr::sweep(params.gamma, args.tau_max, args.points, side);
  } else {
    series = integrated_series(initial_state(args.initial), params,
                               args.tau_max, args.points, side);
  }
  emit(args.common.out, render_series(series, note, args.common.format));
  return kExitOk;
}

int run_dicke(double tau_max, int points, const CommonOptions& common) {
  const qcorr::TimeSeries series =
      qcorr::dicke_sweep(tau_max, points, parse_side(common.side));
  emit(common.out, render_series(series, std::nullopt, common.format));
  return kExitOk;
}

int run_onset(const std::string& gamma_list, const CommonOptions& common) {
  std::vector<std::pair<double, std::optional<double>>> rows;
  for (double gamma : parse_gamma_list(gamma_list))
    rows.emplace_back(gamma, qcorr::onset_time(gamma));
  std::ostringstream os;
  qcorr::write_onset_csv(os, rows);
  emit(common.out, os.str());
  return kExitOk;
}

int run_coupling(double distance, double dipole_cos,
                 const CommonOptions& common) {
  const qcorr::DynamicsParams p =
      qcorr::coupling_from_geometry({distance, dipole_cos});
  std::ostringstream os;
  os << "separation,dipole_cos,gamma,omega\n"
     << qcorr::format_sig(distance) << ',' << qcorr::format_sig(dipole_cos)
     << ',' << qcorr::format_sig(p.gamma) << ',' << qcorr::format_sig(p.omega)
     << '\n';
  emit(common.out, os.str());
  return kExitOk;
}

int run_sweep_gamma(const std::string& gamma_list, double tau_max,
                    const CommonOptions& common) {
  std::vector<std::pair<double, qcorr::EventSet>> rows;
  for (double gamma : parse_gamma_list(gamma_list))
    rows.emplace_back(gamma, qcorr::event_set(gamma, tau_max));
  std::ostringstream os;
  qcorr::write_events_csv(os, rows);
  emit(common.out, os.str());
  return kExitOk;
}

void add_common(CLI::App* cmd, CommonOptions& common, bool with_format = true) {
  cmd->add_option("--out", common.out, "Output path (default: stdout)");
  if (with_format)
    cmd->add_option("--format", common.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation measures and dissipative dynamics for two "
               "dipole-coupled qubits in a common reservoir"};
  app.require_subcommand(1);

  // report
  std::string state_path;
  CommonOptions report_common;
  CLI::App* report = app.add_subcommand(
      "report", "All correlation measures for a state file");
  report->add_option("--state", state_path, "JSON state file")->required();
  report->add_option("--side", report_common.side, "Measured side, A|B");
  add_common(report, report_common, /*with_format=*/false);

  // evolve
  EvolveArgs evolve_args;
  CLI::App* evolve = app.add_subcommand(
      "evolve", "Time series for the dissipative evolution");
  evolve->add_option("--gamma", evolve_args.gamma,
                     "Collective damping ratio in [0, 1]");
  evolve->add_option("--distance", evolve_args.distance,
                     "Qubit separation in wavelength units");
  evolve->add_option("--dipole-cos", evolve_args.dipole_cos,
                     "Cosine between dipole moment and separation axis");
  evolve->add_option("--omega", evolve_args.omega,
                     "Dipole-dipole shift (integrator path only)");
  evolve->add_option("--tau-max", evolve_args.tau_max, "Grid end, default 10");
  evolve->add_option("--points", evolve_args.points,
                     "Grid points, default 1000");
  evolve->add_option("--side", evolve_args.common.side, "Measured side, A|B");
  evolve->add_option("--initial", evolve_args.initial,
                     "ee|eg|ge|gg|file:<path>; non-ee runs the integrator");
  add_common(evolve, evolve_args.common);

  // dicke
  double dicke_tau_max = 10.0;
  int dicke_points = 1000;
  CommonOptions dicke_common;
  CLI::App* dicke = app.add_subcommand(
      "dicke", "Time series in the zero-separation limit");
  dicke->add_option("--tau-max", dicke_tau_max, "Grid end, default 10");
  dicke->add_option("--points", dicke_points, "Grid points, default 1000");
  dicke->add_option("--side", dicke_common.side, "Measured side, A|B");
  add_common(dicke, dicke_common);

  // onset
  std::string onset_gammas;
  CommonOptions onset_common;
  CLI::App* onset = app.add_subcommand(
      "onset", "Entanglement onset times for a gamma list");
  onset->add_option("--gammas", onset_gammas, "Comma-separated gamma values")
      ->required();
  add_common(onset, onset_common, /*with_format=*/false);

  // coupling
  double coupling_distance = 0.0;
  double coupling_cos = 0.0;
  CommonOptions coupling_common;
  CLI::App* coupling = app.add_subcommand(
      "coupling", "Collective damping and dipole shift from geometry");
  coupling->add_option("--distance", coupling_distance,
                       "Qubit separation in wavelength units")->required();
  coupling->add_option("--dipole-cos", coupling_cos,
                       "Cosine between dipole moment and separation axis");
  add_common(coupling, coupling_common, /*with_format=*/false);

  // sweep-gamma
  std::string sweep_gammas;
  double sweep_tau_max = 25.0;
  CommonOptions sweep_common;
  CLI::App* sweep_gamma = app.add_subcommand(
      "sweep-gamma", "Structural events (onset, branch window, degeneracy, "
                     "decay rate) per gamma");
  sweep_gamma->add_option("--gammas", sweep_gammas,
                          "Comma-separated gamma values")->required();
  sweep_gamma->add_option("--tau-max", sweep_tau_max,
                          "Scan horizon, default 25");
  add_common(sweep_gamma, sweep_common, /*with_format=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (report->parsed()) return run_report(state_path, report_common);
    if (evolve->parsed()) return run_evolve(evolve_args);
    if (dicke->parsed()) return run_dicke(dicke_tau_max, dicke_points, dicke_common);
    if (onset->parsed()) return run_onset(onset_gammas, onset_common);
    if (coupling->parsed())
      return run_coupling(coupling_distance, coupling_cos, coupling_common);
    if (sweep_gamma->parsed())
      return run_sweep_gamma(sweep_gammas, sweep_tau_max, sweep_common);
  } catch (const qcorr::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const qcorr::Error& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitOk;
}
