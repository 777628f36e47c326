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

// End-to-end checks of the command-line front end: spawns the real binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcorr/serialize.hpp"
#include "support/test_rand.hpp"

using namespace qcorr;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "qcorr_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  const fs::path out_file = work_dir() / "stdout.txt";
  const std::string command = std::string(QCORR_CLI_PATH) + " " + args + " > " +
                              out_file.string() + " 2> " +
                              (work_dir() / "stderr.txt").string();
  const int raw = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream f(out_file);
  std::stringstream ss;
  ss << f.rdbuf();
  result.output = ss.str();
  return result;
}

fs::path write_state_file(const std::string& name, const Matrix4& m) {
  const fs::path path = work_dir() / name;
  std::ofstream f(path);
  save_state_json(f, m);
  return path;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int column_index(const std::string& header, const std::string& name) {
  const auto cols = split(header, ',');
  for (std::size_t i = 0; i < cols.size(); ++i)
    if (cols[i] == name) return static_cast<int>(i);
  return -1;
}

}  // namespace

TEST_CASE("report on the singlet yields the maximal measures") {
  const fs::path path =
      write_state_file("singlet.json", DensityMatrix::pure(singlet_ket()).matrix());
  const RunResult r = run_cli("report --state " + path.string() + " --side B");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["mutual_info"].get<double>() == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(j["discord"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(j["mid"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(j["classical"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(j["concurrence"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("report reproduces the one-way discord asymmetry") {
  const fs::path path =
      write_state_file("rho2.json", qcorr::testing::rho2_quantum().matrix());

  const RunResult side_a = run_cli("report --state " + path.string() + " --side A");
  REQUIRE(side_a.exit_code == 0);
  CHECK(std::abs(nlohmann::json::parse(side_a.output)["discord"].get<double>()) <
        1e-6);

  const RunResult side_b = run_cli("report --state " + path.string() + " --side B");
  REQUIRE(side_b.exit_code == 0);
  CHECK(nlohmann::json::parse(side_b.output)["discord"].get<double>() > 0.05);
}

TEST_CASE("report on the maximally mixed state is all zeros") {
  const fs::path path =
      write_state_file("mixed.json", Matrix4::Identity() * 0.25);
  const RunResult r = run_cli("report --state " + path.string());
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  for (const char* key : {"mutual_info", "discord", "mid", "classical",
                          "concurrence"})
    CHECK(std::abs(j[key].get<double>()) < 1e-8);
}

TEST_CASE("evolve emits the documented schema and phenomenology") {
  const RunResult r =
      run_cli("evolve --gamma 0.8806 --tau-max 10 --points 101");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 102);
  const int conc_col = column_index(lines[0], "concurrence");
  const int discord_col = column_index(lines[0], "discord");
  const int mid_col = column_index(lines[0], "mid");
  REQUIRE(conc_col >= 0);

  bool early_zero = false, late_positive = false, branches_match = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split(lines[i], ',');
    const double conc = std::stod(fields[conc_col]);
    const double discord = std::stod(fields[discord_col]);
    const double mid_value = std::stod(fields[mid_col]);
    if (i <= 30 && conc == 0.0 && discord > 1e-3) early_zero = true;
    if (conc > 0.0) late_positive = true;
    if (std::abs(discord - mid_value) < 1e-12 && discord > 1e-3)
      branches_match = true;
  }
  CHECK(early_zero);
  CHECK(late_positive);
  CHECK(branches_match);  // the window where MID coincides with discord
}

TEST_CASE("evolve at gamma = 0 reports no correlations") {
  const RunResult r = run_cli("evolve --gamma 0 --tau-max 5 --points 51");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  const int info_col = column_index(lines[0], "mutual_info");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split(lines[i], ',');
    CHECK(std::abs(std::stod(fields[info_col])) < 1e-10);
  }
}

TEST_CASE("evolve from a geometry prepends the coupling comment") {
  const RunResult r =
      run_cli("evolve --distance 0.125 --dipole-cos 0 --tau-max 1 --points 11");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0].rfind("# gamma=0.880645", 0) == 0);
  CHECK(lines[0].find("omega=1.27915") != std::string::npos);
  CHECK(lines[1].rfind("tau,", 0) == 0);
}

TEST_CASE("evolve requires exactly one coupling source") {
  CHECK(run_cli("evolve --tau-max 1 --points 11").exit_code == 2);
  CHECK(run_cli("evolve --gamma 0.5 --distance 0.125 --points 11").exit_code ==
        2);
}

TEST_CASE("evolve runs the integrator for non-ee initial states") {
  const RunResult r = run_cli(
      "evolve --gamma 1 --initial eg --tau-max 4 --points 21");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  const int anti_col = column_index(lines[0], "pop_antisym");
  const int conc_col = column_index(lines[0], "concurrence");
  REQUIRE(anti_col >= 0);
  // The antisymmetric half of |eg> is decoherence-free in the Dicke limit.
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split(lines[i], ',');
    CHECK(std::stod(fields[anti_col]) == doctest::Approx(0.5).epsilon(1e-6));
  }
  CHECK(std::stod(split(lines.back(), ',')[conc_col]) > 0.3);
}

TEST_CASE("evolve emits JSON when asked") {
  const RunResult r =
      run_cli("evolve --gamma 0.5 --tau-max 2 --points 5 --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["points"].size() == 5);
}

TEST_CASE("identical evolve invocations are byte-identical") {
  const std::string args = "evolve --gamma 0.8806 --tau-max 6 --points 61";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("dicke runs never entangle and rise once then fall") {
  const RunResult r = run_cli("dicke --tau-max 10 --points 101");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 102);
  const int conc_col = column_index(lines[0], "concurrence");
  const int mid_col = column_index(lines[0], "mid");
  const int a_col = column_index(lines[0], "a");

  // tau = 0 row: everything zero except a = 1.
  {
    const auto fields = split(lines[1], ',');
    CHECK(std::stod(fields[a_col]) == doctest::Approx(1.0));
    CHECK(std::stod(fields[mid_col]) == doctest::Approx(0.0));
    CHECK(std::stod(fields[conc_col]) == doctest::Approx(0.0));
  }

  bool falling = false;
  double prev = -1.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split(lines[i], ',');
    CHECK(std::stod(fields[conc_col]) == 0.0);
    const double mid_value = std::stod(fields[mid_col]);
    if (prev >= 0.0) {
      if (mid_value < prev - 1e-12) falling = true;
      // No revival: once decaying, never grows again.
      if (falling) CHECK(mid_value <= prev + 1e-12);
    }
    prev = mid_value;
  }
  CHECK(falling);
}

TEST_CASE("onset tabulates none for the boundary gammas") {
  const RunResult r = run_cli("onset --gammas 0,1,0.8806");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "gamma,tau_e");
  CHECK(lines[1] == "0,none");
  CHECK(lines[2] == "1,none");
  const auto fields = split(lines[3], ',');
  CHECK(std::stod(fields[1]) == doctest::Approx(3.9921077).epsilon(1e-6));

  // Bit-exact reproducibility.
  CHECK(run_cli("onset --gammas 0,1,0.8806").output == r.output);
}

TEST_CASE("onset rejects malformed gamma lists") {
  CHECK(run_cli("onset --gammas 0.5,zebra").exit_code == 2);
  CHECK(run_cli("onset --gammas ''").exit_code == 2);
}

TEST_CASE("coupling prints the geometry map") {
  const RunResult r = run_cli("coupling --distance 0.125 --dipole-cos 0");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "separation,dipole_cos,gamma,omega");
  const auto fields = split(lines[1], ',');
  CHECK(std::stod(fields[2]) == doctest::Approx(0.8806452237).epsilon(1e-9));
}

TEST_CASE("sweep-gamma emits the event table") {
  const RunResult r = run_cli("sweep-gamma --gammas 0.8806 --tau-max 25");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] ==
        "gamma,onset_tau,mid_discord_start,mid_discord_end,degeneracy_tau,"
        "antisym_decay_rate");
  const auto fields = split(lines[1], ',');
  REQUIRE(fields.size() == 6);
  CHECK(std::stod(fields[1]) == doctest::Approx(3.9921077).epsilon(1e-6));
  CHECK(std::stod(fields[4]) == doctest::Approx(0.5958288).epsilon(1e-6));
  CHECK(std::stod(fields[5]) == doctest::Approx(-0.1194).epsilon(1e-5));
}

TEST_CASE("exit codes distinguish parse, invariant and io failures") {
  // Unparseable state file -> 2.
  const fs::path garbled = work_dir() / "garbled.json";
  std::ofstream(garbled) << "{ not json";
  CHECK(run_cli("report --state " + garbled.string()).exit_code == 2);

  // Valid JSON, invalid state (trace 0.9) -> 3.
  Matrix4 bad = Matrix4::Zero();
  bad(0, 0) = 0.9;
  const fs::path invalid = write_state_file("trace_deficit.json", bad);
  CHECK(run_cli("report --state " + invalid.string()).exit_code == 3);

  // Unwritable output path -> 4.
  const fs::path state =
      write_state_file("ok.json", Matrix4::Identity() * 0.25);
  CHECK(run_cli("report --state " + state.string() +
                " --out /nonexistent_dir_qcorr/x.json")
            .exit_code == 4);

  // Unknown flag -> 2.
  CHECK(run_cli("evolve --gamma 0.5 --points 11 --bogus").exit_code == 2);

  // gamma outside [0, 1] -> 3 (domain violation).
  CHECK(run_cli("evolve --gamma 1.5 --points 11").exit_code == 3);
}

TEST_CASE("output lands in the requested file") {
  const fs::path out = work_dir() / "series.csv";
  const RunResult r = run_cli("evolve --gamma 0.5 --tau-max 1 --points 11 --out " +
                              out.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream f(out);
  std::string header;
  REQUIRE(std::getline(f, header));
  CHECK(header.rfind("tau,", 0) == 0);
}
