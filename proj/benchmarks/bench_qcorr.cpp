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

#include <benchmark/benchmark.h>

#include "qcorr/analysis.hpp"

namespace {

using namespace qcorr;

DensityMatrix trajectory_state(double tau) {
  return analytic_state(0.8806, tau).to_density_matrix();
}

void BM_HermitianEigensystem4(benchmark::State& state) {
  const Matrix4 m = trajectory_state(1.3).matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigensystem<4>(m));
  }
}
BENCHMARK(BM_HermitianEigensystem4);

void BM_Concurrence(benchmark::State& state) {
  const DensityMatrix m = trajectory_state(5.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence(m));
  }
}
BENCHMARK(BM_Concurrence);

void BM_DiscordGrid(benchmark::State& state) {
  const DensityMatrix m = trajectory_state(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(discord_min(m, Subsystem::B));
  }
}
BENCHMARK(BM_DiscordGrid);

void BM_XStateReport(benchmark::State& state) {
  const DensityMatrix m = trajectory_state(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_report(m, Subsystem::B));
  }
}
BENCHMARK(BM_XStateReport);

void BM_AnalyticState(benchmark::State& state) {
  double tau = 0.0;
  for (auto _ : state) {
    tau += 1e-4;
    benchmark::DoNotOptimize(analytic_state(0.8806, tau));
  }
}
BENCHMARK(BM_AnalyticState);

void BM_LindbladStep(benchmark::State& state) {
  const DensityMatrix m = trajectory_state(0.5);
  const DynamicsParams p{0.8806, 1.28, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(lindblad_rhs(m, p));
  }
}
BENCHMARK(BM_LindbladStep);

void BM_OnsetTime(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(onset_time(0.8806));
  }
}
BENCHMARK(BM_OnsetTime);

}  // namespace

BENCHMARK_MAIN();
