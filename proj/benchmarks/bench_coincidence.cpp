// Copyright 2026 The photstat Authors
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

#include <numbers>

#include <benchmark/benchmark.h>

#include "photstat/circuits.hpp"
#include "photstat/coincidence.hpp"
#include "photstat/fock_oracle.hpp"
#include "photstat/optimize.hpp"
#include "photstat/sources.hpp"

namespace {

using std::numbers::pi;

void BM_CoincidenceDft(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const photstat::Circuit c = photstat::dft(n);
  const auto ens = photstat::InputEnsemble::symmetric(photstat::thermal_stats(), n);
  for (auto _ : state) benchmark::DoNotOptimize(photstat::coincidence_id_general(c, ens));
}
BENCHMARK(BM_CoincidenceDft)->DenseRange(2, 6);

void BM_WeightsReuse(benchmark::State &state) {
  const photstat::InterferenceWeights w(photstat::dft(4));
  const double g[] = {1.0, 1.0, 2.0, 6.0, 24.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(w.evaluate_symmetric(g, photstat::Distinguishability::kIndistinguishable));
  }
}
BENCHMARK(BM_WeightsReuse);

void BM_OracleDft3(benchmark::State &state) {
  const photstat::Circuit c = photstat::dft(3);
  const auto in = photstat::oracle::make_inputs(photstat::oracle::vac12_mixture(0.3, 0.5),
                                                photstat::oracle::same_label(3));
  for (auto _ : state) benchmark::DoNotOptimize(photstat::oracle::oracle_coincidence(c, in));
}
BENCHMARK(BM_OracleDft3);

void BM_PhaseScan(benchmark::State &state) {
  const auto sources = photstat::comparison_sources();
  const auto grid = photstat::linspace(0.0, 2 * pi, 401);
  for (auto _ : state) benchmark::DoNotOptimize(photstat::scan_phase(sources, grid));
}
BENCHMARK(BM_PhaseScan)->Unit(benchmark::kMillisecond);

void BM_MaximizeClassical(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(photstat::maximize_classical(pi / 2));
}
BENCHMARK(BM_MaximizeClassical);

}  // namespace
