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

#include <random>

#include <benchmark/benchmark.h>

#include "photstat/permanent.hpp"
#include "photstat/random.hpp"

namespace {

void BM_PermanentRyser(benchmark::State &state) {
  std::mt19937_64 rng(42);
  const auto m = photstat::random_disk_matrix(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(photstat::permanent(m));
}
BENCHMARK(BM_PermanentRyser)->DenseRange(8, 20, 2);

void BM_PermanentNaive(benchmark::State &state) {
  std::mt19937_64 rng(42);
  const auto m = photstat::random_disk_matrix(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(photstat::permanent_naive(m));
}
BENCHMARK(BM_PermanentNaive)->DenseRange(4, 9);

}  // namespace
