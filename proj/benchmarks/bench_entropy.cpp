// Copyright 2026 The Renyi-Inf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "renyi/constructions.hpp"
#include "renyi/distribution.hpp"
#include "renyi/entropy.hpp"

namespace {

using namespace renyi;

TailedDistribution tail_of(int which) {
  switch (which) {
    case 0: return TailedDistribution::make({}, GeometricTail::with_ratio(0.5, 0.5, 1));
    case 1: return normalize({}, PowerTail{1.0, 2.0, 1}, 1e-12);
    case 2: return normalize({}, LogPowerTail{1.0, 2.0, 4.0, 2}, 1e-12);
    default: return normalize({}, LogPowerTail{1.0, 1.0, 3.0, 2}, 1e-12);
  }
}

// Args: tail family, alpha * 10.
void BM_Renyi(benchmark::State& state) {
  const auto p = tail_of(static_cast<int>(state.range(0)));
  const double alpha = state.range(1) / 10.0;
  const EvalConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(entropy_at(p, alpha, cfg));
}
BENCHMARK(BM_Renyi)
    ->ArgsProduct({{0, 1, 2, 3}, {15, 20, 50}})
    ->Unit(benchmark::kMicrosecond);

void BM_Shannon(benchmark::State& state) {
  const auto p = tail_of(static_cast<int>(state.range(0)));
  const EvalConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(shannon_entropy(p, cfg));
}
BENCHMARK(BM_Shannon)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_TotalVariation(benchmark::State& state) {
  const auto p = tail_of(0);
  const auto q = tail_of(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(total_variation(p, q, 1e-9));
}
BENCHMARK(BM_TotalVariation)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_SolveShift(benchmark::State& state) {
  const auto p = tail_of(0);
  const EvalConfig cfg;
  const auto n = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_shift(p, 0.5, 1.0, n, cfg));
}
BENCHMARK(BM_SolveShift)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
