// Copyright 2026 The gegencert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "gegencert/estimates.hpp"
#include "gegencert/induction.hpp"
#include "gegencert/lemmas.hpp"

namespace gegencert {
namespace {

const AlphaCell kCell{Rat(1, 2), Rat(51, 100)};

void BM_MinimumDirect(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_minimum_direct(k));
}
BENCHMARK(BM_MinimumDirect)->Arg(6)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_MinimumAsymptotic(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_minimum_asymptotic(k));
}
BENCHMARK(BM_MinimumAsymptotic)->Arg(51)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_Plateau(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_plateau(k));
}
BENCHMARK(BM_Plateau)->Arg(30)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_StepTables(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(StepTables(n));
}
BENCHMARK(BM_StepTables)->Arg(100)->Arg(2000)->Unit(benchmark::kMicrosecond);

void BM_SpectralMonotone(benchmark::State& state) {
  const StepTables t(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_f_monotone(t, kCell));
}
BENCHMARK(BM_SpectralMonotone)->Arg(10)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_GapNegativity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_h_negativity(n, kCell));
}
BENCHMARK(BM_GapNegativity)->Arg(10)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_BaseCase(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(base_case_n3(kCell));
}
BENCHMARK(BM_BaseCase)->Unit(benchmark::kMillisecond);

void BM_RunInduction(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_induction(kCell, n_max));
}
BENCHMARK(BM_RunInduction)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_PropertySuite(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_property_suite(42, count));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_PropertySuite)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace gegencert

BENCHMARK_MAIN();
