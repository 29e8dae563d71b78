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

#include "gegencert/gegenbauer.hpp"
#include "gegencert/interval.hpp"
#include "gegencert/rational.hpp"
#include "gegencert/roots.hpp"

namespace gegencert {
namespace {

void BM_GegenbauerRecurrence(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // Fresh order each round so the cache does not hide the recurrence.
    RatPoly prev = RatPoly::constant(Rat(1));
    RatPoly cur = RatPoly::monomial(Rat(5), 1);
    const Rat nu(5, 2);
    for (int j = 1; j < k; ++j) {
      RatPoly next = (Rat(2) * (Rat(j) + nu) * (RatPoly::identity() * cur) -
                      (Rat(j - 1) + Rat(2) * nu) * prev) *
                     (Rat(1) / Rat(j + 1));
      prev = std::move(cur);
      cur = std::move(next);
    }
    benchmark::DoNotOptimize(cur);
  }
}
BENCHMARK(BM_GegenbauerRecurrence)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_PolyEval(benchmark::State& state) {
  const RatPoly& p = scaled_derivative(static_cast<int>(state.range(0)));
  const Rat x(9973, 10007);
  for (auto _ : state) benchmark::DoNotOptimize(p(x));
}
BENCHMARK(BM_PolyEval)->Arg(10)->Arg(100)->Arg(500);

void BM_IsolateRoots(benchmark::State& state) {
  const RatPoly& p = gegenbauer(HalfInt(7), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(p, Rat(-1), Rat(1)));
}
BENCHMARK(BM_IsolateRoots)->Arg(8)->Arg(28)->Arg(48)->Unit(benchmark::kMillisecond);

void BM_CertifiedMin(benchmark::State& state) {
  const RatPoly& p = scaled_derivative(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(certified_min_on_interval(p, Rat(0), Rat(1), Rat(1, 10000)));
  }
}
BENCHMARK(BM_CertifiedMin)->Arg(10)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_IntervalArithmetic(benchmark::State& state) {
  Interval x(0.1, 0.2), y(1.5, 1.75);
  for (auto _ : state) {
    Interval z = (x + y) * (x - y) / y;
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_IntervalArithmetic);

void BM_IntervalCos(benchmark::State& state) {
  Interval x(0.7, 0.7000001);
  for (auto _ : state) benchmark::DoNotOptimize(cos(x));
}
BENCHMARK(BM_IntervalCos);

void BM_GammaRatio(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_ratio({k, 9}));
}
BENCHMARK(BM_GammaRatio)->Arg(51)->Arg(5000);

}  // namespace
}  // namespace gegencert

BENCHMARK_MAIN();
