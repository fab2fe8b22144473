// Copyright 2026 The ewlext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "ewlext/ewl.h"
#include "ewlext/nash.h"
#include "ewlext/sampling.h"
#include "ewlext/sweep.h"

namespace ewlext {
namespace {

BimatrixGame BenchGame(std::size_t n) {
  Rng rng(99);
  return RandomGame(rng, n, n);
}

template <bool kParallel>
void BM_SupportEnumeration(benchmark::State& state) {
  const BimatrixGame g = BenchGame(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kParallel ? SupportEnumeration(g)
                                       : SupportEnumerationSerial(g));
  }
}
BENCHMARK_TEMPLATE(BM_SupportEnumeration, false)->DenseRange(3, 5);
BENCHMARK_TEMPLATE(BM_SupportEnumeration, true)->DenseRange(3, 5);

template <bool kParallel>
void BM_Sweep(benchmark::State& state) {
  SweepOptions options;
  options.thetas = {Angle::PiMultiple(Rational(1, 4)),
                    Angle::PiMultiple(Rational(1, 2))};
  options.phase_steps = state.range(0);
  options.allow_float_solve = true;
  const BimatrixGame g = PrisonersDilemma();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kParallel ? Sweep(g, options)
                                       : SweepSerial(g, options));
  }
}
BENCHMARK_TEMPLATE(BM_Sweep, false)->Arg(8)->Arg(16);
BENCHMARK_TEMPLATE(BM_Sweep, true)->Arg(8)->Arg(16);

template <bool kParallel>
void BM_Oracle(benchmark::State& state) {
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kParallel ? VerifyOracle(samples, 1, 5)
                                       : VerifyOracleSerial(samples, 1, 5));
  }
}
BENCHMARK_TEMPLATE(BM_Oracle, false)->Arg(1000);
BENCHMARK_TEMPLATE(BM_Oracle, true)->Arg(1000);

template <bool kParallel>
void BM_Census(benchmark::State& state) {
  const Angle theta = Angle::PiMultiple(Rational(1, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kParallel
                                 ? ClassifierCensus(theta, state.range(0))
                                 : ClassifierCensusSerial(theta, state.range(0)));
  }
}
BENCHMARK_TEMPLATE(BM_Census, false)->Arg(8)->Arg(64);
BENCHMARK_TEMPLATE(BM_Census, true)->Arg(8)->Arg(64);

template <bool kParallel>
void BM_Agreement(benchmark::State& state) {
  Rng rng(5);
  std::vector<BimatrixGame> games;
  for (int t = 0; t < 4; ++t) games.push_back(RandomGenericGame(rng));
  SweepOptions options;
  options.thetas = {Angle::PiMultiple(Rational(1, 2))};
  const auto grid = SweepGrid(options);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kParallel
                                 ? ClassifierOracleAgreement(games, grid)
                                 : ClassifierOracleAgreementSerial(games, grid));
  }
}
BENCHMARK_TEMPLATE(BM_Agreement, false);
BENCHMARK_TEMPLATE(BM_Agreement, true);

}  // namespace
}  // namespace ewlext

BENCHMARK_MAIN();
