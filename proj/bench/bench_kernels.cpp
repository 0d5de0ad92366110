// Copyright 2026 The qgame Authors
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

// Serial reference kernels against their OpenMP counterparts. Each pair runs
// the same workload; only the execution policy differs.

#include <benchmark/benchmark.h>

#include "qgame/analysis.hpp"
#include "qgame/equilibrium.hpp"
#include "qgame/kernels.hpp"

namespace {

using namespace qgame;

const PayoffTable kTable = BosTable(BosParams{});

Exec ExecOf(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::kSerial : Exec::kParallel;
}

void SetLabel(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "omp"); }

void BM_PayoffGrid(benchmark::State& state) {
  const std::vector<double> axis = UniformGrid(static_cast<int>(state.range(1)));
  const ProfilePayoffFn fn = [](double p, double q) {
    return MwPlay(PhiPlus(), RestrictedProfile{p, q}, kTable).payoffs;
  };
  for (auto _ : state) benchmark::DoNotOptimize(EvaluateGrid(fn, axis, axis, ExecOf(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1) * state.range(1));
  SetLabel(state);
}
BENCHMARK(BM_PayoffGrid)->ArgsProduct({{0, 1}, {101, 401}})->Unit(benchmark::kMillisecond);

void BM_UnitaryBatch(benchmark::State& state) {
  constexpr int kDim = 6;
  const int count = static_cast<int>(state.range(1));
  std::vector<double> pts(static_cast<std::size_t>(kDim) * count);
  Rng rng(1);
  for (double& x : pts) x = rng.Uniform(-3.14, 3.14);
  const ObjectiveFn f = [](std::span<const double> x) { return UnitaryPayoff(kTable, PhiPlus(), x); };
  for (auto _ : state) benchmark::DoNotOptimize(EvaluateBatch(f, pts, kDim, ExecOf(state)));
  state.SetItemsProcessed(state.iterations() * count);
  SetLabel(state);
}
BENCHMARK(BM_UnitaryBatch)->ArgsProduct({{0, 1}, {4096, 65536}})->Unit(benchmark::kMillisecond);

void BM_RestrictedEquilibria(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RestrictedEquilibria(PhiPlus(), kTable, n, kDefaultEps, ExecOf(state)));
  }
  SetLabel(state);
}
BENCHMARK(BM_RestrictedEquilibria)->ArgsProduct({{0, 1}, {101, 301}})->Unit(benchmark::kMillisecond);

void BM_UnitarySupremum(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(UnitaryPayoffSupremum(kTable, PhiPlus(), 16, 400, 42, ExecOf(state)));
  }
  SetLabel(state);
}
BENCHMARK(BM_UnitarySupremum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
