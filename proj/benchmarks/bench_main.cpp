// Copyright 2026 The coselect Authors.
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

#include "coselect/community.hpp"
#include "coselect/ensemble.hpp"
#include "coselect/metrics.hpp"
#include "coselect/null_models.hpp"

namespace {

using namespace coselect;

Graph er_graph(std::size_t n, std::size_t m) {
  Engine rng(42);
  return er_gnm(n, m, rng);
}

void BM_Betweenness(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = er_graph(n, 3 * n);
  for (auto _ : state) benchmark::DoNotOptimize(betweenness_all(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Betweenness)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_GirvanNewman(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = er_graph(n, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(girvan_newman(g));
}
BENCHMARK(BM_GirvanNewman)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_SwitchRandomize(benchmark::State& state) {
  const auto g = er_graph(100, 300);
  Engine rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(switch_randomize(g, kDefaultSwapMultiplier, rng));
}
BENCHMARK(BM_SwitchRandomize);

void BM_CalibrateRadius(benchmark::State& state) {
  Engine rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(calibrate_radius(60, 120, rng));
}
BENCHMARK(BM_CalibrateRadius)->Unit(benchmark::kMillisecond);

void BM_Ensemble(benchmark::State& state) {
  const auto g = er_graph(30, 60);
  const NullModelSpec spec{ErdosRenyiParams{30, 60}};
  const EnsembleOptions options{static_cast<std::size_t>(state.range(0)), CorrelationKind::Spearman, 1};
  for (auto _ : state) benchmark::DoNotOptimize(ensemble_summaries(g, spec, options, SeededRng(3)));
}
BENCHMARK(BM_Ensemble)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
