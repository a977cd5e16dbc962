// Copyright 2026 The repchain Authors
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

// Serial reference sweep vs. the OpenMP sweep on the full threshold grid.

#include <benchmark/benchmark.h>

#include "repchain/experiment.hpp"

namespace {

using namespace repchain;

SettingGrid grid_up_to(std::int64_t n_max) {
    SettingGrid g;
    g.n_max = static_cast<std::size_t>(n_max);
    return g;
}

void BM_SweepSerial(benchmark::State& state) {
    const Preset p = preset("b");
    const SettingGrid g = grid_up_to(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_sweep_serial(p, g));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.rows()));
}

void BM_SweepParallel(benchmark::State& state) {
    const Preset p = preset("b");
    const SettingGrid g = grid_up_to(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_sweep(p, g));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.rows()));
}

void BM_SingleConnection(benchmark::State& state) {
    const Preset p = preset("b");
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_point(p, 0.999, std::nullopt, 0.99, n));
    }
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SingleConnection)->Arg(16)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
