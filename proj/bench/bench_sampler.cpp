// Copyright 2026 The bsm-sim Authors
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

// Serial reference sampler vs the OpenMP one, and exact distribution cost.

#include <benchmark/benchmark.h>

#include "bsm/detector.hpp"
#include "bsm/schemes.hpp"

namespace {

const bsm::Distribution &phi_plus() {
    static const auto d = bsm::ideal_distribution(bsm::SchemeKind::Enhanced, bsm::BellKind::PhiPlus);
    return d;
}

void BM_SampleSerial(benchmark::State &state) {
    const bsm::PnrConfig cfg{8, 0.886, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bsm::sample_serial(phi_plus(), cfg, static_cast<std::uint64_t>(state.range(0))));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SampleParallel(benchmark::State &state) {
    const bsm::PnrConfig cfg{8, 0.886, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bsm::sample(phi_plus(), cfg, static_cast<std::uint64_t>(state.range(0))));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_IdealDistributions(benchmark::State &state) {
    const auto scheme = state.range(0) == 0 ? bsm::SchemeKind::Standard : bsm::SchemeKind::Enhanced;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bsm::ideal_distributions(scheme));
    }
}

} // namespace

BENCHMARK(BM_SampleSerial)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleParallel)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdealDistributions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
