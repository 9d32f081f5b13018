// SPDX-License-Identifier: Apache-2.0
//
// xlirs: near-field SNR analysis for extremely large intelligent reflecting surfaces
// Copyright (C) 2026 The xlirs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "xlirs/kernels.hpp"
#include "xlirs/parallel.hpp"
#include "xlirs/presets.hpp"

#include <benchmark/benchmark.h>

namespace
{

using namespace xlirs;

Scenario square(std::int64_t m)
{
    return presets::boresight_square(static_cast<double>(m) * presets::kSpacing);
}

void BM_Reference(benchmark::State &state)
{
    const auto s = square(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::amplitude_sum_reference(s));
    state.SetItemsProcessed(state.iterations() * s.geometry().element_count());
}

void BM_ChunkedSerial(benchmark::State &state)
{
    const auto s = square(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::amplitude_sum_chunked(s, 1));
    state.SetItemsProcessed(state.iterations() * s.geometry().element_count());
}

void BM_ChunkedParallel(benchmark::State &state)
{
    const auto s = square(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::amplitude_sum_chunked(s));
    state.SetItemsProcessed(state.iterations() * s.geometry().element_count());
    state.counters["threads"] = worker_threads();
}

} // namespace

BENCHMARK(BM_Reference)->Arg(101)->Arg(1001)->Arg(3163)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChunkedSerial)->Arg(101)->Arg(1001)->Arg(3163)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChunkedParallel)->Arg(101)->Arg(1001)->Arg(3163)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
