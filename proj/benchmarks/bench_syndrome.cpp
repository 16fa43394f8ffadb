// Copyright 2026 The gqdec Authors
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

#include <benchmark/benchmark.h>

#include "gq/lattice.hpp"
#include "gq/noise.hpp"
#include "gq/rng.hpp"
#include "gq/syndrome.hpp"

static void BM_SampleIid(benchmark::State &state) {
    gq::ToricLayout layout(static_cast<uint32_t>(state.range(0)));
    gq::RngStream rng(1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gq::sample_iid(layout, 0.1, rng));
    }
}
BENCHMARK(BM_SampleIid)->Arg(3)->Arg(5)->Arg(9)->Arg(17);

static void BM_ComputeSyndrome(benchmark::State &state) {
    gq::ToricLayout layout(static_cast<uint32_t>(state.range(0)));
    gq::RngStream rng(2, 0);
    gq::ErrorPattern e = gq::sample_iid(layout, 0.1, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gq::compute_syndrome(layout, e));
    }
}
BENCHMARK(BM_ComputeSyndrome)->Arg(3)->Arg(5)->Arg(9)->Arg(17);
