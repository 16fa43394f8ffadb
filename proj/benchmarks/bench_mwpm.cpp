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

#include <vector>

#include "gq/homology.hpp"
#include "gq/lattice.hpp"
#include "gq/matching.hpp"
#include "gq/noise.hpp"
#include "gq/rng.hpp"
#include "gq/syndrome.hpp"

// Decodes a fixed pool of syndromes drawn at rate range(1)/1000.
static void BM_DecodeMwpm(benchmark::State &state) {
    gq::ToricLayout layout(static_cast<uint32_t>(state.range(0)));
    const double p = static_cast<double>(state.range(1)) / 1000.0;
    gq::RngStream rng(3, 0);
    std::vector<gq::Syndrome> pool;
    for (int i = 0; i < 256; i++) {
        pool.push_back(gq::compute_syndrome(layout, gq::sample_iid(layout, p, rng)));
    }
    size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gq::decode_mwpm(layout, pool[k++ % pool.size()]));
    }
}
BENCHMARK(BM_DecodeMwpm)->Args({3, 100})->Args({5, 100})->Args({9, 100})->Args({17, 100})->Args({5, 160});

static void BM_ExactMwpmSuccess(benchmark::State &state) {
    gq::ToricLayout layout(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gq::mwpm_exact_success(layout, 0.05));
    }
}
BENCHMARK(BM_ExactMwpmSuccess)->Unit(benchmark::kMillisecond);
