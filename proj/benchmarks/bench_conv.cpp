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

#include "gq/nn/layers.hpp"
#include "gq/nn/network.hpp"

// 3x3 convolution on a 128x128 image, channels in -> out, at the given stride.
static void BM_Conv3x3(benchmark::State &state) {
    const auto in = static_cast<uint32_t>(state.range(0));
    const auto out = static_cast<uint32_t>(state.range(1));
    const auto stride = static_cast<uint32_t>(state.range(2));
    gq::nn::Tensor3 x(128, 128, in, 0.5f);
    std::vector<float> k(size_t(out) * in * 9, 0.01f), b(out, 0.0f);
    gq::nn::ConvParams p{out, in, 3, 3, k, b};
    for (auto _ : state) {
        benchmark::DoNotOptimize(gq::nn::conv2d(x, p, stride, gq::nn::Padding::Same));
    }
}
BENCHMARK(BM_Conv3x3)->Args({64, 64, 1})->Args({64, 256, 1})->Args({64, 128, 2})->Unit(benchmark::kMillisecond);

static void BM_GeneratorForward(benchmark::State &state) {
    auto w = gq::nn::make_weights(gq::nn::Network::Generator, 3, gq::nn::Init::Random, 1);
    gq::nn::Tensor3 x(128, 128, 3, 0.25f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gq::nn::generator_forward(w, x));
    }
}
BENCHMARK(BM_GeneratorForward)->Unit(benchmark::kMillisecond);
