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

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gq/nn/tensor.hpp"
#include "gq/nn/weights.hpp"

namespace gq::nn {

inline constexpr uint32_t kImageSize = 128;
inline constexpr uint32_t kGeneratorInputChannels = 3;
inline constexpr uint32_t kDiscriminatorInputChannels = 4;
inline constexpr uint32_t kResidualBlocks = 7;

enum class Network { Generator, Discriminator };

std::string_view network_name(Network net);

struct SchemaEntry {
    std::string name;
    LayerKind kind;
    std::vector<uint32_t> dims;
};

/// Ordered record list a weight file must carry.
///
/// Generator: conv1 3x3 3->64, res1..res7 (two 3x3 64->64 convs each),
/// conv9 3x3 64->256, conv10 3x3 256->1; every conv has a bias record.
///
/// Discriminator: conv1 3x3/1 4->64, conv2..conv4 3x3/2 to 128, 256, 512,
/// conv5 3x3/1 512->256, conv6 1x1 256->128, res1 1x1 128->64, res2 3x3
/// 64->64, res3 3x3 64->128, a 1x1 projection shortcut 128->128 and fc
/// 16*16*128->1. Every conv except conv1 is followed by a bn record whose
/// dims are [4][C] holding gamma, beta, running mean, running variance.
const std::vector<SchemaEntry> &schema(Network net);

/// Checks record names, kinds and dims against the schema, in order.
/// Throws SchemaMismatch.
void validate(const ModelWeights &weights, Network net);

/// Observer for intermediate activations, called with the layer name.
using TapFn = std::function<void(std::string_view, const Tensor3 &)>;

/// 128x128x3 -> 128x128x1. Conv1 and Conv9 are followed by ReLU, residual
/// blocks add F(x) to x without a trailing activation, Conv10 by a sigmoid.
/// Taps: conv1, res1..res7, conv9, output. Throws SchemaMismatch, ShapeMismatch.
Tensor3 generator_forward(const ModelWeights &weights, const Tensor3 &input, const TapFn &tap = {});

/// 128x128x4 (syndrome channels plus correction map) -> probability.
/// Taps: conv1..conv6, res, output (1x1x1).
float discriminator_forward(const ModelWeights &weights, const Tensor3 &input, const TapFn &tap = {});

enum class Init { Zero, Random };

/// Weights that satisfy the schema. Zero init sets every conv and fc value to
/// 0 and batch norms to the identity; random init draws uniform values with
/// variance 1/fan_in from `seed`.
ModelWeights make_weights(Network net, uint32_t d, Init init, uint64_t seed = 0, std::string run_id = "");

struct GoldenCheck {
    std::string name;  // golden record name, e.g. "vec0/res3"
    double relative_error = 0.0;
};

struct GoldenReport {
    size_t vectors = 0;
    std::vector<GoldenCheck> checks;
    double max_relative_error = 0.0;
    double tolerance = 0.0;
    bool passed() const {
        return vectors > 0 && max_relative_error <= tolerance;
    }
};

inline constexpr double kGoldenTolerance = 1e-4;

/// Replays every "vec{i}/input" record of a golden file through the network
/// named in the weight metadata and compares each recorded "vec{i}/<tap>"
/// tensor. Throws SchemaMismatch when a golden record names no known tap or
/// the weights fail validation.
GoldenReport verify_golden(const ModelWeights &weights, const ModelWeights &golden,
                           double tolerance = kGoldenTolerance);

/// Network named by the metadata. Throws SchemaMismatch.
Network network_of(const ModelWeights &weights);

}  // namespace gq::nn
