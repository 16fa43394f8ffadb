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

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "gq/nn/tensor.hpp"

namespace gq::nn {

enum class Padding { Same, Valid };

/// Convolution parameters. Kernel layout is [out][in][kh][kw]; bias may be
/// empty. Kernel sizes must be odd for Same padding.
struct ConvParams {
    uint32_t out_channels = 0;
    uint32_t in_channels = 0;
    uint32_t kernel_h = 0;
    uint32_t kernel_w = 0;
    std::span<const float> kernel;
    std::span<const float> bias;
};

/// Y[i,j,o] = bias[o] + sum_{m,n,c} X[i*s+m-pad, j*s+n-pad, c] * K[o,c,m,n].
/// Same padding zero-fills (k-1)/2 on every side, so stride 1 keeps the
/// spatial size. Throws ShapeMismatch.
Tensor3 conv2d(const Tensor3 &input, const ConvParams &params, uint32_t stride, Padding padding);

inline float relu(float x) {
    return x > 0.0f ? x : 0.0f;
}
inline float lrelu(float x, float alpha = 0.2f) {
    return x > 0.0f ? x : alpha * x;
}
inline float sigmoid(float x) {
    return 1.0f / (1.0f + std::exp(-x));
}

void relu_inplace(Tensor3 &t);
void lrelu_inplace(Tensor3 &t, float alpha = 0.2f);
void sigmoid_inplace(Tensor3 &t);

/// Per-channel inference-mode batch norm parameters.
struct BnParams {
    std::span<const float> gamma;
    std::span<const float> beta;
    std::span<const float> running_mean;
    std::span<const float> running_var;
};

inline constexpr float kBatchNormEpsilon = 1e-5f;

/// y = gamma * (x - mean) / sqrt(var + eps) + beta, per channel.
Tensor3 bn_inference(Tensor3 x, const BnParams &params, float eps = kBatchNormEpsilon);

/// y = F(x) + x with F = conv_a -> relu -> conv_b (3x3, stride 1, same).
Tensor3 residual_block(const Tensor3 &x, const ConvParams &conv_a, const ConvParams &conv_b);

/// y = W x + b with W laid out [out][in].
std::vector<float> fully_connected(
    std::span<const float> x, std::span<const float> weight, std::span<const float> bias, uint32_t out_features);

}  // namespace gq::nn
