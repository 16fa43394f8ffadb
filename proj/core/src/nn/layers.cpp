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

#include "gq/nn/layers.hpp"

#include <Eigen/Core>
#include <string>

#include "gq/error.hpp"

namespace gq::nn {

namespace {

using RowMatrix = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstRowMap = Eigen::Map<const RowMatrix>;
using RowMap = Eigen::Map<RowMatrix>;

void check_conv(const Tensor3 &input, const ConvParams &p, uint32_t stride, Padding padding) {
    if (p.in_channels != input.channels()) {
        throw Error(
            ErrorCode::ShapeMismatch,
            "conv expects " + std::to_string(p.in_channels) + " input channels, got " +
                std::to_string(input.channels()));
    }
    size_t expected = static_cast<size_t>(p.out_channels) * p.in_channels * p.kernel_h * p.kernel_w;
    if (p.kernel.size() != expected || expected == 0) {
        throw Error(ErrorCode::ShapeMismatch, "conv kernel has " + std::to_string(p.kernel.size()) +
                                                  " values, expected " + std::to_string(expected));
    }
    if (!p.bias.empty() && p.bias.size() != p.out_channels) {
        throw Error(ErrorCode::ShapeMismatch, "conv bias size mismatch");
    }
    if (stride == 0) {
        throw Error(ErrorCode::ShapeMismatch, "conv stride must be positive");
    }
    if (padding == Padding::Same && (p.kernel_h % 2 == 0 || p.kernel_w % 2 == 0)) {
        throw Error(ErrorCode::ShapeMismatch, "same padding needs odd kernel sizes");
    }
}

// Kernel rearranged to a ((m*kw + n)*in + c) x out matrix.
RowMatrix pack_kernel(const ConvParams &p) {
    const uint32_t taps = p.kernel_h * p.kernel_w;
    RowMatrix packed(static_cast<Eigen::Index>(taps) * p.in_channels, p.out_channels);
    for (uint32_t o = 0; o < p.out_channels; o++) {
        for (uint32_t c = 0; c < p.in_channels; c++) {
            for (uint32_t t = 0; t < taps; t++) {
                packed(static_cast<Eigen::Index>(t) * p.in_channels + c, o) =
                    p.kernel[(static_cast<size_t>(o) * p.in_channels + c) * taps + t];
            }
        }
    }
    return packed;
}

// Stride-1 convolution as kh*kw shifted GEMMs over a zero-padded plane. Output
// is computed on the padded width and the wrap-around columns are dropped.
Tensor3 conv2d_stride1(const Tensor3 &input, const ConvParams &p, uint32_t pad_h, uint32_t pad_w) {
    const uint32_t H = input.height();
    const uint32_t W = input.width();
    const uint32_t C = input.channels();
    const uint32_t Hp = H + 2 * pad_h;
    const uint32_t Wp = W + 2 * pad_w;
    if (Hp < p.kernel_h || Wp < p.kernel_w) {
        throw Error(ErrorCode::ShapeMismatch, "conv kernel larger than padded input");
    }
    const uint32_t Ho = Hp - p.kernel_h + 1;
    const uint32_t Wo = Wp - p.kernel_w + 1;

    std::vector<float> padded((static_cast<size_t>(Hp) * Wp + p.kernel_w) * C, 0.0f);
    for (uint32_t i = 0; i < H; i++) {
        const float *src = input.data() + static_cast<size_t>(i) * W * C;
        float *dst = padded.data() + ((static_cast<size_t>(i) + pad_h) * Wp + pad_w) * C;
        std::copy(src, src + static_cast<size_t>(W) * C, dst);
    }

    RowMatrix packed = pack_kernel(p);
    const Eigen::Index rows = static_cast<Eigen::Index>(Ho) * Wp;
    RowMatrix acc = RowMatrix::Zero(rows, p.out_channels);
    for (uint32_t m = 0; m < p.kernel_h; m++) {
        for (uint32_t n = 0; n < p.kernel_w; n++) {
            const size_t offset = static_cast<size_t>(m) * Wp + n;
            ConstRowMap shifted(padded.data() + offset * C, rows, C);
            auto tap = packed.middleRows(static_cast<Eigen::Index>(m * p.kernel_w + n) * C, C);
            acc.noalias() += shifted * tap;
        }
    }

    Tensor3 out(Ho, Wo, p.out_channels);
    for (uint32_t i = 0; i < Ho; i++) {
        for (uint32_t j = 0; j < Wo; j++) {
            const float *src = acc.data() + (static_cast<size_t>(i) * Wp + j) * p.out_channels;
            float *dst = out.data() + (static_cast<size_t>(i) * Wo + j) * p.out_channels;
            for (uint32_t o = 0; o < p.out_channels; o++) {
                dst[o] = src[o] + (p.bias.empty() ? 0.0f : p.bias[o]);
            }
        }
    }
    return out;
}

Tensor3 conv2d_im2col(const Tensor3 &input, const ConvParams &p, uint32_t stride, uint32_t pad_h, uint32_t pad_w) {
    const int64_t H = input.height();
    const int64_t W = input.width();
    const uint32_t C = input.channels();
    const int64_t span_h = H + 2 * pad_h - p.kernel_h;
    const int64_t span_w = W + 2 * pad_w - p.kernel_w;
    if (span_h < 0 || span_w < 0) {
        throw Error(ErrorCode::ShapeMismatch, "conv kernel larger than padded input");
    }
    const uint32_t Ho = static_cast<uint32_t>(span_h / stride + 1);
    const uint32_t Wo = static_cast<uint32_t>(span_w / stride + 1);
    const uint32_t taps = p.kernel_h * p.kernel_w;

    RowMatrix cols = RowMatrix::Zero(static_cast<Eigen::Index>(Ho) * Wo, static_cast<Eigen::Index>(taps) * C);
    for (uint32_t i = 0; i < Ho; i++) {
        for (uint32_t j = 0; j < Wo; j++) {
            float *row = cols.data() + (static_cast<size_t>(i) * Wo + j) * taps * C;
            for (uint32_t m = 0; m < p.kernel_h; m++) {
                int64_t y = static_cast<int64_t>(i) * stride + m - pad_h;
                if (y < 0 || y >= H) {
                    continue;
                }
                for (uint32_t n = 0; n < p.kernel_w; n++) {
                    int64_t x = static_cast<int64_t>(j) * stride + n - pad_w;
                    if (x < 0 || x >= W) {
                        continue;
                    }
                    const float *src = input.data() + (static_cast<size_t>(y) * W + static_cast<size_t>(x)) * C;
                    std::copy(src, src + C, row + static_cast<size_t>(m * p.kernel_w + n) * C);
                }
            }
        }
    }
    RowMatrix packed = pack_kernel(p);
    Tensor3 out(Ho, Wo, p.out_channels);
    RowMap result(out.data(), static_cast<Eigen::Index>(Ho) * Wo, p.out_channels);
    result.noalias() = cols * packed;
    if (!p.bias.empty()) {
        Eigen::Map<const Eigen::RowVectorXf> bias(p.bias.data(), p.out_channels);
        result.rowwise() += bias;
    }
    return out;
}

}  // namespace

Tensor3 conv2d(const Tensor3 &input, const ConvParams &params, uint32_t stride, Padding padding) {
    check_conv(input, params, stride, padding);
    uint32_t pad_h = padding == Padding::Same ? (params.kernel_h - 1) / 2 : 0;
    uint32_t pad_w = padding == Padding::Same ? (params.kernel_w - 1) / 2 : 0;
    if (stride == 1) {
        return conv2d_stride1(input, params, pad_h, pad_w);
    }
    return conv2d_im2col(input, params, stride, pad_h, pad_w);
}

void relu_inplace(Tensor3 &t) {
    for (auto &v : t.values()) {
        v = relu(v);
    }
}

void lrelu_inplace(Tensor3 &t, float alpha) {
    for (auto &v : t.values()) {
        v = lrelu(v, alpha);
    }
}

void sigmoid_inplace(Tensor3 &t) {
    for (auto &v : t.values()) {
        v = sigmoid(v);
    }
}

Tensor3 bn_inference(Tensor3 x, const BnParams &params, float eps) {
    const uint32_t C = x.channels();
    if (params.gamma.size() != C || params.beta.size() != C || params.running_mean.size() != C ||
        params.running_var.size() != C) {
        throw Error(ErrorCode::ShapeMismatch, "batch norm parameters do not match " + std::to_string(C) + " channels");
    }
    std::vector<float> scale(C);
    std::vector<float> shift(C);
    for (uint32_t k = 0; k < C; k++) {
        scale[k] = params.gamma[k] / std::sqrt(params.running_var[k] + eps);
        shift[k] = params.beta[k] - scale[k] * params.running_mean[k];
    }
    auto v = x.values();
    for (size_t idx = 0; idx < v.size(); idx++) {
        size_t k = idx % C;
        v[idx] = v[idx] * scale[k] + shift[k];
    }
    return x;
}

Tensor3 residual_block(const Tensor3 &x, const ConvParams &conv_a, const ConvParams &conv_b) {
    if (conv_a.out_channels != x.channels() || conv_b.out_channels != x.channels()) {
        throw Error(ErrorCode::ShapeMismatch, "residual block must preserve the channel count");
    }
    Tensor3 f = conv2d(x, conv_a, 1, Padding::Same);
    relu_inplace(f);
    f = conv2d(f, conv_b, 1, Padding::Same);
    if (!f.same_shape(x)) {
        throw Error(ErrorCode::ShapeMismatch, "residual branch changed the tensor shape");
    }
    f += x;
    return f;
}

std::vector<float> fully_connected(
    std::span<const float> x, std::span<const float> weight, std::span<const float> bias, uint32_t out_features) {
    if (weight.size() != static_cast<size_t>(out_features) * x.size()) {
        throw Error(ErrorCode::ShapeMismatch, "fully connected weight does not match input size");
    }
    if (!bias.empty() && bias.size() != out_features) {
        throw Error(ErrorCode::ShapeMismatch, "fully connected bias size mismatch");
    }
    std::vector<float> y(out_features);
    for (uint32_t o = 0; o < out_features; o++) {
        double acc = bias.empty() ? 0.0 : bias[o];
        const float *row = weight.data() + static_cast<size_t>(o) * x.size();
        for (size_t k = 0; k < x.size(); k++) {
            acc += static_cast<double>(row[k]) * x[k];
        }
        y[o] = static_cast<float>(acc);
    }
    return y;
}

}  // namespace gq::nn
