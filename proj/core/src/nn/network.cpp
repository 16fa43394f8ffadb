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

#include "gq/nn/network.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gq/error.hpp"
#include "gq/nn/layers.hpp"
#include "gq/rng.hpp"

namespace gq::nn {

namespace {

void add_conv(std::vector<SchemaEntry> &out, const std::string &name, uint32_t out_ch, uint32_t in_ch, uint32_t k) {
    out.push_back({name + ".weight", LayerKind::Conv, {out_ch, in_ch, k, k}});
    out.push_back({name + ".bias", LayerKind::Conv, {out_ch}});
}

void add_bn(std::vector<SchemaEntry> &out, const std::string &name, uint32_t ch) {
    out.push_back({name + ".bn", LayerKind::Bn, {4, ch}});
}

std::vector<SchemaEntry> build_generator_schema() {
    std::vector<SchemaEntry> s;
    add_conv(s, "conv1", 64, kGeneratorInputChannels, 3);
    for (uint32_t i = 1; i <= kResidualBlocks; i++) {
        std::string block = "res" + std::to_string(i);
        add_conv(s, block + ".conv1", 64, 64, 3);
        add_conv(s, block + ".conv2", 64, 64, 3);
    }
    add_conv(s, "conv9", 256, 64, 3);
    add_conv(s, "conv10", 1, 256, 3);
    return s;
}

constexpr uint32_t kFeatureSide = kImageSize / 8;
constexpr uint32_t kFeatureChannels = 128;

std::vector<SchemaEntry> build_discriminator_schema() {
    std::vector<SchemaEntry> s;
    add_conv(s, "conv1", 64, kDiscriminatorInputChannels, 3);
    add_conv(s, "conv2", 128, 64, 3);
    add_bn(s, "conv2", 128);
    add_conv(s, "conv3", 256, 128, 3);
    add_bn(s, "conv3", 256);
    add_conv(s, "conv4", 512, 256, 3);
    add_bn(s, "conv4", 512);
    add_conv(s, "conv5", 256, 512, 3);
    add_bn(s, "conv5", 256);
    add_conv(s, "conv6", 128, 256, 1);
    add_bn(s, "conv6", 128);
    add_conv(s, "res1", 64, 128, 1);
    add_bn(s, "res1", 64);
    add_conv(s, "res2", 64, 64, 3);
    add_bn(s, "res2", 64);
    add_conv(s, "res3", 128, 64, 3);
    add_bn(s, "res3", 128);
    add_conv(s, "res.shortcut", 128, 128, 1);
    s.push_back({"fc.weight", LayerKind::Fc, {1, kFeatureSide * kFeatureSide * kFeatureChannels}});
    s.push_back({"fc.bias", LayerKind::Fc, {1}});
    return s;
}

std::string dims_str(const std::vector<uint32_t> &dims) {
    std::string s = "[";
    for (size_t k = 0; k < dims.size(); k++) {
        s += (k ? "," : "") + std::to_string(dims[k]);
    }
    return s + "]";
}

ConvParams conv_params(const ModelWeights &w, const std::string &name) {
    const auto &k = w.get(name + ".weight");
    const auto &b = w.get(name + ".bias");
    return ConvParams{k.dims[0], k.dims[1], k.dims[2], k.dims[3], k.data, b.data};
}

BnParams bn_params(const ModelWeights &w, const std::string &name) {
    const auto &r = w.get(name + ".bn");
    std::span<const float> all = r.data;
    size_t c = r.dims[1];
    return BnParams{all.subspan(0, c), all.subspan(c, c), all.subspan(2 * c, c), all.subspan(3 * c, c)};
}

void check_input(const Tensor3 &input, uint32_t channels) {
    if (input.height() != kImageSize || input.width() != kImageSize || input.channels() != channels) {
        throw Error(
            ErrorCode::ShapeMismatch, "network input must be 128x128x" + std::to_string(channels) + ", got " +
                                          std::to_string(input.height()) + "x" + std::to_string(input.width()) +
                                          "x" + std::to_string(input.channels()));
    }
}

void emit(const TapFn &tap, std::string_view name, const Tensor3 &t) {
    if (tap) {
        tap(name, t);
    }
}

// conv -> bn -> lrelu, the discriminator's basic unit.
Tensor3 conv_bn_lrelu(const ModelWeights &w, const std::string &name, const Tensor3 &x, uint32_t stride) {
    Tensor3 y = conv2d(x, conv_params(w, name), stride, Padding::Same);
    y = bn_inference(std::move(y), bn_params(w, name));
    lrelu_inplace(y);
    return y;
}

}  // namespace

std::string_view network_name(Network net) {
    return net == Network::Generator ? "generator" : "discriminator";
}

const std::vector<SchemaEntry> &schema(Network net) {
    static const std::vector<SchemaEntry> gen = build_generator_schema();
    static const std::vector<SchemaEntry> disc = build_discriminator_schema();
    return net == Network::Generator ? gen : disc;
}

void validate(const ModelWeights &weights, Network net) {
    const auto &s = schema(net);
    if (!weights.metadata.network.empty() && weights.metadata.network != network_name(net)) {
        throw Error(
            ErrorCode::SchemaMismatch,
            "file holds a " + weights.metadata.network + ", expected " + std::string(network_name(net)));
    }
    if (weights.layers.size() != s.size()) {
        throw Error(
            ErrorCode::SchemaMismatch, std::string(network_name(net)) + " expects " + std::to_string(s.size()) +
                                           " records, file has " + std::to_string(weights.layers.size()));
    }
    for (size_t k = 0; k < s.size(); k++) {
        const auto &have = weights.layers[k];
        const auto &want = s[k];
        if (have.name != want.name || have.kind != want.kind || have.dims != want.dims) {
            throw Error(
                ErrorCode::SchemaMismatch, "record " + std::to_string(k) + ": expected " + want.name + " " +
                                               dims_str(want.dims) + ", got " + have.name + " " +
                                               dims_str(have.dims));
        }
        if (have.data.size() != have.numel()) {
            throw Error(ErrorCode::SchemaMismatch, "record " + have.name + " payload size mismatch");
        }
    }
}

Tensor3 generator_forward(const ModelWeights &weights, const Tensor3 &input, const TapFn &tap) {
    validate(weights, Network::Generator);
    check_input(input, kGeneratorInputChannels);

    Tensor3 x = conv2d(input, conv_params(weights, "conv1"), 1, Padding::Same);
    relu_inplace(x);
    emit(tap, "conv1", x);
    for (uint32_t i = 1; i <= kResidualBlocks; i++) {
        std::string block = "res" + std::to_string(i);
        x = residual_block(x, conv_params(weights, block + ".conv1"), conv_params(weights, block + ".conv2"));
        emit(tap, block, x);
    }
    x = conv2d(x, conv_params(weights, "conv9"), 1, Padding::Same);
    relu_inplace(x);
    emit(tap, "conv9", x);
    x = conv2d(x, conv_params(weights, "conv10"), 1, Padding::Same);
    sigmoid_inplace(x);
    emit(tap, "output", x);
    return x;
}

float discriminator_forward(const ModelWeights &weights, const Tensor3 &input, const TapFn &tap) {
    validate(weights, Network::Discriminator);
    check_input(input, kDiscriminatorInputChannels);

    Tensor3 x = conv2d(input, conv_params(weights, "conv1"), 1, Padding::Same);
    lrelu_inplace(x);
    emit(tap, "conv1", x);
    x = conv_bn_lrelu(weights, "conv2", x, 2);
    emit(tap, "conv2", x);
    x = conv_bn_lrelu(weights, "conv3", x, 2);
    emit(tap, "conv3", x);
    x = conv_bn_lrelu(weights, "conv4", x, 2);
    emit(tap, "conv4", x);
    x = conv_bn_lrelu(weights, "conv5", x, 1);
    emit(tap, "conv5", x);
    x = conv_bn_lrelu(weights, "conv6", x, 1);
    emit(tap, "conv6", x);

    Tensor3 r = conv_bn_lrelu(weights, "res1", x, 1);
    r = conv_bn_lrelu(weights, "res2", r, 1);
    r = conv2d(r, conv_params(weights, "res3"), 1, Padding::Same);
    r = bn_inference(std::move(r), bn_params(weights, "res3"));
    r += conv2d(x, conv_params(weights, "res.shortcut"), 1, Padding::Same);
    lrelu_inplace(r);
    emit(tap, "res", r);

    const auto &fw = weights.get("fc.weight");
    const auto &fb = weights.get("fc.bias");
    auto logit = fully_connected(r.values(), fw.data, fb.data, 1);
    float prob = sigmoid(logit[0]);
    emit(tap, "output", Tensor3(1, 1, 1, prob));
    return prob;
}

ModelWeights make_weights(Network net, uint32_t d, Init init, uint64_t seed, std::string run_id) {
    ModelWeights w;
    w.metadata.d = d;
    w.metadata.network = std::string(network_name(net));
    w.metadata.content = "weights";
    w.metadata.run_id = run_id.empty() ? (init == Init::Zero ? "zero" : "random-" + std::to_string(seed)) : run_id;

    RngStream rng(seed, 0);
    uint32_t fan_in = 1;
    for (const auto &entry : schema(net)) {
        LayerRecord r;
        r.name = entry.name;
        r.kind = entry.kind;
        r.dims = entry.dims;
        r.data.assign(r.numel(), 0.0f);
        bool is_weight = entry.name.ends_with(".weight");
        if (entry.kind == LayerKind::Bn) {
            uint32_t c = entry.dims[1];
            for (uint32_t k = 0; k < c; k++) {
                r.data[k] = 1.0f;          // gamma
                r.data[3 * c + k] = 1.0f;  // running variance
            }
            if (init == Init::Random) {
                for (uint32_t k = 0; k < c; k++) {
                    r.data[k] = static_cast<float>(0.5 + rng.uniform());
                    r.data[c + k] = static_cast<float>(0.2 * (rng.uniform() - 0.5));
                    r.data[2 * c + k] = static_cast<float>(0.2 * (rng.uniform() - 0.5));
                    r.data[3 * c + k] = static_cast<float>(0.5 + rng.uniform());
                }
            }
        } else if (init == Init::Random) {
            if (is_weight) {
                fan_in = 1;
                for (size_t k = 1; k < entry.dims.size(); k++) {
                    fan_in *= entry.dims[k];
                }
            }
            double bound = is_weight ? std::sqrt(3.0 / fan_in) : 1.0 / std::sqrt(static_cast<double>(fan_in));
            for (auto &v : r.data) {
                v = static_cast<float>(bound * (2.0 * rng.uniform() - 1.0));
            }
        }
        w.layers.push_back(std::move(r));
    }
    refresh_metadata(w);
    return w;
}

Network network_of(const ModelWeights &weights) {
    if (weights.metadata.network == "generator") {
        return Network::Generator;
    }
    if (weights.metadata.network == "discriminator") {
        return Network::Discriminator;
    }
    throw Error(ErrorCode::SchemaMismatch, "unknown network '" + weights.metadata.network + "'");
}

GoldenReport verify_golden(const ModelWeights &weights, const ModelWeights &golden, double tolerance) {
    const Network net = network_of(weights);
    validate(weights, net);

    // Group golden records by vector prefix, keeping file order.
    std::vector<std::string> prefixes;
    std::map<std::string, std::map<std::string, const LayerRecord *>> groups;
    for (const auto &rec : golden.layers) {
        auto slash = rec.name.find('/');
        if (slash == std::string::npos) {
            throw Error(ErrorCode::SchemaMismatch, "golden record '" + rec.name + "' lacks a vector prefix");
        }
        std::string prefix = rec.name.substr(0, slash);
        if (!groups.count(prefix)) {
            prefixes.push_back(prefix);
        }
        groups[prefix][rec.name.substr(slash + 1)] = &rec;
    }

    GoldenReport report;
    report.tolerance = tolerance;
    for (const auto &prefix : prefixes) {
        auto &recs = groups[prefix];
        auto in = recs.find("input");
        if (in == recs.end()) {
            throw Error(ErrorCode::SchemaMismatch, "golden vector '" + prefix + "' has no input");
        }
        std::map<std::string, Tensor3, std::less<>> seen;
        TapFn tap = [&](std::string_view name, const Tensor3 &t) { seen.emplace(std::string(name), t); };
        Tensor3 input = in->second->as_tensor();
        if (net == Network::Generator) {
            generator_forward(weights, input, tap);
        } else {
            discriminator_forward(weights, input, tap);
        }
        for (const auto &[tap_name, rec] : recs) {
            if (tap_name == "input") {
                continue;
            }
            auto it = seen.find(tap_name);
            if (it == seen.end()) {
                throw Error(ErrorCode::SchemaMismatch, "golden record '" + rec->name + "' names no layer output");
            }
            double err = relative_error(it->second, rec->as_tensor());
            report.checks.push_back({rec->name, err});
            report.max_relative_error = std::max(report.max_relative_error, err);
        }
        report.vectors++;
    }
    return report;
}

}  // namespace gq::nn
