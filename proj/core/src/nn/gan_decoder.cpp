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

#include "gq/nn/gan_decoder.hpp"

#include <string>

#include "gq/error.hpp"
#include "gq/matching.hpp"
#include "gq/nn/network.hpp"
#include "gq/syndrome.hpp"

namespace gq::nn {

namespace {

// Fills `plane` channel k by nearest-neighbour upsampling of a side x side grid.
void upsample_into(Tensor3 &plane, uint32_t k, const std::vector<float> &grid, uint32_t side) {
    for (uint32_t i = 0; i < kImageSize; i++) {
        uint32_t si = i * side / kImageSize;
        for (uint32_t j = 0; j < kImageSize; j++) {
            uint32_t sj = j * side / kImageSize;
            plane.at(i, j, k) = grid[static_cast<size_t>(si) * side + sj];
        }
    }
}

void check_layout(const ToricLayout &layout, const ModelWeights &weights) {
    if (weights.metadata.d != 0 && weights.metadata.d != layout.distance()) {
        throw Error(
            ErrorCode::SchemaMismatch, "weights were trained for d=" + std::to_string(weights.metadata.d) +
                                           ", layout has d=" + std::to_string(layout.distance()));
    }
    if (2 * layout.distance() > kImageSize) {
        throw Error(ErrorCode::DistanceTooLarge, "the 128-pixel encoding supports d <= 64");
    }
}

}  // namespace

std::pair<uint32_t, uint32_t> pixel_preimage(uint32_t s, uint32_t n) {
    // i*n/128 >= s  <=>  i >= ceil(s*128/n)
    uint32_t first = (s * kImageSize + n - 1) / n;
    uint32_t last = ((s + 1) * kImageSize + n - 1) / n;
    return {first, last};
}

std::pair<uint32_t, uint32_t> edge_pixel(const ToricLayout &layout, uint32_t e) {
    EdgeCoord ec = layout.edge_coord(e);
    if (ec.kind == EdgeKind::Horizontal) {
        return {2 * ec.row, 2 * ec.col + 1};
    }
    return {2 * ec.row + 1, 2 * ec.col};
}

Tensor3 encode_syndrome(const ToricLayout &layout, const Syndrome &syndrome, double p) {
    if (syndrome.size() != layout.num_vertices()) {
        throw Error(ErrorCode::SizeMismatch, "syndrome size does not match the layout");
    }
    const uint32_t side = 2 * layout.distance();
    std::vector<float> defects(static_cast<size_t>(side) * side, 0.0f);
    std::vector<float> edges(defects.size(), 0.0f);
    for (size_t v : syndrome.ones()) {
        VertexCoord vc = layout.vertex_coord(static_cast<uint32_t>(v));
        defects[static_cast<size_t>(2 * vc.row) * side + 2 * vc.col] = 1.0f;
    }
    for (uint32_t e = 0; e < layout.num_edges(); e++) {
        auto [pr, pc] = edge_pixel(layout, e);
        edges[static_cast<size_t>(pr) * side + pc] = 1.0f;
    }
    Tensor3 out(kImageSize, kImageSize, kGeneratorInputChannels);
    upsample_into(out, 0, defects, side);
    upsample_into(out, 1, edges, side);
    const float pf = static_cast<float>(p);
    for (uint32_t i = 0; i < kImageSize; i++) {
        for (uint32_t j = 0; j < kImageSize; j++) {
            out.at(i, j, 2) = pf;
        }
    }
    return out;
}

Tensor3 embed_correction(const ToricLayout &layout, const Correction &correction) {
    if (correction.size() != layout.num_edges()) {
        throw Error(ErrorCode::SizeMismatch, "correction size does not match the layout");
    }
    const uint32_t side = 2 * layout.distance();
    std::vector<float> grid(static_cast<size_t>(side) * side, 0.0f);
    for (size_t e : correction.ones()) {
        auto [pr, pc] = edge_pixel(layout, static_cast<uint32_t>(e));
        grid[static_cast<size_t>(pr) * side + pc] = 1.0f;
    }
    Tensor3 out(kImageSize, kImageSize, 1);
    upsample_into(out, 0, grid, side);
    return out;
}

Correction read_correction(const ToricLayout &layout, const Tensor3 &output, double threshold) {
    if (output.height() != kImageSize || output.width() != kImageSize || output.channels() != 1) {
        throw Error(ErrorCode::ShapeMismatch, "generator output must be 128x128x1");
    }
    const uint32_t side = 2 * layout.distance();
    Correction c = layout.empty_edges();
    for (uint32_t e = 0; e < layout.num_edges(); e++) {
        auto [pr, pc] = edge_pixel(layout, e);
        auto [r0, r1] = pixel_preimage(pr, side);
        auto [c0, c1] = pixel_preimage(pc, side);
        double sum = 0.0;
        for (uint32_t i = r0; i < r1; i++) {
            for (uint32_t j = c0; j < c1; j++) {
                sum += output.at(i, j, 0);
            }
        }
        double mean = sum / (static_cast<double>(r1 - r0) * (c1 - c0));
        if (mean > threshold) {
            c.set(e, true);
        }
    }
    return c;
}

Correction project_correction(const ToricLayout &layout, const Correction &candidate, const Syndrome &syndrome) {
    Syndrome mismatch = syndrome ^ compute_syndrome(layout, candidate);
    if (mismatch.none()) {
        return candidate;
    }
    return candidate ^ decode_mwpm(layout, mismatch);
}

Correction gan_correction(const ToricLayout &layout, const ModelWeights &weights, const Syndrome &syndrome, double p) {
    check_layout(layout, weights);
    Tensor3 out = generator_forward(weights, encode_syndrome(layout, syndrome, p));
    return project_correction(layout, read_correction(layout, out), syndrome);
}

DecodeOutcome decode_gan(const ToricLayout &layout, const ModelWeights &weights, const ErrorPattern &error, double p) {
    Syndrome s = compute_syndrome(layout, error);
    return judge(layout, error, gan_correction(layout, weights, s, p));
}

GanDecoder::GanDecoder(const ToricLayout &layout, std::shared_ptr<const ModelWeights> weights)
    : layout_(layout), weights_(std::move(weights)) {
    if (!weights_) {
        throw Error(ErrorCode::SchemaMismatch, "no generator weights");
    }
    validate(*weights_, Network::Generator);
    check_layout(layout_, *weights_);
}

Correction GanDecoder::decode(const Syndrome &syndrome, double p) const {
    Key key{syndrome.words(), p};
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            return it->second;
        }
    }
    // Computed outside the lock; a concurrent miss on the same key does the
    // work twice and stores the same answer.
    Correction c = gan_correction(layout_, *weights_, syndrome, p);
    std::lock_guard<std::mutex> lock(mu_);
    passes_++;
    if (cache_.size() < kMaxCacheEntries) {
        cache_.emplace(std::move(key), c);
    }
    return c;
}

size_t GanDecoder::forward_passes() const {
    std::lock_guard<std::mutex> lock(mu_);
    return passes_;
}

}  // namespace gq::nn
