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
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "gq/decoder.hpp"
#include "gq/homology.hpp"
#include "gq/lattice.hpp"
#include "gq/nn/tensor.hpp"
#include "gq/nn/weights.hpp"

namespace gq::nn {

/// Nearest-neighbour preimage of grid cell `s` (of `n`) in the 128-pixel
/// axis: rows i with floor(i * n / 128) == s, as [first, last).
std::pair<uint32_t, uint32_t> pixel_preimage(uint32_t s, uint32_t n);

/// Pixel of the 2d x 2d grid holding each site: vertex (r,c) -> (2r, 2c),
/// h(r,c) -> (2r, 2c+1), v(r,c) -> (2r+1, 2c), face (r,c) -> (2r+1, 2c+1).
std::pair<uint32_t, uint32_t> edge_pixel(const ToricLayout &layout, uint32_t e);

/// 128x128x3 network input: channel 0 marks defective vertices, channel 1
/// marks edge positions, channel 2 is the constant p. Each 2d x 2d plane is
/// upsampled with source index floor(i * 2d / 128).
Tensor3 encode_syndrome(const ToricLayout &layout, const Syndrome &syndrome, double p);

/// 128x128x1 image with 1.0 over the preimage of every edge in the correction.
Tensor3 embed_correction(const ToricLayout &layout, const Correction &correction);

/// Edge bit = 1 iff the mean of `output` over the edge's preimage block is
/// strictly greater than `threshold`. Throws ShapeMismatch.
Correction read_correction(const ToricLayout &layout, const Tensor3 &output, double threshold = 0.5);

/// Repairs a candidate so it explains the syndrome: the residual defects
/// syndrome XOR compute_syndrome(candidate) are matched with MWPM and the
/// matching paths are XORed in. A valid candidate is returned unchanged.
Correction project_correction(const ToricLayout &layout, const Correction &candidate, const Syndrome &syndrome);

/// encode -> generator -> read -> project. Throws SchemaMismatch when the
/// weights do not fit the generator schema or were trained for another d.
Correction gan_correction(const ToricLayout &layout, const ModelWeights &weights, const Syndrome &syndrome, double p);

/// gan_correction on the syndrome of `error`, judged against `error`.
/// The outcome is always valid.
DecodeOutcome decode_gan(const ToricLayout &layout, const ModelWeights &weights, const ErrorPattern &error, double p);

/// Decoder backed by generator weights. Results are memoized per
/// (syndrome, p), since a forward pass costs billions of multiply-adds and
/// small codes revisit the same syndromes constantly.
class GanDecoder final : public Decoder {
   public:
    /// Throws SchemaMismatch.
    GanDecoder(const ToricLayout &layout, std::shared_ptr<const ModelWeights> weights);

    std::string_view name() const override {
        return "gan";
    }
    Correction decode(const Syndrome &syndrome, double p) const override;

    size_t forward_passes() const;

    static constexpr size_t kMaxCacheEntries = size_t{1} << 16;

   private:
    using Key = std::pair<std::vector<uint64_t>, double>;

    const ToricLayout &layout_;
    std::shared_ptr<const ModelWeights> weights_;
    mutable std::mutex mu_;
    mutable std::map<Key, Correction> cache_;
    mutable size_t passes_ = 0;
};

}  // namespace gq::nn
