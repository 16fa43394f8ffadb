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

#include <memory>
#include <string>
#include <string_view>

#include "gq/lattice.hpp"

namespace gq {

/// Maps a vertex-check syndrome to a correction on the same layout. Z errors
/// are decoded by the same object after ToricLayout::to_dual.
///
/// Implementations are immutable or internally synchronized, so one instance
/// may be shared by worker threads.
class Decoder {
   public:
    virtual ~Decoder() = default;
    virtual std::string_view name() const = 0;
    /// `p` is the physical error rate, available to decoders that use it.
    virtual Correction decode(const Syndrome &syndrome, double p) const = 0;
};

class MwpmDecoder final : public Decoder {
   public:
    explicit MwpmDecoder(const ToricLayout &layout) : layout_(layout) {
    }
    std::string_view name() const override {
        return "mwpm";
    }
    Correction decode(const Syndrome &syndrome, double p) const override;

   private:
    const ToricLayout &layout_;
};

/// Applies no correction; the baseline every decoder is compared against.
class NoneDecoder final : public Decoder {
   public:
    explicit NoneDecoder(const ToricLayout &layout) : layout_(layout) {
    }
    std::string_view name() const override {
        return "none";
    }
    Correction decode(const Syndrome &, double) const override {
        return layout_.empty_edges();
    }

   private:
    const ToricLayout &layout_;
};

/// Builds "mwpm", "none" or "gan" (which needs a generator weight file).
/// The layout must outlive the decoder. Throws InvalidArgument.
std::unique_ptr<Decoder> make_decoder(
    std::string_view kind, const ToricLayout &layout, const std::string &weights_path = "");

}  // namespace gq
