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

#include "gq/decoder.hpp"

#include "gq/error.hpp"
#include "gq/matching.hpp"
#include "gq/nn/gan_decoder.hpp"

namespace gq {

Correction MwpmDecoder::decode(const Syndrome &syndrome, double) const {
    return decode_mwpm(layout_, syndrome);
}

std::unique_ptr<Decoder> make_decoder(std::string_view kind, const ToricLayout &layout, const std::string &weights_path) {
    if (kind == "mwpm") {
        return std::make_unique<MwpmDecoder>(layout);
    }
    if (kind == "none") {
        return std::make_unique<NoneDecoder>(layout);
    }
    if (kind == "gan") {
        if (weights_path.empty()) {
            throw Error(ErrorCode::InvalidArgument, "the gan decoder needs a weight file");
        }
        auto weights = std::make_shared<const nn::ModelWeights>(nn::read_weights(weights_path));
        return std::make_unique<nn::GanDecoder>(layout, std::move(weights));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown decoder '" + std::string(kind) + "'");
}

}  // namespace gq
