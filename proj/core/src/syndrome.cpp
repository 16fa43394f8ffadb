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

#include "gq/syndrome.hpp"

#include <string>

namespace gq {

namespace {

void require_edges(const ToricLayout &layout, const EdgeBits &pattern) {
    if (pattern.size() != layout.num_edges()) {
        throw Error(
            ErrorCode::SizeMismatch,
            "pattern has " + std::to_string(pattern.size()) + " bits, layout has " +
                std::to_string(layout.num_edges()) + " edges");
    }
}

}  // namespace

Syndrome compute_syndrome(const ToricLayout &layout, const EdgeBits &pattern) {
    require_edges(layout, pattern);
    Syndrome out(layout.num_vertices());
    // Each error edge flips both of its endpoints.
    for (auto e : pattern.ones()) {
        const auto &ends = layout.endpoints(static_cast<uint32_t>(e));
        out.flip(ends[0]);
        out.flip(ends[1]);
    }
    return out;
}

Syndrome compute_face_syndrome(const ToricLayout &layout, const EdgeBits &pattern) {
    require_edges(layout, pattern);
    Syndrome out(layout.num_faces());
    for (size_t f = 0; f < layout.num_faces(); f++) {
        bool parity = false;
        for (auto e : layout.boundary(static_cast<uint32_t>(f))) {
            parity ^= pattern.get(e);
        }
        out.set(f, parity);
    }
    return out;
}

}  // namespace gq
