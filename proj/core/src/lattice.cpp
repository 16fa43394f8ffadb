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

#include "gq/lattice.hpp"

#include <string>

namespace gq {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidDistance:
            return "InvalidDistance";
        case ErrorCode::SizeMismatch:
            return "SizeMismatch";
        case ErrorCode::OddDefectCount:
            return "OddDefectCount";
        case ErrorCode::DistanceTooLarge:
            return "DistanceTooLarge";
        case ErrorCode::ShapeMismatch:
            return "ShapeMismatch";
        case ErrorCode::SchemaMismatch:
            return "SchemaMismatch";
        case ErrorCode::NoCrossing:
            return "NoCrossing";
        case ErrorCode::FormatError:
            return "FormatError";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {
}

ToricLayout::ToricLayout(uint32_t d) : d_(d) {
    if (d < 3 || d % 2 == 0) {
        throw Error(ErrorCode::InvalidDistance, "code distance must be odd and >= 3, got " + std::to_string(d));
    }
    const size_t nv = num_vertices();
    const size_t ne = num_edges();
    stars_.resize(nv);
    boundaries_.resize(nv);
    endpoints_.resize(ne);
    dual_of_.resize(ne);
    primal_of_.resize(ne);
    cut_h_ = EdgeBits(ne);
    cut_v_ = EdgeBits(ne);

    for (int64_t r = 0; r < d; r++) {
        for (int64_t c = 0; c < d; c++) {
            uint32_t v = vertex(r, c);
            stars_[v] = {h_edge(r, c), h_edge(r, c - 1), v_edge(r, c), v_edge(r - 1, c)};
            boundaries_[v] = {h_edge(r, c), h_edge(r + 1, c), v_edge(r, c), v_edge(r, c + 1)};
            endpoints_[h_edge(r, c)] = {vertex(r, c), vertex(r, c + 1)};
            endpoints_[v_edge(r, c)] = {vertex(r, c), vertex(r + 1, c)};
            dual_of_[h_edge(r, c)] = v_edge(r - 1, c);
            dual_of_[v_edge(r, c)] = h_edge(r, c - 1);
        }
    }
    for (size_t e = 0; e < ne; e++) {
        primal_of_[dual_of_[e]] = static_cast<uint32_t>(e);
    }
    for (uint32_t k = 0; k < d; k++) {
        cut_h_.set(h_edge(k, 0));
        cut_v_.set(v_edge(0, k));
    }
}

EdgeCoord ToricLayout::edge_coord(uint32_t e) const {
    uint32_t dd = d_ * d_;
    if (e < dd) {
        return EdgeCoord{EdgeKind::Horizontal, e / d_, e % d_};
    }
    e -= dd;
    return EdgeCoord{EdgeKind::Vertical, e / d_, e % d_};
}

EdgeBits ToricLayout::row_cycle(uint32_t r) const {
    EdgeBits out(num_edges());
    for (uint32_t c = 0; c < d_; c++) {
        out.set(h_edge(r, c));
    }
    return out;
}

EdgeBits ToricLayout::column_cycle(uint32_t c) const {
    EdgeBits out(num_edges());
    for (uint32_t r = 0; r < d_; r++) {
        out.set(v_edge(r, c));
    }
    return out;
}

EdgeBits ToricLayout::face_boundary(uint32_t f) const {
    EdgeBits out(num_edges());
    for (auto e : boundaries_[f]) {
        out.flip(e);
    }
    return out;
}

EdgeBits ToricLayout::to_dual(const EdgeBits &primal) const {
    if (primal.size() != num_edges()) {
        throw Error(ErrorCode::SizeMismatch, "pattern does not match layout");
    }
    EdgeBits out(num_edges());
    for (auto e : primal.ones()) {
        out.set(dual_of_[e]);
    }
    return out;
}

EdgeBits ToricLayout::from_dual(const EdgeBits &dual) const {
    if (dual.size() != num_edges()) {
        throw Error(ErrorCode::SizeMismatch, "pattern does not match layout");
    }
    EdgeBits out(num_edges());
    for (auto e : dual.ones()) {
        out.set(primal_of_[e]);
    }
    return out;
}

ToricLayout build_layout(uint32_t d) {
    return ToricLayout(d);
}

Windings logical_windings(const ToricLayout &layout, const EdgeBits &pattern) {
    if (pattern.size() != layout.num_edges()) {
        throw Error(
            ErrorCode::SizeMismatch,
            "pattern has " + std::to_string(pattern.size()) + " bits, layout has " +
                std::to_string(layout.num_edges()) + " edges");
    }
    return Windings{
        (pattern.overlap(layout.cut_horizontal()) & 1) != 0,
        (pattern.overlap(layout.cut_vertical()) & 1) != 0,
    };
}

}  // namespace gq
