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

#include "gq/matching.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <tuple>

#include "gq/blossom.hpp"

namespace gq {

namespace {

uint32_t cyclic_distance(uint32_t a, uint32_t b, uint32_t d) {
    uint32_t delta = a > b ? a - b : b - a;
    return std::min(delta, d - delta);
}

// Signed step (+1 or -1) and length of the shorter way from a to b on a cycle of length d.
std::pair<int, uint32_t> cyclic_route(uint32_t a, uint32_t b, uint32_t d) {
    uint32_t forward = (b + d - a) % d;
    uint32_t backward = d - forward;
    if (forward == 0) {
        return {1, 0};
    }
    // d is odd, so forward == backward never happens.
    if (forward <= backward) {
        return {1, forward};
    }
    return {-1, backward};
}

}  // namespace

uint32_t torus_distance(const ToricLayout &layout, uint32_t v1, uint32_t v2) {
    auto a = layout.vertex_coord(v1);
    auto b = layout.vertex_coord(v2);
    uint32_t d = layout.distance();
    return cyclic_distance(a.row, b.row, d) + cyclic_distance(a.col, b.col, d);
}

Matching mwpm_match(const ToricLayout &layout, const Syndrome &syndrome) {
    if (syndrome.size() != layout.num_vertices()) {
        throw Error(ErrorCode::SizeMismatch, "syndrome does not match layout");
    }
    auto defects = syndrome.ones();
    if (defects.size() % 2 != 0) {
        throw Error(ErrorCode::OddDefectCount, std::to_string(defects.size()) + " defects");
    }
    Matching out;
    if (defects.empty()) {
        return out;
    }
    const size_t n = defects.size();
    std::vector<std::vector<int64_t>> cost(n, std::vector<int64_t>(n, 0));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            auto w = torus_distance(layout, static_cast<uint32_t>(defects[i]), static_cast<uint32_t>(defects[j]));
            cost[i][j] = cost[j][i] = w;
        }
    }
    for (auto [i, j] : min_cost_perfect_matching(cost)) {
        out.pairs.push_back(DefectPair{
            static_cast<uint32_t>(defects[i]), static_cast<uint32_t>(defects[j]),
            static_cast<uint32_t>(cost[i][j])});
    }
    std::sort(out.pairs.begin(), out.pairs.end(), [](const DefectPair &x, const DefectPair &y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    return out;
}

Correction shortest_path(const ToricLayout &layout, uint32_t v1, uint32_t v2) {
    Correction out = layout.empty_edges();
    auto a = layout.vertex_coord(v1);
    auto b = layout.vertex_coord(v2);
    uint32_t d = layout.distance();

    auto [col_step, col_len] = cyclic_route(a.col, b.col, d);
    int64_t c = a.col;
    for (uint32_t k = 0; k < col_len; k++) {
        // h(r,c) joins (r,c)-(r,c+1); stepping left crosses h(r,c-1).
        out.flip(col_step > 0 ? layout.h_edge(a.row, c) : layout.h_edge(a.row, c - 1));
        c += col_step;
    }
    auto [row_step, row_len] = cyclic_route(a.row, b.row, d);
    int64_t r = a.row;
    for (uint32_t k = 0; k < row_len; k++) {
        out.flip(row_step > 0 ? layout.v_edge(r, b.col) : layout.v_edge(r - 1, b.col));
        r += row_step;
    }
    return out;
}

Correction pairing_to_correction(const ToricLayout &layout, const Matching &matching) {
    Correction out = layout.empty_edges();
    for (const auto &pair : matching.pairs) {
        out ^= shortest_path(layout, pair.a, pair.b);
    }
    return out;
}

Correction decode_mwpm(const ToricLayout &layout, const Syndrome &syndrome) {
    return pairing_to_correction(layout, mwpm_match(layout, syndrome));
}

}  // namespace gq
