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
#include <vector>

#include "gq/lattice.hpp"

namespace gq {

struct DefectPair {
    uint32_t a;  // vertex index, a < b
    uint32_t b;
    uint32_t weight;
    bool operator==(const DefectPair &) const = default;
};

/// A perfect matching of the defects; pairs sorted by (a, b).
struct Matching {
    std::vector<DefectPair> pairs;

    uint64_t total_weight() const {
        uint64_t w = 0;
        for (const auto &p : pairs) {
            w += p.weight;
        }
        return w;
    }
};

/// Shortest-path length between two vertices on the torus:
/// min(|dr|, d-|dr|) + min(|dc|, d-|dc|).
uint32_t torus_distance(const ToricLayout &layout, uint32_t v1, uint32_t v2);

/// Exact minimum-weight perfect matching of the syndrome's defects under the
/// torus metric (blossom algorithm). Throws OddDefectCount.
Matching mwpm_match(const ToricLayout &layout, const Syndrome &syndrome);

/// Realizes each pair as a shortest path: along the row of the first defect
/// (shorter wrap direction) to the second defect's column, then along that
/// column. Paths are XOR-accumulated.
Correction pairing_to_correction(const ToricLayout &layout, const Matching &matching);

/// Shortest path between two vertices as an edge set (row first, then column).
Correction shortest_path(const ToricLayout &layout, uint32_t v1, uint32_t v2);

/// mwpm_match followed by pairing_to_correction. The result always has
/// compute_syndrome(result) == syndrome.
Correction decode_mwpm(const ToricLayout &layout, const Syndrome &syndrome);

}  // namespace gq
