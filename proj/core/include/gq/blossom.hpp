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
#include <span>
#include <utility>
#include <vector>

namespace gq {

struct WeightedEdge {
    uint32_t u;
    uint32_t v;
    int64_t weight;
};

/// Maximum-weight matching on a general graph (Edmonds' blossom algorithm,
/// primal-dual, O(n^3)). With max_cardinality set, the result is the
/// maximum-weight matching among those of maximum cardinality.
///
/// Integer weights keep all dual variables exact. Returns mate[v] (-1 when
/// v is unmatched).
std::vector<int32_t> max_weight_matching(
    size_t num_vertices, std::span<const WeightedEdge> edges, bool max_cardinality);

/// Minimum-cost perfect matching on the complete graph with the given
/// symmetric integer cost matrix. The vertex count must be even. Pairs are
/// returned as (i, j) with i < j, sorted ascending.
std::vector<std::pair<uint32_t, uint32_t>> min_cost_perfect_matching(
    const std::vector<std::vector<int64_t>> &cost);

}  // namespace gq
