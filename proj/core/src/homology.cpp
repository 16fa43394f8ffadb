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

#include "gq/homology.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "gq/matching.hpp"
#include "gq/syndrome.hpp"

namespace gq {

namespace {

void require_d3(const ToricLayout &layout) {
    if (layout.distance() != CosetTable::kDistance) {
        throw Error(
            ErrorCode::DistanceTooLarge,
            "exhaustive enumeration supports d = 3 only, got d = " + std::to_string(layout.distance()));
    }
}

double weight_probability(size_t weight, size_t n, double p) {
    return std::pow(p, static_cast<double>(weight)) * std::pow(1.0 - p, static_cast<double>(n - weight));
}

}  // namespace

DecodeOutcome judge(const ToricLayout &layout, const ErrorPattern &error, const Correction &correction) {
    if (error.size() != layout.num_edges() || correction.size() != layout.num_edges()) {
        throw Error(ErrorCode::SizeMismatch, "error/correction do not match layout");
    }
    ErrorPattern residual = error ^ correction;
    DecodeOutcome out;
    out.correction = correction;
    out.valid = compute_syndrome(layout, residual).none();
    out.logical_class = logical_windings(layout, residual);
    out.success = out.valid && out.logical_class.trivial();
    return out;
}

CosetTable::CosetTable(const ToricLayout &layout) : counts_(kSyndromes) {
    for (auto &per_class : counts_) {
        for (auto &per_weight : per_class) {
            per_weight.fill(0);
        }
    }
    // Per-edge contribution to (syndrome bits, class bits); patterns combine by XOR.
    std::array<uint32_t, kEdges> edge_syndrome{};
    std::array<uint8_t, kEdges> edge_class{};
    for (uint32_t e = 0; e < kEdges; e++) {
        ErrorPattern single(kEdges);
        single.set(e);
        edge_syndrome[e] = static_cast<uint32_t>(compute_syndrome(layout, single).words()[0]);
        edge_class[e] = logical_windings(layout, single).index();
    }
    // Gray-code walk: consecutive patterns differ in one edge.
    uint32_t syndrome = 0;
    uint8_t cls = 0;
    uint32_t pattern = 0;
    const uint32_t total = uint32_t{1} << kEdges;
    counts_[0][0][0]++;
    for (uint32_t k = 1; k < total; k++) {
        uint32_t e = static_cast<uint32_t>(std::countr_zero(k));
        pattern ^= uint32_t{1} << e;
        syndrome ^= edge_syndrome[e];
        cls ^= edge_class[e];
        counts_[syndrome][cls][std::popcount(pattern)]++;
    }
}

const CosetTable &CosetTable::get(const ToricLayout &layout) {
    require_d3(layout);
    static const CosetTable table(build_layout(kDistance));
    return table;
}

uint64_t CosetTable::kernel_size() const {
    uint64_t n = 0;
    for (const auto &per_weight : counts_[0]) {
        for (auto c : per_weight) {
            n += c;
        }
    }
    return n;
}

double CosetTable::class_mass(size_t syndrome, uint8_t cls, double p) const {
    double mass = 0.0;
    const auto &per_weight = counts_[syndrome][cls];
    for (size_t w = 0; w <= kEdges; w++) {
        if (per_weight[w]) {
            mass += per_weight[w] * weight_probability(w, kEdges, p);
        }
    }
    return mass;
}

double CosetTable::syndrome_mass(size_t syndrome, double p) const {
    double mass = 0.0;
    for (uint8_t c = 0; c < kClasses; c++) {
        mass += class_mass(syndrome, c, p);
    }
    return mass;
}

uint8_t CosetTable::ml_class(size_t syndrome, double p) const {
    uint8_t best = 0;
    double best_mass = class_mass(syndrome, 0, p);
    for (uint8_t c = 1; c < kClasses; c++) {
        double m = class_mass(syndrome, c, p);
        if (m > best_mass) {
            best = c;
            best_mass = m;
        }
    }
    return best;
}

double syndrome_probability(const ToricLayout &layout, const Syndrome &syndrome, double p) {
    const auto &table = CosetTable::get(layout);
    if (syndrome.size() != layout.num_vertices()) {
        throw Error(ErrorCode::SizeMismatch, "syndrome does not match layout");
    }
    return table.syndrome_mass(static_cast<size_t>(syndrome.words()[0]), p);
}

double optimal_success(const ToricLayout &layout, double p) {
    const auto &table = CosetTable::get(layout);
    double total = 0.0;
    for (size_t s = 0; s < CosetTable::kSyndromes; s++) {
        total += table.class_mass(s, table.ml_class(s, p), p);
    }
    return total;
}

double exact_decoder_success(
    const ToricLayout &layout, double p, const std::function<Correction(const Syndrome &)> &decoder) {
    const auto &table = CosetTable::get(layout);
    double total = 0.0;
    for (size_t s = 0; s < CosetTable::kSyndromes; s++) {
        if (std::popcount(s) % 2 != 0) {
            continue;
        }
        Syndrome syn = Syndrome::from_u64(layout.num_vertices(), s);
        Correction c = decoder(syn);
        if (compute_syndrome(layout, c) != syn) {
            continue;
        }
        // Success iff the error sits in the same class as the correction.
        total += table.class_mass(s, logical_windings(layout, c).index(), p);
    }
    return total;
}

double mwpm_exact_success(const ToricLayout &layout, double p) {
    return exact_decoder_success(layout, p, [&](const Syndrome &s) {
        return decode_mwpm(layout, s);
    });
}

}  // namespace gq
