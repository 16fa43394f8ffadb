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

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "gq/lattice.hpp"

namespace gq {

/// Verdict on one decoding: residual = error XOR correction.
struct DecodeOutcome {
    Correction correction;
    /// Residual has an empty syndrome (correction matches the error's defects).
    bool valid = false;
    /// Winding parities of the residual.
    Windings logical_class;
    /// valid and the residual is a trivial loop.
    bool success = false;
};

/// Judges a correction against the error that produced the syndrome.
/// Throws SizeMismatch.
DecodeOutcome judge(const ToricLayout &layout, const ErrorPattern &error, const Correction &correction);

/// Exhaustive enumeration of all 2^18 single-species error patterns at d = 3,
/// bucketed by (syndrome, winding class, weight). Every probability below is
/// a polynomial in p evaluated from these integer counts.
class CosetTable {
   public:
    static constexpr uint32_t kDistance = 3;
    static constexpr size_t kEdges = 18;
    static constexpr size_t kSyndromes = 512;
    static constexpr size_t kClasses = 4;

    /// Shared table, built once on first use. Throws DistanceTooLarge if
    /// layout.distance() != 3.
    static const CosetTable &get(const ToricLayout &layout);

    uint32_t count(size_t syndrome, uint8_t cls, size_t weight) const {
        return counts_[syndrome][cls][weight];
    }
    /// Number of patterns with an empty syndrome (the cycle space).
    uint64_t kernel_size() const;

    /// Probability mass of the patterns with this syndrome and winding class.
    double class_mass(size_t syndrome, uint8_t cls, double p) const;
    double syndrome_mass(size_t syndrome, double p) const;
    /// Class with the largest mass; ties go to the lowest class index.
    uint8_t ml_class(size_t syndrome, double p) const;

   private:
    explicit CosetTable(const ToricLayout &layout);

    std::vector<std::array<std::array<uint32_t, kEdges + 1>, kClasses>> counts_;
};

/// Probability of observing `syndrome` under i.i.d. noise p (d = 3 only).
/// Throws DistanceTooLarge.
double syndrome_probability(const ToricLayout &layout, const Syndrome &syndrome, double p);

/// Success probability of maximum-likelihood coset decoding: the sum over
/// syndromes of the largest class mass (d = 3 only).
double optimal_success(const ToricLayout &layout, double p);

/// Exact success probability of a deterministic decoder (d = 3 only): the
/// decoder is queried once per even syndrome and credited with the mass of
/// the class its correction lands in.
double exact_decoder_success(
    const ToricLayout &layout, double p, const std::function<Correction(const Syndrome &)> &decoder);

/// exact_decoder_success for decode_mwpm.
double mwpm_exact_success(const ToricLayout &layout, double p);

}  // namespace gq
