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
#include <utility>

#include "gq/lattice.hpp"
#include "gq/rng.hpp"

namespace gq {

enum class NoiseModel { IndependentXZ, Depolarizing };

struct NoiseConfig {
    NoiseModel model = NoiseModel::IndependentXZ;
    /// Per-qubit error probability for code-capacity sampling.
    double p = 0.0;
    /// Per-location probability for noisy gates (teleportation).
    double gate_p = 0.0;
    uint64_t seed = 0;

    /// Throws InvalidArgument unless 0 <= p < 1 and 0 <= gate_p < 1.
    void validate() const;
};

/// Single-qubit Pauli as (x, z) bits; Y = (1, 1).
struct Pauli {
    bool x = false;
    bool z = false;

    Pauli operator^(const Pauli &o) const {
        return Pauli{x != o.x, z != o.z};
    }
    Pauli &operator^=(const Pauli &o) {
        x = x != o.x;
        z = z != o.z;
        return *this;
    }
    bool is_identity() const {
        return !x && !z;
    }
    bool operator==(const Pauli &) const = default;
};

/// Draws one depolarizing event: X, Y, Z each with probability p/3.
Pauli sample_depolarizing_pauli(double p, RngStream &rng);

/// Each edge bit set independently with probability p.
ErrorPattern sample_iid(const ToricLayout &layout, double p, RngStream &rng);

/// Per qubit X, Y or Z each with probability p/3. Returns (x_pattern, z_pattern);
/// Y sets the same bit in both.
std::pair<ErrorPattern, ErrorPattern> sample_depolarizing(const ToricLayout &layout, double p, RngStream &rng);

}  // namespace gq
