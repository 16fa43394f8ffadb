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

#include "gq/noise.hpp"

#include <string>

namespace gq {

namespace {

void check_probability(double p, const char *what) {
    if (!(p >= 0.0 && p < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be in [0, 1), got " + std::to_string(p));
    }
}

}  // namespace

void NoiseConfig::validate() const {
    check_probability(p, "p");
    check_probability(gate_p, "gate_p");
}

Pauli sample_depolarizing_pauli(double p, RngStream &rng) {
    double u = rng.uniform();
    if (u >= p) {
        return {};
    }
    double third = p / 3.0;
    if (u < third) {
        return Pauli{true, false};
    }
    if (u < 2.0 * third) {
        return Pauli{true, true};
    }
    return Pauli{false, true};
}

ErrorPattern sample_iid(const ToricLayout &layout, double p, RngStream &rng) {
    check_probability(p, "p");
    ErrorPattern out(layout.num_edges());
    if (p == 0.0) {
        return out;
    }
    for (size_t e = 0; e < out.size(); e++) {
        if (rng.bernoulli(p)) {
            out.set(e);
        }
    }
    return out;
}

std::pair<ErrorPattern, ErrorPattern> sample_depolarizing(const ToricLayout &layout, double p, RngStream &rng) {
    check_probability(p, "p");
    ErrorPattern xs(layout.num_edges());
    ErrorPattern zs(layout.num_edges());
    if (p == 0.0) {
        return {std::move(xs), std::move(zs)};
    }
    for (size_t q = 0; q < xs.size(); q++) {
        Pauli e = sample_depolarizing_pauli(p, rng);
        if (e.x) {
            xs.set(q);
        }
        if (e.z) {
            zs.set(q);
        }
    }
    return {std::move(xs), std::move(zs)};
}

}  // namespace gq
