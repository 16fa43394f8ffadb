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

#include <gtest/gtest.h>

#include <cmath>

#include "gq/error.hpp"

TEST(Noise, ZeroRateIsSilent) {
    gq::ToricLayout l(5);
    gq::RngStream rng(1, 1);
    for (int t = 0; t < 100; t++) {
        EXPECT_TRUE(gq::sample_iid(l, 0.0, rng).none());
        auto [x, z] = gq::sample_depolarizing(l, 0.0, rng);
        EXPECT_TRUE(x.none());
        EXPECT_TRUE(z.none());
    }
}

TEST(Noise, IidRateWithinFiveSigma) {
    gq::ToricLayout l(5);
    gq::RngStream rng(2, 0);
    const double p = 0.07;
    const int trials = 4000;
    size_t flips = 0;
    for (int t = 0; t < trials; t++) {
        flips += gq::sample_iid(l, p, rng).popcount();
    }
    double n = double(trials) * l.num_edges();
    EXPECT_NEAR(flips / n, p, 5 * std::sqrt(p * (1 - p) / n));
}

TEST(Noise, DepolarizingSplitsEvenly) {
    gq::RngStream rng(3, 0);
    const double p = 0.3;
    const int n = 300000;
    std::array<int, 4> hist{};
    for (int i = 0; i < n; i++) {
        gq::Pauli e = gq::sample_depolarizing_pauli(p, rng);
        hist[(e.x ? 1 : 0) | (e.z ? 2 : 0)]++;
    }
    const double q = p / 3;
    for (int k = 1; k < 4; k++) {
        EXPECT_NEAR(hist[k] / double(n), q, 5 * std::sqrt(q * (1 - q) / n)) << k;
    }
}

TEST(Noise, DepolarizingYSetsBothPatterns) {
    gq::ToricLayout l(3);
    gq::RngStream rng(4, 0);
    size_t both = 0, total = 0;
    for (int t = 0; t < 5000; t++) {
        auto [x, z] = gq::sample_depolarizing(l, 0.3, rng);
        both += x.overlap(z);
        total += (x ^ z).popcount() + x.overlap(z);
    }
    // Y is one third of all events.
    EXPECT_NEAR(double(both) / total, 1.0 / 3, 0.02);
}

TEST(Noise, ValidateRejectsBadRates) {
    EXPECT_NO_THROW((gq::NoiseConfig{gq::NoiseModel::IndependentXZ, 0.5, 0.0, 0}.validate()));
    EXPECT_THROW((gq::NoiseConfig{gq::NoiseModel::IndependentXZ, -0.1, 0.0, 0}.validate()), gq::Error);
    EXPECT_THROW((gq::NoiseConfig{gq::NoiseModel::IndependentXZ, 1.0, 0.0, 0}.validate()), gq::Error);
    EXPECT_THROW((gq::NoiseConfig{gq::NoiseModel::Depolarizing, 0.1, 1.5, 0}.validate()), gq::Error);
}

TEST(Noise, PauliAlgebra) {
    gq::Pauli x{true, false}, z{false, true};
    EXPECT_EQ(x ^ z, (gq::Pauli{true, true}));
    EXPECT_TRUE((x ^ x).is_identity());
}
