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

#include "gq/nn/gan_decoder.hpp"

#include <gtest/gtest.h>

#include <memory>

#include "gq/error.hpp"
#include "gq/matching.hpp"
#include "gq/nn/network.hpp"
#include "gq/noise.hpp"
#include "gq/rng.hpp"
#include "gq/syndrome.hpp"

using namespace gq;
using namespace gq::nn;

namespace {

double channel_mean(const Tensor3 &t, uint32_t k) {
    double s = 0;
    for (uint32_t i = 0; i < t.height(); i++) {
        for (uint32_t j = 0; j < t.width(); j++) {
            s += t.at(i, j, k);
        }
    }
    return s / (double(t.height()) * t.width());
}

size_t lit_pixels(const Tensor3 &t, uint32_t k) {
    size_t n = 0;
    for (uint32_t i = 0; i < t.height(); i++) {
        for (uint32_t j = 0; j < t.width(); j++) {
            n += t.at(i, j, k) != 0.0f;
        }
    }
    return n;
}

}  // namespace

TEST(PixelPreimage, PartitionsTheAxis) {
    for (uint32_t n : {6u, 10u, 14u, 128u}) {
        uint32_t next = 0;
        for (uint32_t s = 0; s < n; s++) {
            auto [a, b] = pixel_preimage(s, n);
            EXPECT_EQ(a, next);
            EXPECT_GT(b, a);
            for (uint32_t i = a; i < b; i++) {
                EXPECT_EQ(i * n / kImageSize, s);
            }
            next = b;
        }
        EXPECT_EQ(next, kImageSize);
    }
}

TEST(EncodeSyndrome, EmptySyndrome) {
    ToricLayout layout(3);
    Tensor3 x = encode_syndrome(layout, layout.empty_checks(), 0.07);
    EXPECT_EQ(x.channels(), kGeneratorInputChannels);
    EXPECT_EQ(lit_pixels(x, 0), 0u);
    EXPECT_NEAR(channel_mean(x, 2), 0.07, 1e-7);
}

TEST(EncodeSyndrome, DefectPairGivesTwoBlocks) {
    ToricLayout layout(3);
    EdgeBits e = layout.empty_edges();
    e.set(layout.h_edge(1, 1));
    Syndrome s = compute_syndrome(layout, e);
    ASSERT_EQ(s.popcount(), 2u);
    Tensor3 x = encode_syndrome(layout, s, 0.1);
    double block = 128.0 / 6.0;
    size_t lit = lit_pixels(x, 0);
    EXPECT_GE(double(lit), 2 * (block - 1) * (block - 1));
    EXPECT_LE(double(lit), 2 * (block + 1) * (block + 1));
    // Both defects sit on row 1, at vertex columns 1 and 2.
    auto [r0, r1] = pixel_preimage(2, 6);
    auto [c0, c1] = pixel_preimage(2, 6);
    auto [c2, c3] = pixel_preimage(4, 6);
    EXPECT_EQ(x.at(r0, c0, 0), 1.0f);
    EXPECT_EQ(x.at(r1 - 1, c1 - 1, 0), 1.0f);
    EXPECT_EQ(x.at(r0, c2, 0), 1.0f);
    EXPECT_EQ(x.at(r0, c3 - 1, 0), 1.0f);
    EXPECT_EQ(x.at(0, 0, 0), 0.0f);
}

TEST(EncodeSyndrome, EdgeChannelCoversHalfTheGrid) {
    ToricLayout layout(5);
    Tensor3 x = encode_syndrome(layout, layout.empty_checks(), 0.0);
    // 2d^2 of the 4d^2 grid cells are edges.
    EXPECT_NEAR(channel_mean(x, 1), 0.5, 0.02);
    EXPECT_THROW(encode_syndrome(layout, Syndrome(3), 0.1), gq::Error);
}

TEST(ReadCorrection, ZeroAndSaturatedOutputs) {
    ToricLayout layout(3);
    Tensor3 zero(kImageSize, kImageSize, 1, 0.0f);
    EXPECT_TRUE(read_correction(layout, zero).none());
    Tensor3 ones(kImageSize, kImageSize, 1, 1.0f);
    EXPECT_EQ(read_correction(layout, ones).popcount(), layout.num_edges());
    EXPECT_TRUE(read_correction(layout, ones, 1.0).none());
    Tensor3 half(kImageSize, kImageSize, 1, 0.5f);
    EXPECT_TRUE(read_correction(layout, half).none());
    EXPECT_THROW(read_correction(layout, Tensor3(64, 64, 1)), gq::Error);
}

TEST(ReadCorrection, EmbedRoundTrip) {
    for (uint32_t d : {3u, 5u, 7u}) {
        ToricLayout layout(d);
        RngStream rng(d, 0);
        for (int t = 0; t < 20; t++) {
            EdgeBits c = sample_iid(layout, 0.3, rng);
            EXPECT_EQ(read_correction(layout, embed_correction(layout, c)), c);
        }
    }
}

TEST(Projection, ValidCandidateUnchanged) {
    ToricLayout layout(5);
    RngStream rng(3, 0);
    for (int t = 0; t < 50; t++) {
        EdgeBits e = sample_iid(layout, 0.1, rng);
        Syndrome s = compute_syndrome(layout, e);
        EXPECT_EQ(project_correction(layout, e, s), e);
    }
}

TEST(Projection, EmptyCandidateGivesMwpm) {
    ToricLayout layout(5);
    RngStream rng(4, 0);
    for (int t = 0; t < 50; t++) {
        Syndrome s = compute_syndrome(layout, sample_iid(layout, 0.1, rng));
        EXPECT_EQ(project_correction(layout, layout.empty_edges(), s), decode_mwpm(layout, s));
    }
}

TEST(Projection, RandomCandidatesBecomeValid) {
    ToricLayout layout(5);
    RngStream rng(5, 0);
    for (int t = 0; t < 200; t++) {
        Syndrome s = compute_syndrome(layout, sample_iid(layout, 0.1, rng));
        EdgeBits junk = sample_iid(layout, 0.5, rng);
        EXPECT_EQ(compute_syndrome(layout, project_correction(layout, junk, s)), s);
    }
}

TEST(GanDecoder, ZeroWeightsMatchMwpm) {
    ToricLayout layout(3);
    auto w = std::make_shared<const ModelWeights>(make_weights(Network::Generator, 3, Init::Zero));
    GanDecoder dec(layout, w);
    RngStream rng(6, 0);
    for (int t = 0; t < 4; t++) {
        Syndrome s = compute_syndrome(layout, sample_iid(layout, 0.1, rng));
        EXPECT_EQ(dec.decode(s, 0.1), decode_mwpm(layout, s));
    }
    Syndrome empty = layout.empty_checks();
    dec.decode(empty, 0.1);
    size_t passes = dec.forward_passes();
    dec.decode(empty, 0.1);
    EXPECT_EQ(dec.forward_passes(), passes);
}

TEST(GanDecoder, DistanceMismatchRejected) {
    ToricLayout layout(5);
    auto w = std::make_shared<const ModelWeights>(make_weights(Network::Generator, 3, Init::Zero));
    try {
        GanDecoder dec(layout, w);
        FAIL();
    } catch (const gq::Error &ex) {
        EXPECT_EQ(ex.code(), ErrorCode::SchemaMismatch);
    }
    auto disc = std::make_shared<const ModelWeights>(make_weights(Network::Discriminator, 5, Init::Zero));
    EXPECT_THROW(GanDecoder(layout, disc), gq::Error);
    EXPECT_THROW(GanDecoder(layout, nullptr), gq::Error);
}

TEST(GanDecoder, DecodeOutcomeIsValid) {
    ToricLayout layout(3);
    auto w = make_weights(Network::Generator, 3, Init::Random, 9);
    RngStream rng(7, 0);
    EdgeBits e = sample_iid(layout, 0.15, rng);
    auto out = decode_gan(layout, w, e, 0.15);
    EXPECT_TRUE(out.valid);
    EXPECT_EQ(compute_syndrome(layout, out.correction), compute_syndrome(layout, e));
}

TEST(MakeDecoder, Kinds) {
    ToricLayout layout(3);
    EXPECT_EQ(make_decoder("mwpm", layout)->name(), "mwpm");
    EXPECT_EQ(make_decoder("none", layout)->name(), "none");
    EXPECT_THROW(make_decoder("gan", layout, ""), gq::Error);
    EXPECT_THROW(make_decoder("bp", layout), gq::Error);
}
