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

#include "gq/bits.hpp"

#include <gtest/gtest.h>

#include "gq/error.hpp"

using gq::EdgeBits;
using gq::Syndrome;

TEST(Bits, SetGetFlipAcrossWordBoundary) {
    EdgeBits b(130);
    EXPECT_EQ(b.size(), 130u);
    EXPECT_TRUE(b.none());
    b.set(0, true);
    b.set(63, true);
    b.set(64, true);
    b.flip(129);
    EXPECT_EQ(b.popcount(), 4u);
    EXPECT_TRUE(b.get(63));
    EXPECT_TRUE(b[64]);
    EXPECT_EQ(b.ones(), (std::vector<size_t>{0, 63, 64, 129}));
    b.flip(63);
    b.set(0, false);
    EXPECT_EQ(b.ones(), (std::vector<size_t>{64, 129}));
    b.clear();
    EXPECT_TRUE(b.none());
}

TEST(Bits, XorAndOverlap) {
    EdgeBits a = EdgeBits::from_u64(18, 0b1011);
    EdgeBits b = EdgeBits::from_u64(18, 0b0110);
    EXPECT_EQ((a ^ b), EdgeBits::from_u64(18, 0b1101));
    EXPECT_EQ(a.overlap(b), 1u);
    a ^= a;
    EXPECT_TRUE(a.none());
}

TEST(Bits, FromU64MasksHighBits) {
    Syndrome s = Syndrome::from_u64(9, ~uint64_t{0});
    EXPECT_EQ(s.popcount(), 9u);
}

TEST(Bits, SizeMismatchThrows) {
    EdgeBits a(18), b(50);
    try {
        a ^= b;
        FAIL() << "expected SizeMismatch";
    } catch (const gq::Error &e) {
        EXPECT_EQ(e.code(), gq::ErrorCode::SizeMismatch);
    }
    EXPECT_THROW((void)a.overlap(b), gq::Error);
}

TEST(Bits, StrIsReadable) {
    EdgeBits b = EdgeBits::from_u64(4, 0b0101);
    EXPECT_EQ(b.str(), "1010");
}
