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

#include "gq/rng.hpp"

namespace gq {

namespace {

constexpr uint32_t kMulA = 0xD2511F53;
constexpr uint32_t kMulB = 0xCD9E8D57;
constexpr uint32_t kWeylA = 0x9E3779B9;
constexpr uint32_t kWeylB = 0xBB67AE85;

inline void mulhilo(uint32_t a, uint32_t b, uint32_t &lo, uint32_t &hi) {
    uint64_t product = static_cast<uint64_t>(a) * b;
    lo = static_cast<uint32_t>(product);
    hi = static_cast<uint32_t>(product >> 32);
}

}  // namespace

std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> ctr, std::array<uint32_t, 2> key) {
    for (int round = 0; round < 10; round++) {
        uint32_t lo0, hi0, lo1, hi1;
        mulhilo(kMulA, ctr[0], lo0, hi0);
        mulhilo(kMulB, ctr[2], lo1, hi1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeylA;
        key[1] += kWeylB;
    }
    return ctr;
}

RngStream::RngStream(uint64_t seed, uint64_t stream) noexcept
    : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)}, stream_(stream) {
}

uint64_t RngStream::next_u64() noexcept {
    if (available_ == 0) {
        buffer_ = philox4x32(
            {static_cast<uint32_t>(block_), static_cast<uint32_t>(block_ >> 32), static_cast<uint32_t>(stream_),
             static_cast<uint32_t>(stream_ >> 32)},
            key_);
        block_++;
        available_ = 2;
    }
    int k = 2 - available_;
    available_--;
    draws_++;
    return static_cast<uint64_t>(buffer_[2 * k]) | (static_cast<uint64_t>(buffer_[2 * k + 1]) << 32);
}

}  // namespace gq
