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
#include <limits>

namespace gq {

/// Philox4x32-10 block function (Salmon et al., SC'11).
std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key);

/// Counter-based random stream. The key is the run seed and the upper half of
/// the counter is the stream index, so the draws of stream k depend only on
/// (seed, k, draw number). Trials map to streams, which makes Monte Carlo
/// results independent of thread scheduling.
///
/// Satisfies UniformRandomBitGenerator.
class RngStream {
   public:
    using result_type = uint64_t;

    RngStream(uint64_t seed, uint64_t stream) noexcept;

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<uint64_t>::max();
    }

    uint64_t operator()() noexcept {
        return next_u64();
    }
    uint64_t next_u64() noexcept;

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }
    bool bernoulli(double p) noexcept {
        return uniform() < p;
    }

    /// Number of 64-bit values drawn so far.
    uint64_t draws() const noexcept {
        return draws_;
    }

   private:
    std::array<uint32_t, 2> key_;
    uint64_t stream_;
    uint64_t block_ = 0;
    std::array<uint32_t, 4> buffer_{};
    int available_ = 0;
    uint64_t draws_ = 0;
};

/// Packs a (point, trial) pair into one stream index; trial must be < 2^40.
constexpr uint64_t stream_index(uint64_t point, uint64_t trial) noexcept {
    return (point << 40) | (trial & ((uint64_t{1} << 40) - 1));
}

}  // namespace gq
