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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gq/error.hpp"

namespace gq {

/// Fixed-length bit set backed by 64-bit words. The tag parameter keeps
/// edge-indexed and check-indexed sets from being mixed up.
template <typename Tag>
class Bits {
   public:
    Bits() = default;
    explicit Bits(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
    }

    size_t size() const noexcept {
        return num_bits_;
    }

    bool get(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    bool operator[](size_t k) const {
        return get(k);
    }
    void set(size_t k, bool value = true) {
        uint64_t mask = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }
    void clear() {
        for (auto &w : words_) {
            w = 0;
        }
    }

    size_t popcount() const {
        size_t n = 0;
        for (auto w : words_) {
            n += static_cast<size_t>(std::popcount(w));
        }
        return n;
    }
    bool none() const {
        for (auto w : words_) {
            if (w) {
                return false;
            }
        }
        return true;
    }
    bool any() const {
        return !none();
    }

    Bits &operator^=(const Bits &other) {
        require_same_size(other);
        for (size_t i = 0; i < words_.size(); i++) {
            words_[i] ^= other.words_[i];
        }
        return *this;
    }
    friend Bits operator^(Bits a, const Bits &b) {
        a ^= b;
        return a;
    }

    /// Number of set bits shared with `other`.
    size_t overlap(const Bits &other) const {
        require_same_size(other);
        size_t n = 0;
        for (size_t i = 0; i < words_.size(); i++) {
            n += static_cast<size_t>(std::popcount(words_[i] & other.words_[i]));
        }
        return n;
    }

    /// Indices of set bits in ascending order.
    std::vector<size_t> ones() const {
        std::vector<size_t> out;
        for (size_t i = 0; i < words_.size(); i++) {
            uint64_t w = words_[i];
            while (w) {
                out.push_back(i * 64 + static_cast<size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    const std::vector<uint64_t> &words() const noexcept {
        return words_;
    }
    std::vector<uint64_t> &words() noexcept {
        return words_;
    }

    /// Builds a set from the low `num_bits` bits of `value` (num_bits <= 64).
    static Bits from_u64(size_t num_bits, uint64_t value) {
        Bits b(num_bits);
        if (!b.words_.empty()) {
            b.words_[0] = num_bits >= 64 ? value : value & ((uint64_t{1} << num_bits) - 1);
        }
        return b;
    }

    std::string str() const {
        std::string s(num_bits_, '0');
        for (size_t k = 0; k < num_bits_; k++) {
            if (get(k)) {
                s[k] = '1';
            }
        }
        return s;
    }

    bool operator==(const Bits &other) const = default;

   private:
    void require_same_size(const Bits &other) const {
        if (other.num_bits_ != num_bits_) {
            throw Error(
                ErrorCode::SizeMismatch,
                "bit set length " + std::to_string(other.num_bits_) + " != " + std::to_string(num_bits_));
        }
    }

    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

struct EdgeTag {};
struct CheckTag {};

/// Error or correction support over the 2d^2 edges (qubits) of a layout.
using EdgeBits = Bits<EdgeTag>;
using ErrorPattern = EdgeBits;
using Correction = EdgeBits;

/// Defect set over the d^2 checks of one stabilizer species.
using Syndrome = Bits<CheckTag>;

}  // namespace gq
