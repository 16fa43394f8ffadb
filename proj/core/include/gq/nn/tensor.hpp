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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gq::nn {

/// Dense height x width x channels tensor, row-major with channels fastest.
class Tensor3 {
   public:
    Tensor3() = default;
    Tensor3(uint32_t height, uint32_t width, uint32_t channels, float fill = 0.0f);

    uint32_t height() const noexcept {
        return h_;
    }
    uint32_t width() const noexcept {
        return w_;
    }
    uint32_t channels() const noexcept {
        return c_;
    }
    size_t size() const noexcept {
        return data_.size();
    }

    float &at(uint32_t i, uint32_t j, uint32_t k) {
        return data_[(static_cast<size_t>(i) * w_ + j) * c_ + k];
    }
    float at(uint32_t i, uint32_t j, uint32_t k) const {
        return data_[(static_cast<size_t>(i) * w_ + j) * c_ + k];
    }

    std::span<float> values() noexcept {
        return data_;
    }
    std::span<const float> values() const noexcept {
        return data_;
    }
    float *data() noexcept {
        return data_.data();
    }
    const float *data() const noexcept {
        return data_.data();
    }

    bool same_shape(const Tensor3 &o) const noexcept {
        return h_ == o.h_ && w_ == o.w_ && c_ == o.c_;
    }

    Tensor3 &operator+=(const Tensor3 &o);

    /// Copies channel k into a height x width x 1 tensor.
    Tensor3 channel(uint32_t k) const;

   private:
    uint32_t h_ = 0;
    uint32_t w_ = 0;
    uint32_t c_ = 0;
    std::vector<float> data_;
};

/// max |a - b| / max |b| over all entries (0 when both are all zero).
double relative_error(const Tensor3 &actual, const Tensor3 &expected);

/// Concatenates along the channel axis; spatial sizes must match.
Tensor3 concat_channels(const Tensor3 &a, const Tensor3 &b);

}  // namespace gq::nn
