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

#include "gq/nn/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gq/error.hpp"

namespace gq::nn {

Tensor3::Tensor3(uint32_t height, uint32_t width, uint32_t channels, float fill)
    : h_(height), w_(width), c_(channels), data_(static_cast<size_t>(height) * width * channels, fill) {
    if (height == 0 || width == 0 || channels == 0) {
        throw Error(ErrorCode::ShapeMismatch, "tensor dimensions must be positive");
    }
}

Tensor3 &Tensor3::operator+=(const Tensor3 &o) {
    if (!same_shape(o)) {
        throw Error(ErrorCode::ShapeMismatch, "tensor add shape mismatch");
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += o.data_[k];
    }
    return *this;
}

Tensor3 Tensor3::channel(uint32_t k) const {
    if (k >= c_) {
        throw Error(ErrorCode::ShapeMismatch, "channel " + std::to_string(k) + " out of range");
    }
    Tensor3 out(h_, w_, 1);
    for (uint32_t i = 0; i < h_; i++) {
        for (uint32_t j = 0; j < w_; j++) {
            out.at(i, j, 0) = at(i, j, k);
        }
    }
    return out;
}

double relative_error(const Tensor3 &actual, const Tensor3 &expected) {
    if (!actual.same_shape(expected)) {
        throw Error(ErrorCode::ShapeMismatch, "relative_error shape mismatch");
    }
    double max_diff = 0.0;
    double max_ref = 0.0;
    auto a = actual.values();
    auto b = expected.values();
    for (size_t k = 0; k < a.size(); k++) {
        max_diff = std::max(max_diff, std::abs(static_cast<double>(a[k]) - b[k]));
        max_ref = std::max(max_ref, std::abs(static_cast<double>(b[k])));
    }
    if (max_ref == 0.0) {
        return max_diff;
    }
    return max_diff / max_ref;
}

Tensor3 concat_channels(const Tensor3 &a, const Tensor3 &b) {
    if (a.height() != b.height() || a.width() != b.width()) {
        throw Error(ErrorCode::ShapeMismatch, "concat_channels spatial mismatch");
    }
    Tensor3 out(a.height(), a.width(), a.channels() + b.channels());
    for (uint32_t i = 0; i < a.height(); i++) {
        for (uint32_t j = 0; j < a.width(); j++) {
            for (uint32_t k = 0; k < a.channels(); k++) {
                out.at(i, j, k) = a.at(i, j, k);
            }
            for (uint32_t k = 0; k < b.channels(); k++) {
                out.at(i, j, a.channels() + k) = b.at(i, j, k);
            }
        }
    }
    return out;
}

}  // namespace gq::nn
