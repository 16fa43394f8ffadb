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

#include <stdexcept>
#include <string>
#include <string_view>

namespace gq {

enum class ErrorCode {
    InvalidDistance,
    SizeMismatch,
    OddDefectCount,
    DistanceTooLarge,
    ShapeMismatch,
    SchemaMismatch,
    NoCrossing,
    FormatError,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Exception type thrown by every gq module. The code identifies which
/// contract was violated; the message carries the details.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace gq
