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

#include "gq/lattice.hpp"

namespace gq {

/// Vertex-check syndrome: bit v is the parity of |star(v) ∩ pattern|.
/// GF(2)-linear in the pattern. Throws SizeMismatch.
Syndrome compute_syndrome(const ToricLayout &layout, const EdgeBits &pattern);

/// Face-check syndrome: bit f is the parity of |boundary(f) ∩ pattern|.
/// Equals compute_syndrome(layout, layout.to_dual(pattern)).
Syndrome compute_face_syndrome(const ToricLayout &layout, const EdgeBits &pattern);

}  // namespace gq
