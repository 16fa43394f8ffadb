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
#include <functional>

namespace gq {

/// Worker count: the GQ_THREADS environment variable when set to a positive
/// integer, otherwise std::thread::hardware_concurrency() (at least 1).
size_t worker_count();

/// Runs body(begin, end) over contiguous chunks covering [0, n). Chunk
/// boundaries depend only on n and the worker count, and each index is
/// visited once. With one worker the body runs on the calling thread.
/// The first exception thrown by any chunk is rethrown after all finish.
void parallel_for(size_t n, const std::function<void(size_t, size_t)> &body, size_t workers = 0);

}  // namespace gq
