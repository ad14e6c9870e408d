// Copyright 2026 The qubitcorr Authors
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

namespace qubitcorr {

/// Worker count to use: `requested` if nonzero, else the QUBITCORR_THREADS
/// environment variable if set, else the hardware concurrency (at least 1).
unsigned resolve_threads(unsigned requested = 0);

/// Calls body(i) for every i in [begin, end) using up to `threads` workers.
/// Indices are handed out dynamically; body must only touch state owned by
/// index i. The first exception thrown (lowest index among those observed)
/// is rethrown after all workers stop.
void parallel_for(std::size_t begin, std::size_t end, unsigned threads, const std::function<void(std::size_t)> &body);

}  // namespace qubitcorr
