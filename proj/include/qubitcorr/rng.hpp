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

#include <array>
#include <cstdint>

namespace qubitcorr {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers: as
/// easy as 1, 2, 3"). Pure function of (counter, key).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key);

/// Independent random streams used by the library. Streams of different
/// domains never share a key, even for equal seeds.
enum class StreamDomain : std::uint64_t {
    trajectory = 1,
    bootstrap = 2,
    cavity = 3,
    test = 4,
};

/// Counter-based random stream. A value is addressed by (seed, domain,
/// stream, position); there is no hidden state, so any position of any
/// stream can be regenerated independently and in any order.
class CounterStream {
   public:
    CounterStream(std::uint64_t seed, StreamDomain domain, std::uint64_t stream);

    /// 128 random bits at the given position.
    std::array<std::uint64_t, 2> bits(std::uint64_t position) const;

    /// Two uniforms in the open interval (0, 1).
    std::array<double, 2> uniform_pair(std::uint64_t position) const;

    /// Two independent standard-normal variates (Box-Muller on uniform_pair).
    std::array<double, 2> normal_pair(std::uint64_t position) const;

    /// Uniform integer in [0, n) from the first 64 bits at the given position.
    std::uint64_t below(std::uint64_t position, std::uint64_t n) const;

   private:
    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_;
};

/// splitmix64 finalizer; used to derive keys from user seeds.
std::uint64_t mix64(std::uint64_t x);

}  // namespace qubitcorr
