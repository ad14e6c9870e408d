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

#include "qubitcorr/rng.hpp"

#include <cmath>
#include <numbers>

namespace qubitcorr {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t &hi, std::uint32_t &lo) {
    std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

// 53 random bits mapped to the open interval (0, 1).
inline double open_unit(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kPhiloxW0;
            key[1] += kPhiloxW1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
        mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

CounterStream::CounterStream(std::uint64_t seed, StreamDomain domain, std::uint64_t stream) : stream_(stream) {
    std::uint64_t k = mix64(seed ^ mix64(static_cast<std::uint64_t>(domain)));
    key_ = {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
}

std::array<std::uint64_t, 2> CounterStream::bits(std::uint64_t position) const {
    auto out = philox4x32(
        {static_cast<std::uint32_t>(position),
         static_cast<std::uint32_t>(position >> 32),
         static_cast<std::uint32_t>(stream_),
         static_cast<std::uint32_t>(stream_ >> 32)},
        key_);
    return {
        (static_cast<std::uint64_t>(out[1]) << 32) | out[0],
        (static_cast<std::uint64_t>(out[3]) << 32) | out[2],
    };
}

std::array<double, 2> CounterStream::uniform_pair(std::uint64_t position) const {
    auto b = bits(position);
    return {open_unit(b[0]), open_unit(b[1])};
}

std::array<double, 2> CounterStream::normal_pair(std::uint64_t position) const {
    auto u = uniform_pair(position);
    double radius = std::sqrt(-2.0 * std::log(u[0]));
    double angle = 2.0 * std::numbers::pi * u[1];
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::uint64_t CounterStream::below(std::uint64_t position, std::uint64_t n) const {
    // Lemire's multiply-shift; the bias is below 2^-64 * n and irrelevant here.
    __extension__ using u128 = unsigned __int128;
    u128 p = static_cast<u128>(bits(position)[0]) * n;
    return static_cast<std::uint64_t>(p >> 64);
}

}  // namespace qubitcorr
