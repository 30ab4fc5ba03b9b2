// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The hybridmimo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "hybridmimo/rng.hpp"

#include <numbers>

#include <boost/random/normal_distribution.hpp>

namespace hybridmimo {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) noexcept
{
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> c, std::array<std::uint32_t, 2> k)
{
    std::uint32_t c0 = c[0], c1 = c[1], c2 = c[2], c3 = c[3];
    std::uint32_t k0 = k[0], k1 = k[1];
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kPhiloxM0, c0, hi0, lo0);
        mulhilo(kPhiloxM1, c2, hi1, lo1);
        c0 = hi1 ^ c1 ^ k0;
        c1 = lo1;
        c2 = hi0 ^ c3 ^ k1;
        c3 = lo0;
        k0 += kPhiloxW0;
        k1 += kPhiloxW1;
    }
    return {c0, c1, c2, c3};
}

void RngStream::refill() noexcept
{
    // Blocks counter_ .. counter_ + kBufferedBlocks - 1, rounds interleaved
    // across blocks so the multiply chains overlap.
    constexpr std::size_t nb = kBufferedBlocks;
    std::uint32_t c0[nb], c1[nb], c2[nb], c3[nb];
    for (std::size_t b = 0; b < nb; ++b) {
        const std::uint64_t ctr = counter_ + b;
        c0[b] = static_cast<std::uint32_t>(ctr);
        c1[b] = static_cast<std::uint32_t>(ctr >> 32);
        c2[b] = static_cast<std::uint32_t>(index_);
        c3[b] = static_cast<std::uint32_t>(index_ >> 32);
    }
    std::uint32_t k0 = static_cast<std::uint32_t>(seed_);
    std::uint32_t k1 = static_cast<std::uint32_t>(seed_ >> 32);
    for (int round = 0; round < 10; ++round) {
        for (std::size_t b = 0; b < nb; ++b) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c0[b];
            const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c2[b];
            c0[b] = static_cast<std::uint32_t>(p1 >> 32) ^ c1[b] ^ k0;
            c1[b] = static_cast<std::uint32_t>(p1);
            c2[b] = static_cast<std::uint32_t>(p0 >> 32) ^ c3[b] ^ k1;
            c3[b] = static_cast<std::uint32_t>(p0);
        }
        k0 += kPhiloxW0;
        k1 += kPhiloxW1;
    }
    for (std::size_t b = 0; b < nb; ++b) {
        buffer_[4 * b] = c0[b];
        buffer_[4 * b + 1] = c1[b];
        buffer_[4 * b + 2] = c2[b];
        buffer_[4 * b + 3] = c3[b];
    }
    counter_ += nb;
    used_ = 0;
}

std::uint64_t RngStream::next_u64() noexcept
{
    if (used_ >= buffer_.size()) {
        refill();
    }
    const std::uint64_t v = (static_cast<std::uint64_t>(buffer_[used_ + 1]) << 32) | buffer_[used_];
    used_ += 2;
    return v;
}

double RngStream::uniform() noexcept
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::complex<double> RngStream::cgauss() noexcept
{
    // Ziggurat draws; each component has variance 1/2.
    boost::random::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2.0);
    const double re = normal(*this);
    const double im = normal(*this);
    return {re, im};
}

}  // namespace hybridmimo
