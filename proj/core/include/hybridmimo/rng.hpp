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

#ifndef HYBRIDMIMO_RNG_HPP
#define HYBRIDMIMO_RNG_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>

namespace hybridmimo {

// Philox4x32-10 block function (Salmon et al., SC'11). Maps a 128-bit counter
// and a 64-bit key to 128 pseudo-random bits.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

// Counter-based random stream.
//
// The stream is fully determined by (seed, index): the key is the master seed,
// the upper half of the Philox counter is the stream index and the lower half
// counts blocks drawn so far. Streams with different indices therefore never
// share a counter value, and any stream can be replayed from scratch.
//
// Reserved indices: see kPathLossStream and kFrozenCodebookStream. Trial t of
// an experiment uses index t.
class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t seed, std::uint64_t index) noexcept : seed_(seed), index_(index) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t index() const noexcept { return index_; }

    // 64 uniformly distributed bits.
    std::uint64_t next_u64() noexcept;

    // Uniform in [0, 1) with 53 bits of resolution.
    double uniform() noexcept;

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    // Circularly-symmetric complex Gaussian, unit variance (1/2 per component).
    std::complex<double> cgauss() noexcept;

    // UniformRandomBitGenerator interface so <random> distributions can be used.
    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
    result_type operator()() noexcept { return next_u64(); }

private:
    static constexpr std::size_t kBufferedBlocks = 4;

    void refill() noexcept;

    std::uint64_t seed_;
    std::uint64_t index_;
    std::uint64_t counter_ = 0;  // next block to generate
    std::array<std::uint32_t, 4 * kBufferedBlocks> buffer_{};
    std::size_t used_ = 4 * kBufferedBlocks;  // 32-bit words of buffer_ already consumed
};

inline constexpr std::uint64_t kPathLossStream = std::numeric_limits<std::uint64_t>::max();
inline constexpr std::uint64_t kFrozenCodebookStream = std::numeric_limits<std::uint64_t>::max() - 1;

}  // namespace hybridmimo

#endif
