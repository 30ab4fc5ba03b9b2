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

#ifndef HYBRIDMIMO_PRECODING_HPP
#define HYBRIDMIMO_PRECODING_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "hybridmimo/bits.hpp"
#include "hybridmimo/numerics.hpp"

namespace hybridmimo {

// Half-width pi / 2^B1 of the phase quantization error; 0 for B1 = inf.
double phase_error_halfwidth(Bits b1) noexcept;

// --- Analog stage -----------------------------------------------------------

struct QuantizedPhase {
    std::uint32_t index = 0;  // codebook index n of e^{j 2 pi n / 2^B1}; 0 when B1 = inf
    double phase = 0.0;       // radians
};

// Picks the codebook phase maximising Re[conj(h) e^{j phase}], i.e. the
// candidate closest to arg(h). Ties go to the lowest index. For B1 = inf the
// exact phase of h is returned. h = 0 maps to index 0.
//
// Throws ConfigError for B1 = 0 or B1 > 30.
QuantizedPhase quantize_phase(cplx h, Bits b1);

// Sub-connected analog precoder: RF chain k drives antennas N*k .. N*k+N-1
// (zero-based) through phase shifters. The nonzero entries of A are
// (1/N) e^{j phase}; F = sqrt(N) A has disjoint unit-norm columns.
class AnalogPrecoder {
public:
    AnalogPrecoder(std::size_t users, std::size_t block, Bits b1, std::vector<QuantizedPhase> phases,
                   std::size_t undefined_phases = 0);

    std::size_t users() const noexcept { return users_; }
    std::size_t block_size() const noexcept { return block_; }
    std::size_t antennas() const noexcept { return users_ * block_; }
    Bits resolution() const noexcept { return b1_; }

    // Phase of antenna i (0..N-1) in user k's block.
    const QuantizedPhase& phase(std::size_t k, std::size_t i) const noexcept { return phases_[k * block_ + i]; }
    // A(N*k + i, k).
    cplx entry(std::size_t k, std::size_t i) const noexcept { return entries_[k * block_ + i]; }

    // Number of zero channel coefficients that had no defined phase.
    std::size_t undefined_phases() const noexcept { return undefined_; }

    CMat matrix_a() const;
    CMat matrix_f() const;

    // ||F w|| using the block structure: F's columns have disjoint support.
    double f_norm(const CVec& w) const;

private:
    std::size_t users_;
    std::size_t block_;
    Bits b1_;
    std::vector<QuantizedPhase> phases_;
    std::vector<cplx> entries_;
    std::vector<double> f_col_norm_sq_;
    std::size_t undefined_;
};

// Quantises the phases of each user's own antenna block of h (K x M, rows h_k^H).
AnalogPrecoder build_analog_precoder(const CMat& h, Bits b1);

// --- Effective channel ------------------------------------------------------

// G = H A, K x K. Row k is g_k^H, so the SINR terms are |(G W)(k, j)|^2.
struct EffectiveChannel {
    CMat g;

    std::size_t users() const noexcept { return g.rows(); }
    // g_k as a column vector (conjugate of row k).
    CVec user_vector(std::size_t k) const;
    double row_norm_sq(std::size_t k) const;
};

EffectiveChannel effective_channel(const CMat& h, const AnalogPrecoder& a);

// Asymptotic correlation R_k = E[g_k g_k^H] of user k's effective channel:
// diagonal, r_kk = pi sinc^2(d)/4 + 1/N - pi sinc^2(d)/(4N), r_ii = 1/N otherwise.
struct EffectiveCorrelation {
    std::size_t user = 0;
    std::size_t users = 0;
    std::size_t block = 0;
    double delta = 0.0;       // pi / 2^B1
    double sinc_delta = 1.0;  // sinc(delta)
    double w1 = 0.0;          // Var[Re(lambda)]
    double w2 = 0.0;          // Var[Im(lambda)]
    std::vector<double> diag;

    double own() const noexcept { return diag[user]; }
    // Largest and second-largest eigenvalues of R_k (squared singular values of R_k^{1/2}).
    double sigma1_sq() const noexcept { return diag[user]; }
    double sigma2_sq() const noexcept { return 1.0 / static_cast<double>(block); }
};

EffectiveCorrelation correlation_matrix(std::size_t k, std::size_t users, std::size_t block, Bits b1);

// --- Limited feedback -------------------------------------------------------

inline constexpr int kMaxFeedbackBits = 20;

// Statistics-based RVQ codebook: codeword i is R^{1/2} v_i / ||R^{1/2} v_i||
// with v_i ~ CN(0, I). An empty codebook (B2 = inf) means perfect feedback.
class FeedbackCodebook {
public:
    FeedbackCodebook() = default;
    FeedbackCodebook(std::size_t dim, std::vector<cplx> words);

    bool perfect() const noexcept { return words_.empty(); }
    std::size_t dimension() const noexcept { return dim_; }
    std::size_t size() const noexcept { return dim_ == 0 ? 0 : words_.size() / dim_; }
    std::span<const cplx> word(std::size_t i) const noexcept { return {words_.data() + i * dim_, dim_}; }

private:
    std::size_t dim_ = 0;
    std::vector<cplx> words_;
};

// Draws 2^B2 codewords from stream in index order. B2 = inf returns the
// perfect-feedback marker without consuming randomness.
// Throws ConfigError for B2 = 0 and ResourceLimitError for B2 > 20.
FeedbackCodebook generate_codebook(RngStream& stream, std::size_t users, Bits b2, const EffectiveCorrelation& r);

struct QuantizedFeedback {
    static constexpr std::size_t kPerfect = std::numeric_limits<std::size_t>::max();

    CVec codeword;                 // unit norm
    std::size_t index = kPerfect;  // codebook index, kPerfect for unquantized feedback
};

// Codeword maximising |g^H c| (lowest index on ties); g / ||g|| for a perfect codebook.
// Throws DegenerateChannelError when ||g|| = 0.
QuantizedFeedback quantize_effective_channel(const CVec& g, const FeedbackCodebook& codebook);

// --- Digital stage ----------------------------------------------------------

enum class DigitalScheme { identity, mrt, zf };
enum class FeedbackMode { quantized, perfect };

std::string_view to_string(DigitalScheme scheme) noexcept;

struct DigitalPrecoder {
    CMat w;  // K x K, column k serves user k
    DigitalScheme scheme = DigitalScheme::identity;
    FeedbackMode mode = FeedbackMode::perfect;
    bool loaded = false;  // ZF needed diagonal loading to invert the Gram matrix
};

// ghat collects the fed-back unit vectors as columns: ghat(:, k) = ghat_k.
DigitalPrecoder mrt_precoder(const CMat& ghat, FeedbackMode mode = FeedbackMode::quantized);

// W = Ghat (Ghat^H Ghat)^{-1}, columns rescaled so that ||F w_k|| = 1. A
// singular Gram matrix is retried once with loading 1e-9 * trace / K.
DigitalPrecoder zf_precoder(const CMat& ghat, const AnalogPrecoder& analog,
                            FeedbackMode mode = FeedbackMode::quantized);

inline constexpr double kZfDiagonalLoading = 1e-9;

DigitalPrecoder identity_precoder(std::size_t users);

}  // namespace hybridmimo

#endif
