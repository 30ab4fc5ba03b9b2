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

#ifndef HYBRIDMIMO_ANALYSIS_HPP
#define HYBRIDMIMO_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace hybridmimo::analysis {

// Large-array closed forms for the per-user ergodic rate (bps/Hz) and the
// analog-vs-hybrid regime thresholds.
//
// Bit counts are real numbers here so thresholds can be probed between
// integers; +infinity is the unquantized limit (delta = 0, feedback term 0).
// gamma is the linear SNR P / sigma^2; beta values are power path losses.
struct SystemParams {
    std::size_t m = 0;        // BS antennas
    std::size_t k = 0;        // users / RF chains
    double b1 = 0.0;          // analog phase bits
    double b2 = 0.0;          // feedback bits
    double gamma = 0.0;       // linear SNR
    double beta = 1.0;        // beta_k of the user under study
    double beta_other = 0.0;  // sum of the other users' beta

    // Builds params for user `user` from the full path-loss vector.
    static SystemParams for_user(std::size_t m, std::size_t k, double b1, double b2, double gamma,
                                 std::span<const double> betas, std::size_t user);

    // Throws ConfigError unless K divides M, gamma > 0 and beta > 0.
    void validate() const;

    double n() const noexcept { return static_cast<double>(m) / static_cast<double>(k); }
    double delta() const noexcept;
    double sinc_sq() const noexcept;
    // 2^{-B2/(K-1)}; zero for B2 = inf or K = 1.
    double feedback_term() const noexcept;
};

double feedback_term(double b2, std::size_t k) noexcept;
double sinc_sq_for_bits(double b1) noexcept;

// Hybrid MRT with B1-bit phases and B2-bit feedback.
double rate_mrt_hybrid(const SystemParams& p);
// Perfect-CSI MRT (B1, B2 -> inf).
double rate_mrt_hybrid_perfect(const SystemParams& p);
// Lower bound for hybrid ZF; can be negative for tiny B2 at large gamma.
double rate_zf_hybrid_lb(const SystemParams& p);
// Almost-sure perfect-feedback ZF limit log2(1 + gamma beta pi sinc^2 / (4K)).
double rate_zf_hybrid_perfect(const SystemParams& p);
// Pure analog precoding (W = I); independent of B2.
double rate_analog(const SystemParams& p);
// Pure analog with unquantized phases.
double rate_analog_perfect(const SystemParams& p);

// Largest B1 for which MRT-hybrid beats analog at every SNR. Returns +inf when
// the denominator 3 pi N - 12 (K - 2 - 2^{-B2/(K-1)}) is not positive.
double b1_threshold(double n, std::size_t k, double b2);

// Right-hand side pi N sinc^2(delta)/4 + 2^{-B2/(K-1)} + 2 of the user-count
// condition, evaluated with the supplied K in the exponent.
double k_threshold(double n, double b1, double b2, std::size_t k);

// SNR above which analog beats MRT-hybrid (meaningful only for B1 above
// b1_threshold). Throws ThresholdUndefinedError for a zero denominator.
double gamma0(const SystemParams& p);

// Feedback bits above which ZF-hybrid eventually beats analog.
double b2_threshold(const SystemParams& p);

// Denominator of gamma1; positive iff B2 > b2_threshold.
double gamma1_denominator(const SystemParams& p);

// SNR above which ZF-hybrid beats analog. Throws ThresholdUndefinedError when
// the denominator is not positive (analog wins at every SNR).
double gamma1(const SystemParams& p);

enum class Comparison { mrt_vs_analog, zf_vs_analog };
enum class RegimeKind { hybrid_always, analog_always, crossover };
enum class Winner { hybrid, analog };

std::string_view to_string(Comparison c) noexcept;
std::string_view to_string(RegimeKind r) noexcept;
std::string_view to_string(Winner w) noexcept;

struct RegimeVerdict {
    Comparison comparison = Comparison::mrt_vs_analog;
    Winner winner = Winner::hybrid;  // at p.gamma
    RegimeKind kind = RegimeKind::hybrid_always;
    double bit_threshold = 0.0;              // B1^0 (MRT) or B2^0 (ZF)
    std::optional<double> crossover_gamma;   // gamma0 or gamma1 when finite and positive
};

// MRT: B1 <= B1^0 -> hybrid always; otherwise hybrid wins below gamma0.
// ZF:  B2 <= B2^0 -> analog always; otherwise hybrid wins above gamma1.
// Requires K >= 2.
RegimeVerdict predict_winner(const SystemParams& p, Comparison comparison);

// Closed-form hybrid rate minus closed-form analog rate.
double delta_rate(const SystemParams& p, Comparison comparison);

}  // namespace hybridmimo::analysis

#endif
