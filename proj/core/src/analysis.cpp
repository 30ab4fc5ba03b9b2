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

#include "hybridmimo/analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hybridmimo/errors.hpp"
#include "hybridmimo/numerics.hpp"

namespace hybridmimo::analysis {

namespace {

constexpr double kPi = std::numbers::pi;

// Relative size below which a threshold denominator counts as zero.
constexpr double kBoundaryTolerance = 1e-12;

}  // namespace

double feedback_term(double b2, std::size_t k) noexcept
{
    if (k < 2 || std::isinf(b2)) {
        return 0.0;
    }
    return std::exp2(-b2 / static_cast<double>(k - 1));
}

double sinc_sq_for_bits(double b1) noexcept
{
    const double d = std::isinf(b1) ? 0.0 : kPi / std::exp2(b1);
    const double s = sinc(d);
    return s * s;
}

SystemParams SystemParams::for_user(std::size_t m, std::size_t k, double b1, double b2, double gamma,
                                    std::span<const double> betas, std::size_t user)
{
    if (betas.size() != k || user >= k) {
        throw ConfigError("path-loss vector has " + std::to_string(betas.size()) + " entries for K=" +
                          std::to_string(k));
    }
    double other = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        if (j != user) {
            other += betas[j];
        }
    }
    return {m, k, b1, b2, gamma, betas[user], other};
}

void SystemParams::validate() const
{
    if (k == 0 || m < k || m % k != 0) {
        throw ConfigError("need M >= K >= 1 with K dividing M (got M=" + std::to_string(m) +
                          ", K=" + std::to_string(k) + ")");
    }
    if (!(gamma > 0.0)) {
        throw ConfigError("SNR must be positive");
    }
    if (!(beta > 0.0) || beta_other < 0.0) {
        throw ConfigError("path losses must be positive");
    }
}

double SystemParams::delta() const noexcept
{
    return std::isinf(b1) ? 0.0 : kPi / std::exp2(b1);
}

double SystemParams::sinc_sq() const noexcept
{
    return sinc_sq_for_bits(b1);
}

double SystemParams::feedback_term() const noexcept
{
    return analysis::feedback_term(b2, k);
}

double rate_mrt_hybrid(const SystemParams& p)
{
    p.validate();
    const double K = static_cast<double>(p.k);
    const double N = p.n();
    const double s2 = p.sinc_sq();
    const double t = p.feedback_term();

    const double signal = (p.gamma * p.beta / K) * (kPi * s2 / 4.0 + K / N - t / N) * (kPi * N * s2 / 4.0 + K);
    const double denom = kPi * N * s2 / 4.0 + K + (p.gamma / K) * p.beta_other * (K / N + kPi * s2 / 2.0);
    return std::log2(1.0 + signal / denom);
}

double rate_mrt_hybrid_perfect(const SystemParams& p)
{
    p.validate();
    const double K = static_cast<double>(p.k);
    const double N = p.n();
    const double a = kPi / 4.0 + K / N;
    const double signal = (p.gamma * p.beta * N / K) * a * a;
    const double denom = kPi * N / 4.0 + K + (p.gamma * p.beta_other / K) * (kPi / 2.0 + K / N);
    return std::log2(1.0 + signal / denom);
}

double rate_zf_hybrid_lb(const SystemParams& p)
{
    p.validate();
    const double K = static_cast<double>(p.k);
    const double N = p.n();
    const double s2 = p.sinc_sq();
    const double t = p.feedback_term();
    const double num = 4.0 * K * N + kPi * N * p.gamma * p.beta * s2;
    const double den = 4.0 * K * N + 4.0 * p.gamma * p.beta_other * t;
    return std::log2(num / den);
}

double rate_zf_hybrid_perfect(const SystemParams& p)
{
    p.validate();
    const double K = static_cast<double>(p.k);
    return std::log2(1.0 + p.gamma * p.beta * kPi * p.sinc_sq() / (4.0 * K));
}

double rate_analog(const SystemParams& p)
{
    p.validate();
    const double K = static_cast<double>(p.k);
    const double N = p.n();
    const double s2 = p.sinc_sq();
    return std::log2(1.0 + p.gamma * p.beta * (kPi * N * s2 / 4.0 + 1.0) / (K * N + p.gamma * p.beta_other));
}

double rate_analog_perfect(const SystemParams& p)
{
    p.validate();
    const double K = static_cast<double>(p.k);
    const double N = p.n();
    return std::log2(1.0 + (kPi * N * p.gamma * p.beta / 4.0) / (K * N + p.gamma * p.beta_other));
}

double b1_threshold(double n, std::size_t k, double b2)
{
    if (!(n > 0.0) || k == 0) {
        throw ConfigError("b1_threshold: need N > 0 and K >= 1");
    }
    const double t = feedback_term(b2, k);
    const double denom = 3.0 * kPi * n - 12.0 * (static_cast<double>(k) - 2.0 - t);
    if (!(denom > 0.0)) {
        return std::numeric_limits<double>::infinity();
    }
    return 0.5 * std::log2(kPi * kPi * kPi * n / denom);
}

double k_threshold(double n, double b1, double b2, std::size_t k)
{
    if (k < 2) {
        throw ConfigError("k_threshold: the feedback exponent needs K >= 2");
    }
    return kPi * n * sinc_sq_for_bits(b1) / 4.0 + feedback_term(b2, k) + 2.0;
}

double gamma0(const SystemParams& p)
{
    p.validate();
    if (p.k < 2) {
        throw ConfigError("gamma0: needs K >= 2");
    }
    const double K = static_cast<double>(p.k);
    const double N = p.n();
    const double t = p.feedback_term();
    const double bracket = K - 2.0 - t - kPi * N * p.sinc_sq() / 4.0;
    const double denom = p.beta_other * bracket;
    if (std::abs(bracket) <= kBoundaryTolerance * (K + kPi * N / 4.0) || denom == 0.0) {
        throw ThresholdUndefinedError("gamma0: denominator vanishes at these parameters");
    }
    return static_cast<double>(p.m) * (t - K + 1.0) / denom;
}

double b2_threshold(const SystemParams& p)
{
    p.validate();
    if (p.k < 2) {
        throw ConfigError("b2_threshold: needs K >= 2");
    }
    const double K = static_cast<double>(p.k);
    const double N = p.n();
    return (K - 1.0) * std::log2(1.0 + 4.0 * (p.beta + p.beta_other) / (kPi * N * p.beta * p.sinc_sq()));
}

double gamma1_denominator(const SystemParams& p)
{
    p.validate();
    const double N = p.n();
    const double t = p.feedback_term();
    return p.beta_other * (kPi * N * p.beta * p.sinc_sq() * (1.0 - t) - 4.0 * (p.beta + p.beta_other) * t);
}

double gamma1(const SystemParams& p)
{
    const double denom = gamma1_denominator(p);
    const double scale = p.beta_other * kPi * p.n() * p.beta * p.sinc_sq();
    if (!(denom > kBoundaryTolerance * scale)) {
        throw ThresholdUndefinedError("gamma1: feedback too coarse for ZF-hybrid to overtake analog at any SNR");
    }
    const double t = p.feedback_term();
    return 4.0 * static_cast<double>(p.m) * (p.beta_other * t + p.beta) / denom;
}

std::string_view to_string(Comparison c) noexcept
{
    return c == Comparison::mrt_vs_analog ? "mrt-vs-analog" : "zf-vs-analog";
}

std::string_view to_string(RegimeKind r) noexcept
{
    switch (r) {
    case RegimeKind::hybrid_always:
        return "hybrid-always";
    case RegimeKind::analog_always:
        return "analog-always";
    case RegimeKind::crossover:
        return "crossover";
    }
    return "unknown";
}

std::string_view to_string(Winner w) noexcept
{
    return w == Winner::hybrid ? "hybrid" : "analog";
}

RegimeVerdict predict_winner(const SystemParams& p, Comparison comparison)
{
    p.validate();
    if (p.k < 2) {
        throw ConfigError("predict_winner: needs K >= 2 (a single user sees no interference)");
    }
    RegimeVerdict v;
    v.comparison = comparison;

    if (comparison == Comparison::mrt_vs_analog) {
        v.bit_threshold = b1_threshold(p.n(), p.k, p.b2);
        if (p.b1 <= v.bit_threshold) {
            v.kind = RegimeKind::hybrid_always;
            v.winner = Winner::hybrid;
            return v;
        }
        double g0 = 0.0;
        try {
            g0 = gamma0(p);
        } catch (const ThresholdUndefinedError&) {
            g0 = std::numeric_limits<double>::quiet_NaN();
        }
        if (!(g0 > 0.0) || std::isinf(g0)) {
            // The user-count condition holds: hybrid wins for every SNR.
            v.kind = RegimeKind::hybrid_always;
            v.winner = Winner::hybrid;
            return v;
        }
        v.kind = RegimeKind::crossover;
        v.crossover_gamma = g0;
        v.winner = p.gamma < g0 ? Winner::hybrid : Winner::analog;
        return v;
    }

    v.bit_threshold = b2_threshold(p);
    if (p.b2 <= v.bit_threshold) {
        v.kind = RegimeKind::analog_always;
        v.winner = Winner::analog;
        return v;
    }
    double g1 = 0.0;
    try {
        g1 = gamma1(p);
    } catch (const ThresholdUndefinedError&) {
        v.kind = RegimeKind::analog_always;
        v.winner = Winner::analog;
        return v;
    }
    v.kind = RegimeKind::crossover;
    v.crossover_gamma = g1;
    v.winner = p.gamma > g1 ? Winner::hybrid : Winner::analog;
    return v;
}

double delta_rate(const SystemParams& p, Comparison comparison)
{
    const double hybrid = comparison == Comparison::mrt_vs_analog ? rate_mrt_hybrid(p) : rate_zf_hybrid_lb(p);
    return hybrid - rate_analog(p);
}

}  // namespace hybridmimo::analysis
