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

#ifndef HYBRIDMIMO_SIMULATOR_HPP
#define HYBRIDMIMO_SIMULATOR_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hybridmimo/bits.hpp"
#include "hybridmimo/channel.hpp"
#include "hybridmimo/numerics.hpp"
#include "hybridmimo/precoding.hpp"

namespace hybridmimo {

enum class Scheme { analog, mrt_hybrid, zf_hybrid };

std::string_view to_string(Scheme s) noexcept;
// Accepts "analog", "mrt-hybrid" and "zf-hybrid". Throws ConfigError otherwise.
Scheme parse_scheme(std::string_view text);

// Per-user rates log2(1 + SINR_k) for effective channel G (rows g_k^H) and
// digital precoder W (column k serves user k); gamma is the linear SNR.
std::vector<double> instantaneous_rates(const CMat& g, const CMat& w, std::span<const double> beta, double gamma,
                                        std::size_t users);

// Path losses: either an explicit per-user list or one Uniform[lo, hi] draw
// per user from the reserved path-loss stream.
struct BetaSpec {
    enum class Kind { fixed, uniform };

    Kind kind = Kind::fixed;
    std::vector<double> values;  // fixed: one entry per user, or a single entry for all users
    double lo = 0.5;
    double hi = 1.5;

    static BetaSpec fixed(std::vector<double> v) { return {Kind::fixed, std::move(v), 0.0, 0.0}; }
    static BetaSpec uniform(double lo, double hi) { return {Kind::uniform, {}, lo, hi}; }

    std::vector<double> resolve(std::size_t users, std::uint64_t seed) const;
};

inline constexpr std::size_t kMinRateTrials = 100;

struct ScenarioConfig {
    std::size_t m = 120;
    std::size_t k = 6;
    Bits b1{2};
    Bits b2{10};
    ChannelModel channel = ChannelModel::rayleigh;
    MmWaveParams mmwave;
    std::vector<Scheme> schemes{Scheme::analog, Scheme::mrt_hybrid, Scheme::zf_hybrid};
    std::vector<double> snr_db{0.0};
    BetaSpec beta = BetaSpec::fixed({1.0});
    std::size_t trials = 2000;
    std::uint64_t seed = 0;
    std::size_t workers = 1;
    // Uniform path losses only: redraw beta at the start of every trial
    // instead of once per experiment.
    bool redraw_beta = false;
    // Draw one codebook per user for the whole experiment.
    bool freeze_codebook = false;

    // Throws ConfigError / ResourceLimitError. Feedback limits only apply
    // when a hybrid scheme is requested.
    void validate() const;
    bool needs_feedback() const noexcept;
};

// Rates of one trial: rates[s][g][k] for scheme s, SNR index g, user k.
struct TrialSample {
    std::vector<std::vector<std::vector<double>>> rates;
    bool zf_loaded = false;
};

// Pipeline with the per-experiment state (path losses, correlation matrices)
// precomputed. run_trial is const and thread-safe.
class Experiment {
public:
    explicit Experiment(ScenarioConfig cfg);

    const ScenarioConfig& config() const noexcept { return cfg_; }
    const std::vector<double>& beta() const noexcept { return beta_; }

    TrialSample run_trial(std::uint64_t trial) const;

private:
    ScenarioConfig cfg_;
    std::vector<double> beta_;
    std::vector<double> gamma_;
    std::vector<EffectiveCorrelation> corr_;
    std::vector<FeedbackCodebook> frozen_;
};

TrialSample run_trial(const ScenarioConfig& cfg, std::uint64_t trial);

struct RateResult {
    std::vector<Scheme> schemes;
    std::vector<double> snr_db;
    std::size_t users = 0;
    std::size_t trials = 0;
    // Experiment-level path losses; with per-trial redraw these are only the
    // nominal values.
    std::vector<double> beta;
    // per_user[s][g][k]
    std::vector<std::vector<std::vector<MeanCI>>> per_user;
    // sum_rate[s][g]; mean is the exact sum of the per-user means
    std::vector<std::vector<MeanCI>> sum_rate;
    // Trials whose ZF Gram matrix needed diagonal loading.
    std::size_t zf_degenerate = 0;

    // Index of scheme s in `schemes`; throws ConfigError if absent.
    std::size_t scheme_index(Scheme s) const;
};

RateResult run_experiment(const ScenarioConfig& cfg);

// Trials are processed in fixed blocks of this size; partial statistics are
// merged in block order, so results do not depend on the worker count.
inline constexpr std::size_t kTrialBlock = 64;

// --- Moment validation -------------------------------------------------------

inline constexpr std::size_t kMinMomentTrials = 10000;

struct MomentConfig {
    std::size_t m = 120;
    std::size_t k = 6;
    Bits b1{2};
    Bits b2{10};
    std::size_t trials = kMinMomentTrials;
    std::uint64_t seed = 0;
    double gamma_db = 10.0;
    std::size_t workers = 1;
};

enum class MomentCheck { equal, bracket, upper_bound };

std::string_view to_string(MomentCheck c) noexcept;

struct MomentRow {
    std::string name;
    double empirical = 0.0;
    double closed_form = 0.0;
    double std_error = 0.0;
    MomentCheck check = MomentCheck::equal;
    // bracket rows: accepted interval for the empirical value
    double lower = 0.0;
    double upper = 0.0;
    bool pass = false;
};

inline constexpr double kMomentSigmas = 4.0;

// Empirical moments of the channel / quantizer pipeline against their closed
// forms on i.i.d. Rayleigh channels with unit path losses. Throws ConfigError
// for fewer than 10^4 trials.
std::vector<MomentRow> validate_moments(const MomentConfig& cfg);

}  // namespace hybridmimo

#endif
