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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "hybridmimo/analysis.hpp"
#include "hybridmimo/errors.hpp"
#include "hybridmimo/simulator.hpp"

namespace hm = hybridmimo;
namespace an = hybridmimo::analysis;
using hm::Bits;
using hm::Scheme;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

hm::ScenarioConfig small_config()
{
    hm::ScenarioConfig c;
    c.m = 24;
    c.k = 4;
    c.b1 = Bits(2);
    c.b2 = Bits(6);
    c.snr_db = {0.0, 10.0, 20.0};
    c.trials = 200;
    c.seed = 5;
    return c;
}

TEST(InstantaneousRates, OrthogonalUsers)
{
    const auto eye = hm::CMat::identity(2);
    const std::vector<double> beta{1.0, 1.0};
    const auto r = hm::instantaneous_rates(eye, eye, beta, 10.0, 2);
    EXPECT_NEAR(r[0], std::log2(1.0 + 5.0), 1e-15);
    EXPECT_NEAR(r[1], std::log2(1.0 + 5.0), 1e-15);
    const auto z = hm::instantaneous_rates(eye, eye, beta, 1e-300, 2);
    EXPECT_LT(z[0], 1e-290);
}

TEST(InstantaneousRates, SilentBeamGivesZeroRate)
{
    const auto g = hm::CMat::identity(2);
    const hm::CMat w{{1.0, 0.0}, {0.0, 0.0}};
    const std::vector<double> beta{1.0, 1.0};
    const auto r = hm::instantaneous_rates(g, w, beta, 4.0, 2);
    EXPECT_NEAR(r[0], std::log2(3.0), 1e-15);
    EXPECT_EQ(r[1], 0.0);
}

TEST(InstantaneousRates, InterferenceScalesWithOtherPathLoss)
{
    const hm::CMat g{{1.0, 0.5}, {0.5, 1.0}};
    const auto w = hm::CMat::identity(2);
    const std::vector<double> beta{2.0, 0.5};
    const auto r = hm::instantaneous_rates(g, w, beta, 8.0, 2);
    EXPECT_NEAR(r[0], std::log2(1.0 + 4.0 * 2.0 / (1.0 + 4.0 * 0.5 * 0.25)), 1e-14);
    EXPECT_NEAR(r[1], std::log2(1.0 + 4.0 * 0.5 / (1.0 + 4.0 * 2.0 * 0.25)), 1e-14);
}

TEST(Trial, Reproducible)
{
    const auto c = small_config();
    const auto a = hm::run_trial(c, 17);
    const auto b = hm::run_trial(c, 17);
    EXPECT_EQ(a.rates, b.rates);
    EXPECT_NE(a.rates, hm::run_trial(c, 18).rates);
}

TEST(Trial, AnalogIgnoresFeedbackResolution)
{
    auto c = small_config();
    c.schemes = {Scheme::analog};
    c.b2 = Bits(1);
    const auto a = hm::run_trial(c, 3);
    c.b2 = Bits(20);
    EXPECT_EQ(hm::run_trial(c, 3).rates, a.rates);
}

TEST(Trial, AnalogUnaffectedByOtherSchemes)
{
    auto c = small_config();
    c.schemes = {Scheme::analog};
    const auto alone = hm::run_trial(c, 9);
    c.schemes = {Scheme::analog, Scheme::mrt_hybrid, Scheme::zf_hybrid};
    const auto together = hm::run_trial(c, 9);
    EXPECT_EQ(alone.rates[0], together.rates[0]);
}

TEST(Trial, SingleUserSchemesCoincide)
{
    hm::ScenarioConfig c;
    c.m = 8;
    c.k = 1;
    c.snr_db = {-10.0, 0.0, 10.0, 30.0};
    for (int t = 0; t < 200; ++t) {
        const auto s = hm::run_trial(c, static_cast<std::uint64_t>(t));
        for (std::size_t g = 0; g < c.snr_db.size(); ++g) {
            EXPECT_NEAR(s.rates[1][g][0], s.rates[0][g][0], 1e-12);
            EXPECT_NEAR(s.rates[2][g][0], s.rates[0][g][0], 1e-12);
        }
    }
}

TEST(Experiment, WorkerCountDoesNotChangeResults)
{
    auto c = small_config();
    c.trials = 300;
    c.beta = hm::BetaSpec::uniform(0.5, 1.5);
    c.workers = 1;
    const auto a = hm::run_experiment(c);
    c.workers = 3;
    const auto b = hm::run_experiment(c);
    for (std::size_t s = 0; s < a.schemes.size(); ++s) {
        for (std::size_t g = 0; g < a.snr_db.size(); ++g) {
            for (std::size_t k = 0; k < a.users; ++k) {
                EXPECT_EQ(a.per_user[s][g][k].mean, b.per_user[s][g][k].mean);
                EXPECT_EQ(a.per_user[s][g][k].half_width, b.per_user[s][g][k].half_width);
            }
            EXPECT_EQ(a.sum_rate[s][g].mean, b.sum_rate[s][g].mean);
        }
    }
    EXPECT_EQ(a.beta, b.beta);
}

TEST(Experiment, SumRateIsSumOfUserMeans)
{
    const auto r = hm::run_experiment(small_config());
    for (std::size_t s = 0; s < r.schemes.size(); ++s) {
        for (std::size_t g = 0; g < r.snr_db.size(); ++g) {
            double sum = 0.0;
            for (std::size_t k = 0; k < r.users; ++k) {
                EXPECT_GE(r.per_user[s][g][k].mean, 0.0);
                sum += r.per_user[s][g][k].mean;
            }
            EXPECT_DOUBLE_EQ(r.sum_rate[s][g].mean, sum);
        }
    }
}

TEST(Experiment, AnalogMatchesClosedForm)
{
    hm::ScenarioConfig c;
    c.schemes = {Scheme::analog};
    c.snr_db = {10.0};
    c.trials = 10000;
    c.seed = 21;
    const auto r = hm::run_experiment(c);
    const an::SystemParams p{120, 6, 2.0, 10.0, 10.0, 1.0, 5.0};
    for (std::size_t k = 0; k < 6; ++k) {
        EXPECT_NEAR(r.per_user[0][0][k].mean, an::rate_analog(p), 0.3);
    }
}

TEST(Experiment, ConfidenceIntervalShrinksWithTrials)
{
    auto c = small_config();
    c.schemes = {Scheme::analog};
    c.trials = 4000;
    const double w1 = hm::run_experiment(c).per_user[0][1][0].half_width;
    c.trials = 8000;
    const double w2 = hm::run_experiment(c).per_user[0][1][0].half_width;
    EXPECT_NEAR(w2 / w1, 1.0 / std::numbers::sqrt2, 0.15 / std::numbers::sqrt2);
}

TEST(Experiment, PerfectFeedbackZfApproachesAsymptote)
{
    hm::ScenarioConfig c;
    c.m = 512;
    c.k = 4;
    c.b1 = Bits(2);
    c.b2 = Bits::infinite();
    c.schemes = {Scheme::zf_hybrid};
    c.snr_db = {10.0};
    c.trials = 1000;
    c.seed = 8;
    const auto r = hm::run_experiment(c);
    const an::SystemParams p{512, 4, 2.0, kInf, 10.0, 1.0, 3.0};
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_NEAR(r.per_user[0][0][k].mean, an::rate_zf_hybrid_perfect(p), 0.15);
    }
}

TEST(Experiment, FrozenCodebookIsDeterministicAndDistinct)
{
    auto c = small_config();
    c.freeze_codebook = true;
    const auto a = hm::run_trial(c, 4);
    EXPECT_EQ(hm::run_trial(c, 4).rates, a.rates);
    c.freeze_codebook = false;
    EXPECT_NE(hm::run_trial(c, 4).rates[1], a.rates[1]);
    EXPECT_EQ(hm::run_trial(c, 4).rates[0], a.rates[0]);
}

TEST(Experiment, PathLossResolution)
{
    auto c = small_config();
    c.beta = hm::BetaSpec::uniform(0.5, 1.5);
    const hm::Experiment e(c);
    ASSERT_EQ(e.beta().size(), 4u);
    for (double b : e.beta()) {
        EXPECT_GE(b, 0.5);
        EXPECT_LE(b, 1.5);
    }
    EXPECT_EQ(hm::BetaSpec::fixed({2.0}).resolve(3, 0), std::vector<double>(3, 2.0));
    EXPECT_THROW(hm::BetaSpec::fixed({1.0, 2.0}).resolve(3, 0), hm::ConfigError);
}

TEST(Experiment, RedrawnPathLossChangesPerTrial)
{
    auto c = small_config();
    c.schemes = {Scheme::analog};
    c.beta = hm::BetaSpec::uniform(0.5, 1.5);
    const auto fixed = hm::run_trial(c, 2);
    c.redraw_beta = true;
    EXPECT_NE(hm::run_trial(c, 2).rates, fixed.rates);
    c.beta = hm::BetaSpec::fixed({1.0});
    EXPECT_THROW(c.validate(), hm::ConfigError);
}

TEST(Config, Validation)
{
    auto c = small_config();
    EXPECT_NO_THROW(c.validate());
    c.trials = 99;
    EXPECT_THROW(c.validate(), hm::ConfigError);
    c = small_config();
    c.m = 25;
    EXPECT_THROW(c.validate(), hm::ConfigError);
    c = small_config();
    c.snr_db.clear();
    EXPECT_THROW(c.validate(), hm::ConfigError);
    c = small_config();
    c.b2 = Bits(21);
    EXPECT_THROW(c.validate(), hm::ResourceLimitError);
    c.schemes = {Scheme::analog};
    EXPECT_NO_THROW(c.validate());
    EXPECT_FALSE(c.needs_feedback());
}

TEST(Config, SchemeNames)
{
    EXPECT_EQ(hm::parse_scheme("zf-hybrid"), Scheme::zf_hybrid);
    EXPECT_EQ(hm::to_string(Scheme::mrt_hybrid), "mrt-hybrid");
    EXPECT_THROW(hm::parse_scheme("zf"), hm::ConfigError);
}

}  // namespace
