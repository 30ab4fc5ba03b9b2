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

#include "hybridmimo/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <thread>
#include <utility>

#include "hybridmimo/analysis.hpp"
#include "hybridmimo/errors.hpp"

namespace hybridmimo {

namespace {

// Runs fn(acc, trial) over trials 0..T-1 in fixed blocks; acc[b] collects block b.
// Exceptions are rethrown from the lowest failing block.
template <class Acc, class Make, class Fn>
std::vector<Acc> run_blocks(std::size_t trials, std::size_t workers, Make make, Fn fn)
{
    const std::size_t nblocks = (trials + kTrialBlock - 1) / kTrialBlock;
    std::vector<Acc> partial;
    partial.reserve(nblocks);
    for (std::size_t b = 0; b < nblocks; ++b) {
        partial.push_back(make());
    }
    std::vector<std::exception_ptr> errors(nblocks);
    std::atomic<std::size_t> next{0};

    auto work = [&]() {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= nblocks) {
                return;
            }
            try {
                const std::size_t end = std::min(trials, (b + 1) * kTrialBlock);
                for (std::size_t t = b * kTrialBlock; t < end; ++t) {
                    fn(partial[b], static_cast<std::uint64_t>(t));
                }
            } catch (...) {
                errors[b] = std::current_exception();
            }
        }
    };

    const std::size_t n_threads = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(nblocks, 1));
    if (n_threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t i = 0; i < n_threads; ++i) {
            pool.emplace_back(work);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return partial;
}

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

// |(G W)(k, j)|^2
std::vector<double> gain_matrix(const CMat& g, const CMat& w)
{
    const CMat x = g * w;
    std::vector<double> p(x.rows() * x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            p[i * x.cols() + j] = std::norm(x(i, j));
        }
    }
    return p;
}

void rates_from_gains(std::span<const double> p, std::span<const double> beta, double gamma, std::size_t users,
                      std::vector<double>& out)
{
    const double scale = gamma / static_cast<double>(users);
    out.resize(users);
    for (std::size_t k = 0; k < users; ++k) {
        double interference = 0.0;
        for (std::size_t j = 0; j < users; ++j) {
            if (j != k) {
                interference += beta[j] * p[k * users + j];
            }
        }
        const double sinr = scale * beta[k] * p[k * users + k] / (1.0 + scale * interference);
        out[k] = std::log2(1.0 + sinr);
    }
}

CMat feedback_matrix(RngStream& stream, const EffectiveChannel& eff, Bits b2,
                     const std::vector<EffectiveCorrelation>& corr)
{
    const std::size_t users = eff.users();
    CMat ghat(users, users);
    for (std::size_t k = 0; k < users; ++k) {
        const FeedbackCodebook cb = generate_codebook(stream, users, b2, corr[k]);
        ghat.set_column(k, quantize_effective_channel(eff.user_vector(k), cb).codeword);
    }
    return ghat;
}

CMat feedback_matrix(const EffectiveChannel& eff, const std::vector<FeedbackCodebook>& codebooks)
{
    const std::size_t users = eff.users();
    CMat ghat(users, users);
    for (std::size_t k = 0; k < users; ++k) {
        ghat.set_column(k, quantize_effective_channel(eff.user_vector(k), codebooks[k]).codeword);
    }
    return ghat;
}

CMat perfect_feedback_matrix(const EffectiveChannel& eff)
{
    const std::size_t users = eff.users();
    CMat ghat(users, users);
    for (std::size_t k = 0; k < users; ++k) {
        ghat.set_column(k, quantize_effective_channel(eff.user_vector(k), FeedbackCodebook()).codeword);
    }
    return ghat;
}

}  // namespace

std::string_view to_string(Scheme s) noexcept
{
    switch (s) {
    case Scheme::analog:
        return "analog";
    case Scheme::mrt_hybrid:
        return "mrt-hybrid";
    case Scheme::zf_hybrid:
        return "zf-hybrid";
    }
    return "unknown";
}

Scheme parse_scheme(std::string_view text)
{
    if (text == "analog") {
        return Scheme::analog;
    }
    if (text == "mrt-hybrid") {
        return Scheme::mrt_hybrid;
    }
    if (text == "zf-hybrid") {
        return Scheme::zf_hybrid;
    }
    throw ConfigError("unknown scheme '" + std::string(text) + "' (expected analog, mrt-hybrid or zf-hybrid)");
}

std::vector<double> instantaneous_rates(const CMat& g, const CMat& w, std::span<const double> beta, double gamma,
                                        std::size_t users)
{
    if (g.rows() != users || g.cols() != w.rows() || w.cols() != users || beta.size() != users) {
        throw DimensionError("instantaneous_rates: need G K x L, W L x K and K path losses");
    }
    if (!(gamma > 0.0)) {
        throw ConfigError("instantaneous_rates: SNR must be positive");
    }
    std::vector<double> out;
    rates_from_gains(gain_matrix(g, w), beta, gamma, users, out);
    return out;
}

std::vector<double> BetaSpec::resolve(std::size_t users, std::uint64_t seed) const
{
    if (kind == Kind::uniform) {
        RngStream stream(seed, kPathLossStream);
        return sample_pathloss(stream, users, lo, hi);
    }
    std::vector<double> out;
    if (values.size() == 1) {
        out.assign(users, values.front());
    } else if (values.size() == users) {
        out = values;
    } else {
        throw ConfigError("beta list has " + std::to_string(values.size()) + " entries for K=" +
                          std::to_string(users));
    }
    for (double b : out) {
        if (!(b > 0.0) || !std::isfinite(b)) {
            throw ConfigError("path losses must be positive and finite");
        }
    }
    return out;
}

bool ScenarioConfig::needs_feedback() const noexcept
{
    return std::any_of(schemes.begin(), schemes.end(), [](Scheme s) { return s != Scheme::analog; });
}

void ScenarioConfig::validate() const
{
    check_array_shape(m, k);
    if (schemes.empty()) {
        throw ConfigError("at least one scheme is required");
    }
    if (snr_db.empty()) {
        throw ConfigError("SNR grid is empty");
    }
    for (double s : snr_db) {
        if (!std::isfinite(s)) {
            throw ConfigError("SNR grid values must be finite");
        }
    }
    if (trials < kMinRateTrials) {
        throw ConfigError("need at least " + std::to_string(kMinRateTrials) + " trials, got " +
                          std::to_string(trials));
    }
    if (workers == 0) {
        throw ConfigError("workers must be at least 1");
    }
    if (!b1.is_infinite() && (b1.value() < 1 || b1.value() > 30)) {
        throw ConfigError("B1 must be in 1..30 or inf");
    }
    if (channel == ChannelModel::mmwave && mmwave.paths == 0) {
        throw ConfigError("mmWave channel needs at least one path");
    }
    if (beta.kind == BetaSpec::Kind::uniform && !(beta.lo > 0.0 && beta.lo <= beta.hi && std::isfinite(beta.hi))) {
        throw ConfigError("uniform path loss needs 0 < lo <= hi");
    }
    if (redraw_beta && beta.kind != BetaSpec::Kind::uniform) {
        throw ConfigError("per-trial path-loss redraw needs a uniform:lo,hi path-loss range");
    }
    if (needs_feedback() && !b2.is_infinite()) {
        if (b2.value() < 1) {
            throw ConfigError("B2 must be at least 1 or inf");
        }
        if (b2.value() > kMaxFeedbackBits) {
            throw ResourceLimitError("B2 = " + b2.to_string() + " exceeds the codebook limit of 2^" +
                                     std::to_string(kMaxFeedbackBits) + " words");
        }
    }
}

Experiment::Experiment(ScenarioConfig cfg) : cfg_(std::move(cfg))
{
    cfg_.validate();
    beta_ = cfg_.beta.resolve(cfg_.k, cfg_.seed);
    gamma_.reserve(cfg_.snr_db.size());
    for (double db : cfg_.snr_db) {
        gamma_.push_back(db_to_linear(db));
    }
    if (cfg_.needs_feedback()) {
        const std::size_t n = cfg_.m / cfg_.k;
        for (std::size_t u = 0; u < cfg_.k; ++u) {
            corr_.push_back(correlation_matrix(u, cfg_.k, n, cfg_.b1));
        }
        if (cfg_.freeze_codebook) {
            RngStream stream(cfg_.seed, kFrozenCodebookStream);
            for (std::size_t u = 0; u < cfg_.k; ++u) {
                frozen_.push_back(generate_codebook(stream, cfg_.k, cfg_.b2, corr_[u]));
            }
        }
    }
}

TrialSample Experiment::run_trial(std::uint64_t trial) const
{
    const std::size_t users = cfg_.k;
    RngStream stream(cfg_.seed, trial);
    std::vector<double> trial_beta;
    if (cfg_.redraw_beta) {
        trial_beta = sample_pathloss(stream, users, cfg_.beta.lo, cfg_.beta.hi);
    }
    const std::vector<double>& beta = cfg_.redraw_beta ? trial_beta : beta_;
    const ChannelRealization ch = cfg_.channel == ChannelModel::rayleigh
                                      ? sample_rayleigh(stream, cfg_.m, users)
                                      : sample_mmwave(stream, cfg_.m, users, cfg_.mmwave);
    const AnalogPrecoder analog = build_analog_precoder(ch.h, cfg_.b1);
    const EffectiveChannel eff = effective_channel(ch.h, analog);

    CMat ghat;
    if (cfg_.needs_feedback()) {
        ghat = cfg_.freeze_codebook ? feedback_matrix(eff, frozen_) : feedback_matrix(stream, eff, cfg_.b2, corr_);
    }

    TrialSample out;
    out.rates.resize(cfg_.schemes.size());
    for (std::size_t s = 0; s < cfg_.schemes.size(); ++s) {
        DigitalPrecoder w;
        switch (cfg_.schemes[s]) {
        case Scheme::analog:
            w = identity_precoder(users);
            break;
        case Scheme::mrt_hybrid:
            w = mrt_precoder(ghat);
            break;
        case Scheme::zf_hybrid:
            w = zf_precoder(ghat, analog);
            out.zf_loaded = out.zf_loaded || w.loaded;
            break;
        }
        const std::vector<double> p = gain_matrix(eff.g, w.w);
        out.rates[s].resize(gamma_.size());
        for (std::size_t gi = 0; gi < gamma_.size(); ++gi) {
            rates_from_gains(p, beta, gamma_[gi], users, out.rates[s][gi]);
        }
    }
    return out;
}

TrialSample run_trial(const ScenarioConfig& cfg, std::uint64_t trial)
{
    return Experiment(cfg).run_trial(trial);
}

std::size_t RateResult::scheme_index(Scheme s) const
{
    const auto it = std::find(schemes.begin(), schemes.end(), s);
    if (it == schemes.end()) {
        throw ConfigError("scheme " + std::string(to_string(s)) + " was not simulated");
    }
    return static_cast<std::size_t>(it - schemes.begin());
}

namespace {

struct RateAccumulator {
    std::vector<RunningStats> user;  // [s][g][k] flattened
    std::vector<RunningStats> sum;   // [s][g] flattened
    std::size_t loaded = 0;

    void merge(const RateAccumulator& o)
    {
        for (std::size_t i = 0; i < user.size(); ++i) {
            user[i].merge(o.user[i]);
        }
        for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i].merge(o.sum[i]);
        }
        loaded += o.loaded;
    }
};

}  // namespace

RateResult run_experiment(const ScenarioConfig& cfg)
{
    const Experiment exp(cfg);
    const std::size_t ns = cfg.schemes.size();
    const std::size_t ng = cfg.snr_db.size();
    const std::size_t nk = cfg.k;

    auto make = [&]() { return RateAccumulator{std::vector<RunningStats>(ns * ng * nk), std::vector<RunningStats>(ns * ng), 0}; };
    auto step = [&](RateAccumulator& acc, std::uint64_t t) {
        const TrialSample sample = exp.run_trial(t);
        for (std::size_t s = 0; s < ns; ++s) {
            for (std::size_t g = 0; g < ng; ++g) {
                double total = 0.0;
                for (std::size_t k = 0; k < nk; ++k) {
                    const double r = sample.rates[s][g][k];
                    acc.user[(s * ng + g) * nk + k].add(r);
                    total += r;
                }
                acc.sum[s * ng + g].add(total);
            }
        }
        acc.loaded += sample.zf_loaded ? 1 : 0;
    };
    const std::vector<RateAccumulator> blocks = run_blocks<RateAccumulator>(cfg.trials, cfg.workers, make, step);

    RateAccumulator total = make();
    for (const auto& b : blocks) {
        total.merge(b);
    }

    RateResult res;
    res.schemes = cfg.schemes;
    res.snr_db = cfg.snr_db;
    res.users = nk;
    res.trials = cfg.trials;
    res.beta = exp.beta();
    res.zf_degenerate = total.loaded;
    res.per_user.assign(ns, std::vector<std::vector<MeanCI>>(ng, std::vector<MeanCI>(nk)));
    res.sum_rate.assign(ns, std::vector<MeanCI>(ng));
    for (std::size_t s = 0; s < ns; ++s) {
        for (std::size_t g = 0; g < ng; ++g) {
            double mean_sum = 0.0;
            for (std::size_t k = 0; k < nk; ++k) {
                res.per_user[s][g][k] = total.user[(s * ng + g) * nk + k].to_mean_ci();
                mean_sum += res.per_user[s][g][k].mean;
            }
            MeanCI sum = total.sum[s * ng + g].to_mean_ci();
            sum.mean = mean_sum;
            res.sum_rate[s][g] = sum;
        }
    }
    return res;
}

// --- Moment validation -------------------------------------------------------

std::string_view to_string(MomentCheck c) noexcept
{
    switch (c) {
    case MomentCheck::equal:
        return "equal";
    case MomentCheck::bracket:
        return "bracket";
    case MomentCheck::upper_bound:
        return "upper-bound";
    }
    return "unknown";
}

namespace {

// Pooled power sums of i.i.d. samples, for the mean and variance rows.
struct PowerSums {
    double n = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
    double s4 = 0.0;

    void add(double x) noexcept
    {
        const double x2 = x * x;
        n += 1.0;
        s1 += x;
        s2 += x2;
        s3 += x2 * x;
        s4 += x2 * x2;
    }
    void merge(const PowerSums& o) noexcept
    {
        n += o.n;
        s1 += o.s1;
        s2 += o.s2;
        s3 += o.s3;
        s4 += o.s4;
    }
    double mean() const noexcept { return s1 / n; }
    double variance() const noexcept
    {
        const double mu = mean();
        return (s2 / n - mu * mu) * n / (n - 1.0);
    }
    double mean_se() const noexcept { return std::sqrt(variance() / n); }
    // Delta-method standard error of the sample variance.
    double variance_se() const noexcept
    {
        const double mu = mean();
        const double m2 = s2 / n - mu * mu;
        const double m4 = s4 / n - 4.0 * mu * s3 / n + 6.0 * mu * mu * s2 / n - 3.0 * mu * mu * mu * mu;
        return std::sqrt(std::max(0.0, m4 - m2 * m2) / n);
    }
};

enum MomentStat : std::size_t {
    kOwnGain,
    kCrossGain,
    kNormSq,
    kCorrelation,
    kMrtSignal,
    kMrtInterference,
    kZfLeakage,
    kZfRateLoss,
    kStatCount
};

struct MomentAccumulator {
    PowerSums lambda_re;
    std::vector<RunningStats> stats = std::vector<RunningStats>(kStatCount);

    void merge(const MomentAccumulator& o)
    {
        lambda_re.merge(o.lambda_re);
        for (std::size_t i = 0; i < stats.size(); ++i) {
            stats[i].merge(o.stats[i]);
        }
    }
};

// Slack that lets exact-arithmetic edge cases (B2 = inf) pass bound rows.
constexpr double kAbsoluteSlack = 1e-12;

}  // namespace

std::vector<MomentRow> validate_moments(const MomentConfig& cfg)
{
    check_array_shape(cfg.m, cfg.k);
    if (cfg.trials < kMinMomentTrials) {
        throw ConfigError("moment validation needs at least " + std::to_string(kMinMomentTrials) + " trials, got " +
                          std::to_string(cfg.trials));
    }
    if (cfg.workers == 0) {
        throw ConfigError("workers must be at least 1");
    }
    if (!cfg.b1.is_infinite() && (cfg.b1.value() < 1 || cfg.b1.value() > 30)) {
        throw ConfigError("B1 must be in 1..30 or inf");
    }
    if (!cfg.b2.is_infinite() && cfg.b2.value() < 1) {
        throw ConfigError("B2 must be at least 1 or inf");
    }
    if (!cfg.b2.is_infinite() && cfg.b2.value() > kMaxFeedbackBits) {
        throw ResourceLimitError("B2 = " + cfg.b2.to_string() + " exceeds the codebook limit");
    }

    const std::size_t users = cfg.k;
    const std::size_t n = cfg.m / cfg.k;
    const double N = static_cast<double>(n);
    const double K = static_cast<double>(users);
    const double gamma = db_to_linear(cfg.gamma_db);
    const std::vector<double> beta(users, 1.0);

    std::vector<EffectiveCorrelation> corr;
    for (std::size_t u = 0; u < users; ++u) {
        corr.push_back(correlation_matrix(u, users, n, cfg.b1));
    }

    auto make = []() { return MomentAccumulator{}; };
    auto step = [&](MomentAccumulator& acc, std::uint64_t t) {
        RngStream stream(cfg.seed, t);
        const ChannelRealization ch = sample_rayleigh(stream, cfg.m, users);
        const AnalogPrecoder analog = build_analog_precoder(ch.h, cfg.b1);
        const EffectiveChannel eff = effective_channel(ch.h, analog);
        const CMat ghat = feedback_matrix(stream, eff, cfg.b2, corr);

        for (std::size_t k = 0; k < users; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                const cplx h = std::conj(ch.h(k, k * n + i));
                acc.lambda_re.add((h * std::polar(1.0, -analog.phase(k, i).phase)).real());
            }
        }

        double own = 0.0;
        double cross = 0.0;
        double norm_sq = 0.0;
        double correlation = 0.0;
        for (std::size_t k = 0; k < users; ++k) {
            for (std::size_t j = 0; j < users; ++j) {
                (j == k ? own : cross) += std::norm(eff.g(k, j));
            }
            norm_sq += eff.row_norm_sq(k);
            const CVec gk = eff.user_vector(k);
            correlation += std::norm(dot(gk.span(), ghat.column(k).span())) / gk.squared_norm();
        }
        const double off = users > 1 ? K * (K - 1.0) : 1.0;
        acc.stats[kOwnGain].add(own / K);
        acc.stats[kCrossGain].add(users > 1 ? cross / off : 0.0);
        acc.stats[kNormSq].add(norm_sq / K);
        acc.stats[kCorrelation].add(correlation / K);

        const std::vector<double> mrt = gain_matrix(eff.g, ghat);
        const DigitalPrecoder zf = zf_precoder(ghat, analog);
        const std::vector<double> zfp = gain_matrix(eff.g, zf.w);
        double sig = 0.0;
        double intf = 0.0;
        double leak = 0.0;
        for (std::size_t k = 0; k < users; ++k) {
            for (std::size_t j = 0; j < users; ++j) {
                if (j == k) {
                    sig += mrt[k * users + k];
                } else {
                    intf += mrt[k * users + j];
                    leak += zfp[k * users + j];
                }
            }
        }
        acc.stats[kMrtSignal].add(sig / K);
        acc.stats[kMrtInterference].add(users > 1 ? intf / off : 0.0);
        acc.stats[kZfLeakage].add(users > 1 ? leak / off : 0.0);

        const DigitalPrecoder zf_perfect = zf_precoder(perfect_feedback_matrix(eff), analog, FeedbackMode::perfect);
        std::vector<double> r_q;
        std::vector<double> r_p;
        rates_from_gains(zfp, beta, gamma, users, r_q);
        rates_from_gains(gain_matrix(eff.g, zf_perfect.w), beta, gamma, users, r_p);
        double loss = 0.0;
        for (std::size_t k = 0; k < users; ++k) {
            loss += r_p[k] - r_q[k];
        }
        acc.stats[kZfRateLoss].add(loss / K);
    };

    const std::vector<MomentAccumulator> blocks = run_blocks<MomentAccumulator>(cfg.trials, cfg.workers, make, step);
    MomentAccumulator total;
    for (const auto& b : blocks) {
        total.merge(b);
    }

    const double delta = phase_error_halfwidth(cfg.b1);
    const double s = sinc(delta);
    const double s2 = s * s;
    const double w1 = (1.0 + s * std::cos(delta)) / 2.0 - std::numbers::pi * s2 / 4.0;
    const double w2 = (1.0 - s * std::cos(delta)) / 2.0;
    const double t = analysis::feedback_term(cfg.b2.as_real(), users);
    const double r_own = corr.front().sigma1_sq();
    const double r_other = corr.front().sigma2_sq();
    const double quant_loss = t * r_other / r_own;

    std::vector<MomentRow> rows;
    auto equal_row = [&](std::string name, double emp, double closed, double se) {
        MomentRow r{std::move(name), emp, closed, se, MomentCheck::equal};
        r.lower = closed - kMomentSigmas * se;
        r.upper = closed + kMomentSigmas * se;
        r.pass = std::abs(emp - closed) <= kMomentSigmas * se + kAbsoluteSlack;
        rows.push_back(std::move(r));
    };
    auto stat_row = [&](std::string name, MomentStat id, double closed) {
        const RunningStats& st = total.stats[id];
        equal_row(std::move(name), st.mean(), closed, st.std_error());
    };

    equal_row("mean of Re(lambda)", total.lambda_re.mean(), std::sqrt(std::numbers::pi) * s / 2.0,
              total.lambda_re.mean_se());
    equal_row("variance of Re(lambda)", total.lambda_re.variance(), w1, total.lambda_re.variance_se());
    stat_row("E|g_kk|^2", kOwnGain, std::numbers::pi * s2 / 4.0 + (w1 + w2) / N);
    stat_row("E|g_ki|^2", kCrossGain, 1.0 / N);
    stat_row("E||g_k||^2", kNormSq, std::numbers::pi * s2 / 4.0 + K / N - std::numbers::pi * s2 / (4.0 * N));

    {
        const RunningStats& st = total.stats[kCorrelation];
        MomentRow r{"quantization correlation", st.mean(), 1.0 - quant_loss, st.std_error(), MomentCheck::bracket};
        r.lower = 1.0 - 1.1 * quant_loss - kAbsoluteSlack;
        r.upper = 1.0 - 0.5 * quant_loss + kAbsoluteSlack;
        r.pass = st.mean() >= r.lower && st.mean() <= r.upper;
        rows.push_back(std::move(r));
    }

    stat_row("MRT signal", kMrtSignal, std::numbers::pi * s2 / 4.0 + K / N - t / N);
    stat_row("MRT interference", kMrtInterference,
             (std::numbers::pi * s2 / 2.0 + K / N) / (std::numbers::pi * N * s2 / 4.0 + K));

    {
        const RunningStats& st = total.stats[kZfLeakage];
        MomentRow r{"ZF leakage", st.mean(), t / N, st.std_error(), MomentCheck::upper_bound};
        r.upper = t / N + kMomentSigmas * st.std_error() + kAbsoluteSlack;
        r.pass = st.mean() <= r.upper;
        rows.push_back(std::move(r));
    }
    {
        const RunningStats& st = total.stats[kZfRateLoss];
        const double bound = std::log2(1.0 + gamma * (K - 1.0) * t / (K * N));
        MomentRow r{"ZF rate loss", st.mean(), bound, st.std_error(), MomentCheck::upper_bound};
        r.upper = bound + 2.0 * kZ95 * st.std_error() + kAbsoluteSlack;
        r.pass = st.mean() <= r.upper;
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace hybridmimo
