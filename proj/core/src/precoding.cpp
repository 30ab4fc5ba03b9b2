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

#include "hybridmimo/precoding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "hybridmimo/channel.hpp"
#include "hybridmimo/errors.hpp"

namespace hybridmimo {

namespace {

constexpr int kMaxPhaseBits = 30;

}  // namespace

double phase_error_halfwidth(Bits b1) noexcept
{
    return b1.is_infinite() ? 0.0 : std::numbers::pi / std::ldexp(1.0, b1.value());
}

QuantizedPhase quantize_phase(cplx h, Bits b1)
{
    if (b1.is_infinite()) {
        return {0, h == cplx{} ? 0.0 : std::arg(h)};
    }
    const int bits = b1.value();
    if (bits < 1 || bits > kMaxPhaseBits) {
        throw ConfigError("phase resolution must be 1..30 bits or inf (got " + std::to_string(bits) + ")");
    }
    if (h == cplx{}) {
        return {0, 0.0};
    }
    const std::uint64_t levels = std::uint64_t{1} << bits;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(levels);

    // The maximiser of cos(phase_n - arg h) over a uniform grid is one of the
    // two grid points bracketing arg h.
    double a = std::arg(h);
    if (a < 0.0) {
        a += 2.0 * std::numbers::pi;
    }
    const auto below = static_cast<std::uint64_t>(std::floor(a / step)) % levels;
    const std::uint64_t above = (below + 1) % levels;

    const auto score = [&](std::uint64_t n) {
        return std::real(std::conj(h) * std::polar(1.0, step * static_cast<double>(n)));
    };
    const double s_below = score(below);
    const double s_above = score(above);
    std::uint64_t best;
    if (s_below > s_above) {
        best = below;
    } else if (s_above > s_below) {
        best = above;
    } else {
        best = std::min(below, above);
    }
    return {static_cast<std::uint32_t>(best), step * static_cast<double>(best)};
}

AnalogPrecoder::AnalogPrecoder(std::size_t users, std::size_t block, Bits b1, std::vector<QuantizedPhase> phases,
                               std::size_t undefined_phases)
    : users_(users), block_(block), b1_(b1), phases_(std::move(phases)), undefined_(undefined_phases)
{
    if (users_ == 0 || block_ == 0 || phases_.size() != users_ * block_) {
        throw DimensionError("AnalogPrecoder: expected " + std::to_string(users_ * block_) + " phases, got " +
                             std::to_string(phases_.size()));
    }
    const double mag = 1.0 / static_cast<double>(block_);
    const double f_scale = std::sqrt(static_cast<double>(block_));
    entries_.reserve(phases_.size());
    f_col_norm_sq_.assign(users_, 0.0);
    for (std::size_t k = 0; k < users_; ++k) {
        for (std::size_t i = 0; i < block_; ++i) {
            const cplx e = std::polar(mag, phases_[k * block_ + i].phase);
            entries_.push_back(e);
            f_col_norm_sq_[k] += std::norm(f_scale * e);
        }
    }
}

CMat AnalogPrecoder::matrix_a() const
{
    CMat a(antennas(), users_);
    for (std::size_t k = 0; k < users_; ++k) {
        for (std::size_t i = 0; i < block_; ++i) {
            a(k * block_ + i, k) = entry(k, i);
        }
    }
    return a;
}

CMat AnalogPrecoder::matrix_f() const
{
    CMat f = matrix_a();
    const double s = std::sqrt(static_cast<double>(block_));
    for (std::size_t r = 0; r < f.rows(); ++r) {
        for (auto& v : f.row(r)) {
            v *= s;
        }
    }
    return f;
}

double AnalogPrecoder::f_norm(const CVec& w) const
{
    if (w.size() != users_) {
        throw DimensionError("f_norm: digital vector has length " + std::to_string(w.size()) + ", expected " +
                             std::to_string(users_));
    }
    double s = 0.0;
    for (std::size_t k = 0; k < users_; ++k) {
        s += std::norm(w[k]) * f_col_norm_sq_[k];
    }
    return std::sqrt(s);
}

AnalogPrecoder build_analog_precoder(const CMat& h, Bits b1)
{
    const std::size_t k_users = h.rows();
    check_array_shape(h.cols(), k_users);
    const std::size_t n = h.cols() / k_users;

    std::vector<QuantizedPhase> phases;
    phases.reserve(h.cols());
    std::size_t undefined = 0;
    for (std::size_t k = 0; k < k_users; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            // h(k, .) stores h_k^H; the coefficient h_{k,i} is its conjugate.
            const cplx coeff = std::conj(h(k, k * n + i));
            if (coeff == cplx{}) {
                ++undefined;
            }
            phases.push_back(quantize_phase(coeff, b1));
        }
    }
    return AnalogPrecoder(k_users, n, b1, std::move(phases), undefined);
}

CVec EffectiveChannel::user_vector(std::size_t k) const
{
    CVec v(g.cols());
    for (std::size_t i = 0; i < g.cols(); ++i) {
        v[i] = std::conj(g(k, i));
    }
    return v;
}

double EffectiveChannel::row_norm_sq(std::size_t k) const
{
    double s = 0.0;
    for (const auto& v : g.row(k)) {
        s += std::norm(v);
    }
    return s;
}

EffectiveChannel effective_channel(const CMat& h, const AnalogPrecoder& a)
{
    if (h.rows() != a.users() || h.cols() != a.antennas()) {
        throw DimensionError("effective_channel: channel is " + std::to_string(h.rows()) + "x" +
                             std::to_string(h.cols()) + " but precoder expects " + std::to_string(a.users()) + "x" +
                             std::to_string(a.antennas()));
    }
    const std::size_t k_users = a.users();
    const std::size_t n = a.block_size();
    EffectiveChannel out{CMat(k_users, k_users)};
    for (std::size_t r = 0; r < k_users; ++r) {
        const auto hrow = h.row(r);
        for (std::size_t c = 0; c < k_users; ++c) {
            cplx s{};
            for (std::size_t i = 0; i < n; ++i) {
                s += hrow[c * n + i] * a.entry(c, i);
            }
            out.g(r, c) = s;
        }
    }
    return out;
}

EffectiveCorrelation correlation_matrix(std::size_t k, std::size_t users, std::size_t block, Bits b1)
{
    if (users == 0 || block == 0 || k >= users) {
        throw ConfigError("correlation_matrix: need 0 <= k < K and N >= 1");
    }
    EffectiveCorrelation r;
    r.user = k;
    r.users = users;
    r.block = block;
    r.delta = phase_error_halfwidth(b1);
    r.sinc_delta = sinc(r.delta);

    const double n = static_cast<double>(block);
    const double s2 = r.sinc_delta * r.sinc_delta;
    const double co = r.sinc_delta * std::cos(r.delta);
    r.w1 = (1.0 + co) / 2.0 - std::numbers::pi * s2 / 4.0;
    r.w2 = (1.0 - co) / 2.0;
    r.diag.assign(users, 1.0 / n);
    r.diag[k] = std::numbers::pi * s2 / 4.0 + 1.0 / n - std::numbers::pi * s2 / (4.0 * n);
    return r;
}

FeedbackCodebook::FeedbackCodebook(std::size_t dim, std::vector<cplx> words) : dim_(dim), words_(std::move(words))
{
    if (dim_ == 0 || words_.size() % dim_ != 0) {
        throw DimensionError("FeedbackCodebook: storage is not a whole number of codewords");
    }
}

FeedbackCodebook generate_codebook(RngStream& stream, std::size_t users, Bits b2, const EffectiveCorrelation& r)
{
    if (b2.is_infinite()) {
        return {};
    }
    if (b2.value() < 1) {
        throw ConfigError("feedback resolution must be at least 1 bit or inf");
    }
    if (b2.value() > kMaxFeedbackBits) {
        throw ResourceLimitError("feedback codebook of 2^" + std::to_string(b2.value()) +
                                 " entries exceeds the 2^20 limit");
    }
    if (r.diag.size() != users) {
        throw DimensionError("generate_codebook: correlation is " + std::to_string(r.diag.size()) +
                             "-dimensional, expected " + std::to_string(users));
    }

    std::vector<double> root(users);
    for (std::size_t i = 0; i < users; ++i) {
        root[i] = std::sqrt(r.diag[i]);
    }
    const std::size_t count = std::size_t{1} << b2.value();
    std::vector<cplx> words(count * users);
    for (std::size_t w = 0; w < count; ++w) {
        cplx* c = words.data() + w * users;
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < users; ++i) {
            c[i] = root[i] * stream.cgauss();
            norm_sq += std::norm(c[i]);
        }
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (std::size_t i = 0; i < users; ++i) {
            c[i] *= inv;
        }
    }
    return FeedbackCodebook(users, std::move(words));
}

QuantizedFeedback quantize_effective_channel(const CVec& g, const FeedbackCodebook& codebook)
{
    const double gnorm = g.norm();
    if (!(gnorm > 0.0)) {
        throw DegenerateChannelError("cannot quantize a zero effective channel");
    }
    if (codebook.perfect()) {
        CVec c(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            c[i] = g[i] / gnorm;
        }
        return {std::move(c), QuantizedFeedback::kPerfect};
    }
    if (codebook.dimension() != g.size()) {
        throw DimensionError("quantize_effective_channel: channel length " + std::to_string(g.size()) +
                             " vs codeword length " + std::to_string(codebook.dimension()));
    }

    std::size_t best = 0;
    double best_score = -1.0;
    for (std::size_t w = 0; w < codebook.size(); ++w) {
        const double s = std::norm(dot(g.span(), codebook.word(w)));
        if (s > best_score) {
            best_score = s;
            best = w;
        }
    }
    const auto word = codebook.word(best);
    CVec c(word.size());
    std::copy(word.begin(), word.end(), c.begin());
    return {std::move(c), best};
}

std::string_view to_string(DigitalScheme scheme) noexcept
{
    switch (scheme) {
    case DigitalScheme::identity:
        return "identity";
    case DigitalScheme::mrt:
        return "mrt";
    case DigitalScheme::zf:
        return "zf";
    }
    return "unknown";
}

DigitalPrecoder mrt_precoder(const CMat& ghat, FeedbackMode mode)
{
    if (ghat.rows() != ghat.cols()) {
        throw DimensionError("mrt_precoder: feedback matrix must be K x K");
    }
    return {ghat, DigitalScheme::mrt, mode, false};
}

DigitalPrecoder zf_precoder(const CMat& ghat, const AnalogPrecoder& analog, FeedbackMode mode)
{
    const std::size_t k_users = ghat.rows();
    if (ghat.cols() != k_users || analog.users() != k_users) {
        throw DimensionError("zf_precoder: feedback matrix must be K x K with K matching the analog precoder");
    }
    const CMat gram = ghat.adjoint() * ghat;
    const CMat eye = CMat::identity(k_users);

    DigitalPrecoder out{CMat(), DigitalScheme::zf, mode, false};
    CMat inv;
    try {
        inv = hermitian_solve(gram, eye);
    } catch (const SingularMatrixError&) {
        double trace = 0.0;
        for (std::size_t i = 0; i < k_users; ++i) {
            trace += gram(i, i).real();
        }
        CMat loaded_gram = gram;
        const double load = kZfDiagonalLoading * trace / static_cast<double>(k_users);
        for (std::size_t i = 0; i < k_users; ++i) {
            loaded_gram(i, i) += load;
        }
        inv = hermitian_solve(loaded_gram, eye);
        out.loaded = true;
    }

    out.w = ghat * inv;
    for (std::size_t c = 0; c < k_users; ++c) {
        const double norm = analog.f_norm(out.w.column(c));
        for (std::size_t r = 0; r < k_users; ++r) {
            out.w(r, c) /= norm;
        }
    }
    return out;
}

DigitalPrecoder identity_precoder(std::size_t users)
{
    return {CMat::identity(users), DigitalScheme::identity, FeedbackMode::perfect, false};
}

}  // namespace hybridmimo
