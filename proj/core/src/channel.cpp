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

#include "hybridmimo/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hybridmimo/errors.hpp"

namespace hybridmimo {

std::string_view to_string(ChannelModel model) noexcept
{
    switch (model) {
    case ChannelModel::rayleigh:
        return "rayleigh";
    case ChannelModel::mmwave:
        return "mmwave";
    }
    return "unknown";
}

void check_array_shape(std::size_t m, std::size_t k)
{
    if (k == 0 || m < k) {
        throw ConfigError("need M >= K >= 1 (got M=" + std::to_string(m) + ", K=" + std::to_string(k) + ")");
    }
    if (m % k != 0) {
        throw ConfigError("M=" + std::to_string(m) + " is not divisible by K=" + std::to_string(k) +
                          "; each RF chain needs an equal antenna block");
    }
}

ChannelRealization sample_rayleigh(RngStream& stream, std::size_t m, std::size_t k)
{
    check_array_shape(m, k);
    ChannelRealization out{CMat(k, m), std::vector<double>(k, 1.0), ChannelModel::rayleigh};
    for (std::size_t r = 0; r < k; ++r) {
        for (auto& v : out.h.row(r)) {
            v = stream.cgauss();
        }
    }
    return out;
}

CVec ula_response(std::size_t m, double phi)
{
    CVec a(m);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    const double step = std::numbers::pi * std::sin(phi);
    for (std::size_t i = 0; i < m; ++i) {
        a[i] = std::polar(scale, step * static_cast<double>(i));
    }
    return a;
}

CVec mmwave_row(std::size_t m, std::span<const cplx> gains, std::span<const double> angles)
{
    if (gains.size() != angles.size() || gains.empty()) {
        throw ConfigError("mmwave_row: need matching, non-empty gain and angle lists");
    }
    const double prefactor = std::sqrt(static_cast<double>(m) / static_cast<double>(gains.size()));
    CVec row(m);
    for (std::size_t l = 0; l < gains.size(); ++l) {
        const CVec a = ula_response(m, angles[l]);
        for (std::size_t i = 0; i < m; ++i) {
            row[i] += gains[l] * std::conj(a[i]);
        }
    }
    for (auto& v : row) {
        v *= prefactor;
    }
    return row;
}

ChannelRealization sample_mmwave(RngStream& stream, std::size_t m, std::size_t k, const MmWaveParams& params)
{
    check_array_shape(m, k);
    if (params.paths == 0) {
        throw ConfigError("mmWave channel needs at least one propagation path");
    }
    ChannelRealization out{CMat(k, m), std::vector<double>(k, 1.0), ChannelModel::mmwave};
    std::vector<cplx> gains(params.paths);
    std::vector<double> angles(params.paths);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t l = 0; l < params.paths; ++l) {
            gains[l] = stream.cgauss();
            angles[l] = stream.uniform(0.0, 2.0 * std::numbers::pi);
        }
        const CVec row = mmwave_row(m, gains, angles);
        std::copy(row.begin(), row.end(), out.h.row(r).begin());
    }
    return out;
}

std::vector<double> sample_pathloss(RngStream& stream, std::size_t k, double lo, double hi)
{
    if (!(lo > 0.0) || !(hi >= lo)) {
        throw ConfigError("path-loss interval must satisfy 0 < lo <= hi (got [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "])");
    }
    std::vector<double> beta(k);
    for (auto& b : beta) {
        b = stream.uniform(lo, hi);
    }
    return beta;
}

}  // namespace hybridmimo
