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

#ifndef HYBRIDMIMO_CHANNEL_HPP
#define HYBRIDMIMO_CHANNEL_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hybridmimo/numerics.hpp"

namespace hybridmimo {

enum class ChannelModel { rayleigh, mmwave };

std::string_view to_string(ChannelModel model) noexcept;

// Geometric channel: N_p paths with CN(0,1) gains and angles of departure drawn
// uniformly from [0, 2pi), half-wavelength ULA at the base station.
struct MmWaveParams {
    std::size_t paths = 10;
};

// One downlink channel draw.
//
// Row k of h is h_k^H (the channel from the M base-station antennas to user k),
// so the k-th user's channel coefficient on antenna i is h_{k,i} = conj(h(k, i)).
// beta holds power-domain path losses; it enters the SINR linearly.
struct ChannelRealization {
    CMat h;
    std::vector<double> beta;
    ChannelModel model = ChannelModel::rayleigh;

    std::size_t users() const noexcept { return h.rows(); }
    std::size_t antennas() const noexcept { return h.cols(); }
};

// Throws ConfigError unless M >= K >= 1 and K divides M.
void check_array_shape(std::size_t m, std::size_t k);

// i.i.d. CN(0,1) entries; beta initialised to 1.
ChannelRealization sample_rayleigh(RngStream& stream, std::size_t m, std::size_t k);

// Half-wavelength ULA response (1/sqrt(M)) [1, e^{j pi sin phi}, ..., e^{j pi (M-1) sin phi}].
CVec ula_response(std::size_t m, double phi);

// sqrt(M/N_p) * sum_l gains[l] * a^H(angles[l]), i.e. one row h_k^H of the geometric model.
CVec mmwave_row(std::size_t m, std::span<const cplx> gains, std::span<const double> angles);

// Geometric model; per user, the N_p (gain, angle) pairs are drawn in path order.
ChannelRealization sample_mmwave(RngStream& stream, std::size_t m, std::size_t k, const MmWaveParams& params);

// K i.i.d. Uniform[lo, hi] path losses. Throws ConfigError unless 0 < lo <= hi.
std::vector<double> sample_pathloss(RngStream& stream, std::size_t k, double lo, double hi);

}  // namespace hybridmimo

#endif
