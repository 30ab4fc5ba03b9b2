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

#include "hybridmimo/cli/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "hybridmimo/errors.hpp"

namespace hybridmimo::cli {

namespace {

constexpr std::size_t kMaxGridPoints = 100000;

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::string format_double(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    if (x == 0.0) {
        x = 0.0;  // drop the sign of -0
    }
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        out.emplace_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

double parse_real(std::string_view text, std::string_view what)
{
    const std::string_view t = trim(text);
    double v = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc{} || res.ptr != t.data() + t.size()) {
        throw ConfigError(std::string(what) + ": '" + std::string(text) + "' is not a number");
    }
    return v;
}

long long parse_integer(std::string_view text, std::string_view what)
{
    const std::string_view t = trim(text);
    long long v = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc{} || res.ptr != t.data() + t.size()) {
        throw ConfigError(std::string(what) + ": '" + std::string(text) + "' is not an integer");
    }
    return v;
}

std::vector<double> parse_db_grid(std::string_view text)
{
    const std::string_view t = trim(text);
    if (t.empty()) {
        throw ConfigError("SNR grid is empty");
    }
    std::vector<double> out;
    if (t.find(':') != std::string_view::npos) {
        const auto parts = split(t, ':');
        if (parts.size() != 3) {
            throw ConfigError("SNR grid '" + std::string(t) + "' must be start:stop:step");
        }
        const double start = parse_real(parts[0], "SNR grid start");
        const double stop = parse_real(parts[1], "SNR grid stop");
        const double step = parse_real(parts[2], "SNR grid step");
        if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step) || step == 0.0 ||
            (stop - start) / step < 0.0) {
            throw ConfigError("SNR grid '" + std::string(t) + "' has a zero step or points away from stop");
        }
        const double span = (stop - start) / step;
        // Tolerance lets "0:1:0.1" include its end point.
        const double count = std::floor(span + 1e-9) + 1.0;
        if (count > static_cast<double>(kMaxGridPoints)) {
            throw ConfigError("SNR grid '" + std::string(t) + "' has too many points");
        }
        for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i) {
            out.push_back(start + static_cast<double>(i) * step);
        }
        return out;
    }
    for (const auto& item : split(t, ',')) {
        const double v = parse_real(item, "SNR value");
        if (!std::isfinite(v)) {
            throw ConfigError("SNR values must be finite");
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace hybridmimo::cli
