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

#ifndef HYBRIDMIMO_BITS_HPP
#define HYBRIDMIMO_BITS_HPP

#include <compare>
#include <limits>
#include <string>
#include <string_view>

namespace hybridmimo {

// Quantizer resolution in bits, or "inf" for an unquantized (perfect) path.
class Bits {
public:
    static constexpr Bits infinite() noexcept { return Bits(); }
    constexpr explicit Bits(int value) noexcept : value_(value) {}

    constexpr bool is_infinite() const noexcept { return value_ < 0; }
    // Bit count; must not be called on an infinite resolution.
    int value() const;
    // Bit count as a real, +inf for the infinite resolution.
    constexpr double as_real() const noexcept
    {
        return is_infinite() ? std::numeric_limits<double>::infinity() : static_cast<double>(value_);
    }

    // Accepts a non-negative integer or "inf". Throws ConfigError otherwise.
    static Bits parse(std::string_view text);
    std::string to_string() const;

    friend constexpr bool operator==(Bits, Bits) = default;

private:
    constexpr Bits() noexcept = default;
    int value_ = -1;
};

}  // namespace hybridmimo

#endif
