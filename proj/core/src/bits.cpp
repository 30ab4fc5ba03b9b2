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

#include "hybridmimo/bits.hpp"

#include <charconv>

#include "hybridmimo/errors.hpp"

namespace hybridmimo {

int Bits::value() const
{
    if (is_infinite()) {
        throw ConfigError("Bits::value() called on an infinite resolution");
    }
    return value_;
}

Bits Bits::parse(std::string_view text)
{
    if (text == "inf") {
        return infinite();
    }
    int v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end || v < 0) {
        throw ConfigError("invalid bit count '" + std::string(text) + "' (expected a non-negative integer or 'inf')");
    }
    return Bits(v);
}

std::string Bits::to_string() const
{
    return is_infinite() ? std::string("inf") : std::to_string(value_);
}

}  // namespace hybridmimo
