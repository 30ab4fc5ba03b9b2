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

#ifndef HYBRIDMIMO_CLI_FORMAT_HPP
#define HYBRIDMIMO_CLI_FORMAT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace hybridmimo::cli {

// Shortest decimal that parses back to exactly x; "inf", "-inf", "nan" otherwise.
std::string format_double(double x);

// Parses "start:stop:step" (stop included when it lands on the grid), a
// comma-separated list, or a single value. Throws ConfigError.
std::vector<double> parse_db_grid(std::string_view text);

// Strict full-string numeric parsing. Throws ConfigError naming `what`.
double parse_real(std::string_view text, std::string_view what);
long long parse_integer(std::string_view text, std::string_view what);

// Splits on `sep`, trimming blanks around each item.
std::vector<std::string> split(std::string_view text, char sep);

}  // namespace hybridmimo::cli

#endif
