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

#include "hybridmimo/cli/config.hpp"

#include <fstream>
#include <string_view>

#include "hybridmimo/errors.hpp"

namespace hybridmimo::cli {

namespace {

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

}  // namespace

KeyValues parse_key_values(std::istream& in, const std::string& origin)
{
    KeyValues out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        const std::string body = trim(std::string_view(line).substr(0, hash));
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        const std::string where = origin + ":" + std::to_string(lineno);
        if (eq == std::string::npos) {
            throw ConfigError(where + ": expected key = value");
        }
        std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        if (key.rfind("--", 0) == 0) {
            key.erase(0, 2);
        }
        if (key.empty()) {
            throw ConfigError(where + ": empty key");
        }
        if (!out.emplace(key, value).second) {
            throw ConfigError(where + ": duplicate key '" + key + "'");
        }
    }
    return out;
}

KeyValues load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    return parse_key_values(in, path);
}

}  // namespace hybridmimo::cli
