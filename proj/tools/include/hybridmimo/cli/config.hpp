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

#ifndef HYBRIDMIMO_CLI_CONFIG_HPP
#define HYBRIDMIMO_CLI_CONFIG_HPP

#include <istream>
#include <map>
#include <string>

namespace hybridmimo::cli {

// Flat "key = value" settings. Keys are flag names without the leading
// dashes; '#' starts a comment. Throws ConfigError on malformed lines or
// duplicate keys.
using KeyValues = std::map<std::string, std::string>;

KeyValues parse_key_values(std::istream& in, const std::string& origin = "config");
KeyValues load_config_file(const std::string& path);

}  // namespace hybridmimo::cli

#endif
