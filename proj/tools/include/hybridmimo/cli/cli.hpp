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

#ifndef HYBRIDMIMO_CLI_CLI_HPP
#define HYBRIDMIMO_CLI_CLI_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hybridmimo/bits.hpp"
#include "hybridmimo/simulator.hpp"

namespace hybridmimo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitResourceLimit = 3;

// Named figure setup. `arm_values` sweeps B1 or B2 on top of `base`.
struct Preset {
    enum class Arm { b1, b2 };

    std::string name;
    ScenarioConfig base;
    Arm arm = Arm::b1;
    std::vector<Bits> arm_values;
    std::string note;
};

const std::vector<Preset>& presets();
// Throws ConfigError for an unknown name.
const Preset& find_preset(std::string_view name);

// Closed-form curves selectable with `analyze --formula`.
inline constexpr std::string_view kFormulas[] = {"analog",     "analog-perfect", "mrt-approx",
                                                 "mrt-perfect", "zf-lb",          "zf-perfect"};

// Runs one invocation; args excludes the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hybridmimo::cli

#endif
