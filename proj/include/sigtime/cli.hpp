// Copyright 2026 The sigtime Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sigtime/relay_rates.hpp"

namespace sigtime::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitModuleError = 1;
inline constexpr int kExitUsage = 2;

// Flat "key = value" text; '#' starts a comment. Keys are the scenario field
// names: P (linear), d, a, kappa, alpha, B, ntr, bits_per_pulse_pair,
// geometry_mode (direct_d | paper_formula), cross_term (sd1 | sd2).
// Values found in the text override `base`.
ScenarioConfig parse_scenario_config(std::string_view text, ScenarioConfig base = {});

// Runs one command line (args excludes the program name). Results go to the
// file named by --csv/--out when given, otherwise to `out`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigtime::cli
