// Copyright 2026 The Renyi-Inf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "renyi/distribution.hpp"
#include "renyi/entropy.hpp"

namespace renyi::cli {

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a:b:step" (inclusive) or a comma list; "inf" is accepted as a value.
std::vector<double> parse_grid(const std::string& text);
std::vector<std::int64_t> parse_index_grid(const std::string& text);

/// Header alpha,value,radius,divergent; one row per grid point in order.
/// Points within the configured window of 1 use the Shannon entropy.
std::string emit_sweep_csv(const TailedDistribution& p, std::span<const double> grid,
                           const EvalConfig& cfg);

}  // namespace renyi::cli
