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

#include <string>
#include <string_view>

#include "renyi/distribution.hpp"

namespace renyi {

/// Parses the distribution literal
///
///   prefix = [m1, m2, ...]; tail = <law>
///
/// where <law> is one of
///
///   geometric(B, q, start) | power(c, beta, start)
///   | logpower(c, beta, gamma, start) | none
///
/// Either clause may be omitted (a bare law means an empty prefix). The
/// scale B or c may be written as `c` or `auto` to request normalization,
/// a ratio q may be written `1-w`, masses accept `a/b` fractions, and a
/// missing start defaults to one past the prefix.
TailedDistribution parse_distribution(std::string_view text,
                                      double tolerance = kDefaultMassTolerance);

/// Inverse of parse_distribution with round-trip precision.
std::string format_distribution(const TailedDistribution& p);
std::string format_tail(const TailLaw& tail);

}  // namespace renyi
