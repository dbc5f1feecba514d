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

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "renyi/distribution.hpp"

namespace renyi {

/// The set of alpha >= 0 with H_alpha(P) < inf: [alpha_c, inf) when the
/// boundary is included, (alpha_c, inf) otherwise.
struct ConvergenceRegion {
  double alpha_c = 0.0;
  bool includes_boundary = true;

  bool contains(double alpha) const;
  /// True when alpha coincides with alpha_c up to rounding.
  bool at_boundary(double alpha) const;
  /// "(a, inf)" or "[a, inf)".
  std::string to_string() const;

  friend bool operator==(const ConvergenceRegion&, const ConvergenceRegion&) = default;
};

// Classification is symbolic: it reads the tail law's parameters only, so
// the prefix never matters.
ConvergenceRegion critical_exponent(const TailLaw& tail);
ConvergenceRegion critical_exponent(const TailedDistribution& p);

/// Region of a convex combination: the intersection of the parts.
ConvergenceRegion intersect(std::span<const ConvergenceRegion> regions);

/// True iff the tails are asymptotically equivalent (p_n / q_n tends to a
/// positive finite limit): same law with the same decay parameters. Scale
/// constants and start indices are ignored.
bool same_region(const TailedDistribution& p, const TailedDistribution& q);

/// Pointwise convex combination sum_k w_k P_k.
class Mixture {
 public:
  Mixture(std::vector<double> weights, std::vector<TailedDistribution> components);

  std::span<const double> weights() const { return weights_; }
  std::span<const TailedDistribution> components() const { return components_; }

  double pmf(std::int64_t n) const;
  MassEnclosure tail_mass(std::int64_t n0, double eps) const;
  const ConvergenceRegion& region() const { return region_; }

 private:
  std::vector<double> weights_;
  std::vector<TailedDistribution> components_;
  ConvergenceRegion region_;
};

/// Throws Error(kInvalidWeights) unless every weight is > 0 and they sum to
/// 1 within 1e-9.
Mixture mixture(std::vector<std::pair<double, TailedDistribution>> parts);

/// Falsification aid for divergence: whether sum_{n <= terms} p_n^alpha
/// exceeds `bound`. Not a proof either way.
bool partial_sums_exceed(const std::function<double(std::int64_t)>& pmf, double alpha,
                         double bound, std::int64_t terms);

}  // namespace renyi
