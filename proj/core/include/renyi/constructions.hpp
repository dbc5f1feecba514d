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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "renyi/distribution.hpp"
#include "renyi/entropy.hpp"

namespace renyi {

/// Replaces the tail of `p` from index n0 on by the tail of `donor`.
/// Infinite-support p: the donor tail is rescaled to carry exactly the
/// removed mass. Finite-support p (n0 beyond its support): the donor's own
/// masses from n0 on are grafted and the same total is taken off p
/// proportionally to its masses.
TailedDistribution splice_at(const TailedDistribution& p, const TailedDistribution& donor,
                             std::int64_t n0, std::uint64_t budget = kDefaultTermBudget);

/// A distribution within l1 distance eps of p whose convergence region is
/// that of `donor`. Throws kInvalidDonor when the donor has finite support.
TailedDistribution splice_to_gamma(const TailedDistribution& p, const TailedDistribution& donor,
                                   double eps, std::uint64_t budget = kDefaultTermBudget);

/// Left side of the shift equation in the complement w = 1 - q:
/// phi(w) = w^alpha / (1 - (1-w)^alpha), decreasing in w on (0, 1].
double shift_phi(double alpha, double w);

struct ShiftSolution {
  std::int64_t n = 0;        // prefix length kept
  double B = 0.0;            // first mass of the geometric tail
  double q = 0.0;            // its ratio
  double complement = 0.0;   // 1 - q, stored separately
  double h = 0.0;            // target value (power sum, or Shannon sum in nats)
  double residual = 0.0;     // |achieved - h| in the same space
  double tail_mass = 0.0;    // mass replaced by the geometric tail
  int iterations = 0;
  bool bracket_held = true;  // the bisection bracket straddled the target throughout
  TailedDistribution distribution = TailedDistribution::finite({1.0});
};

/// Keeps p_1..p_n and attaches a geometric tail carrying the remaining mass,
/// chosen so that H_alpha of the result is H_alpha(p) + r (alpha in (0,1)).
/// Finite-support p (n at least its support end) is first scaled by 1 - 2^-n
/// to make room for the tail.
ShiftSolution solve_shift(const TailedDistribution& p, double alpha, double r, std::int64_t n,
                          const EvalConfig& cfg);

/// Same construction with the Shannon entropy as target.
ShiftSolution solve_shannon_shift(const TailedDistribution& p, double r, std::int64_t n,
                                  const EvalConfig& cfg);

/// Smallest admissible prefix length for solve_shift.
std::int64_t find_n0(const TailedDistribution& p, double alpha, double r, const EvalConfig& cfg,
                     std::int64_t n_max = 100000);

/// Smallest admissible prefix length for solve_shannon_shift.
std::int64_t find_shannon_n0(const TailedDistribution& p, double r, const EvalConfig& cfg,
                             std::int64_t n_max = 1000);

/// count distributions P_n converging to p in l1 with H_alpha(P_n) = H_alpha(p) + r.
/// r = +inf splices in tails whose critical exponent exceeds alpha; the
/// default donor is a power law with beta = 2 / (1 + alpha).
std::vector<TailedDistribution> shift_sequence(
    const TailedDistribution& p, double alpha, double r, int count, const EvalConfig& cfg,
    const std::optional<TailedDistribution>& donor = std::nullopt);

/// (p_1, ..., p_{n-1}, sum_{i >= n} p_i). Requires n >= 2.
TailedDistribution truncate_distribution(const TailedDistribution& p, std::int64_t n,
                                         std::uint64_t budget = kDefaultTermBudget);

struct GapReport {
  double r = 0.0;
  std::vector<double> alphas;
  std::vector<std::int64_t> ns;
  std::vector<std::vector<EntropyValue>> table;  // table[i][j] = H_{alphas[j]}(P_{ns[i]})
  std::vector<EntropyValue> row_limits;          // H(P_n), the alpha -> 1+ limit of each row
  std::vector<EntropyValue> base_renyi;          // H_alpha(P) for each alpha
  EntropyValue base_shannon = EntropyValue::infinite();
  double inner_then_outer = 0.0;  // lim_n lim_alpha, estimated by H(P_n) at the last n
  double outer_then_inner = 0.0;  // lim_alpha lim_n, estimated by H_alpha(P) at the last alpha
  double column_deviation = 0.0;  // max_j |H_alpha_j(P_last) - H_alpha_j(P)|
};

/// Tabulates H_alpha(P_n) for the Shannon-shift sequence of p (r = +inf
/// uses log-power tails with beta = 1, gamma = 2) and estimates both iterated
/// limits. alphas must decrease to 1 from above.
GapReport interchange_gap_demo(const TailedDistribution& p, double r,
                               std::span<const double> alphas,
                               std::span<const std::int64_t> ns, const EvalConfig& cfg);

/// Rows = n, columns = alpha; followed by "# key,value" summary lines.
std::string gap_report_csv(const GapReport& report);

}  // namespace renyi
