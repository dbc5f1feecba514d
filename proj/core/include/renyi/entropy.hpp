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
#include <span>
#include <string>
#include <vector>

#include "renyi/distribution.hpp"

namespace renyi {

struct EvalConfig {
  double base = 2.0;         // logarithm base b > 1
  double eps = 1e-8;         // target absolute error radius
  std::uint64_t term_budget = kDefaultTermBudget;
  double alpha_one_window = 1e-6;

  /// Throws Error(kInvalidArgument) on b <= 1, eps <= 0 or a negative window.
  void validate() const;
};

/// Finite(value, radius) in log-base-b units, or +inf.
class EntropyValue {
 public:
  static EntropyValue finite(double value, double radius);
  static EntropyValue infinite();

  bool is_finite() const { return finite_; }
  double value() const;   // +inf when infinite
  double radius() const;  // 0 when infinite
  Interval enclosure() const;

  /// "value ± radius [base b]" or "inf".
  std::string to_string(double base) const;

 private:
  EntropyValue(bool finite, double value, double radius)
      : finite_(finite), value_(value), radius_(radius) {}

  bool finite_ = false;
  double value_ = 0.0;
  double radius_ = 0.0;
};

/// Enclosure of sum_n p_n^alpha of width <= tol (alpha > 0, or alpha == 0
/// with finite support).
Interval power_sum(const TailedDistribution& p, double alpha, double tol,
                   std::uint64_t budget = kDefaultTermBudget);

/// Enclosure of -sum_n p_n ln p_n in nats, of width <= tol.
Interval shannon_sum(const TailedDistribution& p, double tol,
                     std::uint64_t budget = kDefaultTermBudget);

/// H_alpha for alpha >= 0, alpha != 1 (alpha = +inf gives the min-entropy).
/// Divergence is decided by the convergence region, never numerically.
/// Throws kAlphaNearOne when |alpha - 1| < cfg.alpha_one_window and
/// kBudgetExceeded when the radius cannot be brought under cfg.eps.
EntropyValue renyi_entropy(const TailedDistribution& p, double alpha, const EvalConfig& cfg);

EntropyValue shannon_entropy(const TailedDistribution& p, const EvalConfig& cfg);

/// -log_b max_n p_n.
EntropyValue min_entropy(const TailedDistribution& p, const EvalConfig& cfg);

/// Dispatches on alpha: +inf to min_entropy, the window around 1 to
/// shannon_entropy, anything else to renyi_entropy.
EntropyValue entropy_at(const TailedDistribution& p, double alpha, const EvalConfig& cfg);

struct LimitProbe {
  std::vector<double> alphas;
  std::vector<EntropyValue> values;
  EntropyValue shannon = EntropyValue::infinite();
  // Values are non-decreasing as alpha decreases, within combined radii.
  bool monotone = true;
  // Every value is <= H(P) within its radius (only meaningful when H(P) < inf).
  bool bounded_by_shannon = true;
  // Some value exceeds the divergence bound (reported when H(P) = inf).
  bool exceeds_bound = false;
  // H(P) - H_alpha at the last schedule point; +inf when H(P) = inf.
  double final_gap = 0.0;
};

/// Evaluates H_alpha along a schedule decreasing to 1 from above.
LimitProbe limit_alpha_to_one_plus(const TailedDistribution& p, const EvalConfig& cfg,
                                   std::span<const double> schedule,
                                   double divergence_bound = 20.0);

/// The schedule 1 + 2^-k for k = 1..count.
std::vector<double> dyadic_schedule(int count);

/// prod_n p_n^p_n = b^-H(P). Throws kRegionError when H(P) = inf.
Interval product_form(const TailedDistribution& p, const EvalConfig& cfg);

}  // namespace renyi
