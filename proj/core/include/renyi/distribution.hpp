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
#include <variant>
#include <vector>

#include "renyi/interval.hpp"

namespace renyi {

/// Certified enclosure of a (sum of) probability mass.
using MassEnclosure = Interval;

inline constexpr double kDefaultMassTolerance = 1e-9;
inline constexpr std::uint64_t kDefaultTermBudget = 100'000'000;

struct FiniteSupport {
  friend bool operator==(const FiniteSupport&, const FiniteSupport&) = default;
};

/// p_n = B q^(n - start). The complement w = 1 - q is stored separately so
/// ratios indistinguishable from 1 in double precision stay exact.
struct GeometricTail {
  double first_mass = 0.5;  // B
  double ratio = 0.5;       // q
  double complement = 0.5;  // 1 - q
  std::int64_t start = 1;

  static GeometricTail with_ratio(double first_mass, double ratio, std::int64_t start);
  static GeometricTail with_complement(double first_mass, double complement,
                                       std::int64_t start);

  double log_ratio() const;  // ln q, accurate for q near 1

  friend bool operator==(const GeometricTail&, const GeometricTail&) = default;
};

/// p_n = c n^-beta.
struct PowerTail {
  double scale = 1.0;
  double beta = 2.0;
  std::int64_t start = 1;

  friend bool operator==(const PowerTail&, const PowerTail&) = default;
};

/// p_n = c n^-beta (ln n)^-gamma with natural log, start >= 2.
struct LogPowerTail {
  double scale = 1.0;
  double beta = 1.0;
  double gamma = 2.0;
  std::int64_t start = 2;

  friend bool operator==(const LogPowerTail&, const LogPowerTail&) = default;
};

using TailLaw = std::variant<FiniteSupport, GeometricTail, PowerTail, LogPowerTail>;

/// Throws Error(kInvalidArgument) when the law violates its parameter
/// constraints (summability, ranges, start index).
void validate(const TailLaw& tail);

bool is_finite(const TailLaw& tail);
std::int64_t tail_start(const TailLaw& tail);  // 0 for finite support
double tail_pmf(const TailLaw& tail, std::int64_t n);
/// Same law with its scale (B or c) replaced.
TailLaw with_scale(const TailLaw& tail, double scale);
TailLaw with_start(const TailLaw& tail, std::int64_t start);
double tail_scale(const TailLaw& tail);

/// A distribution over the positive integers given by explicit masses
/// p_1..p_m followed by a parametric tail law starting at some index > m
/// (the gap, if any, carries zero mass).
class TailedDistribution {
 public:
  /// Validates masses and the tail, and certifies that the total mass is 1
  /// within `tolerance`.
  static TailedDistribution make(std::vector<double> prefix, TailLaw tail,
                                 double tolerance = kDefaultMassTolerance);

  /// Convenience for finite-support distributions.
  static TailedDistribution finite(std::vector<double> masses,
                                   double tolerance = kDefaultMassTolerance);

  std::span<const double> prefix() const { return prefix_; }
  const TailLaw& tail() const { return tail_; }
  /// Enclosure of the total mass (contains 1 up to construction tolerance).
  const MassEnclosure& mass() const { return mass_; }

  bool infinite_support() const { return !is_finite(tail_); }
  /// Largest index with non-zero mass for finite support, 0 otherwise.
  std::int64_t support_end() const;
  /// Number of non-zero masses for finite support.
  std::int64_t support_size() const;

  double pmf(std::int64_t n) const;

  friend bool operator==(const TailedDistribution&, const TailedDistribution&) = default;

 private:
  TailedDistribution() = default;

  std::vector<double> prefix_;
  TailLaw tail_ = FiniteSupport{};
  MassEnclosure mass_{1.0};
};

/// p_n; 0 outside the support. Requires n >= 1.
double pmf(const TailedDistribution& p, std::int64_t n);

/// Enclosure of sum_{n >= n0} p_n of width <= eps.
MassEnclosure tail_mass(const TailedDistribution& p, std::int64_t n0, double eps,
                        std::uint64_t budget = kDefaultTermBudget);

/// Rescales the tail's scale so that the total mass is 1 within eps.
TailedDistribution normalize(std::vector<double> prefix, TailLaw tail, double eps,
                             std::uint64_t budget = kDefaultTermBudget);

/// Enclosure of sum_n |p_n - q_n| (full l1 distance, no 1/2 factor).
MassEnclosure total_variation(const TailedDistribution& p, const TailedDistribution& q,
                              double eps, std::uint64_t budget = kDefaultTermBudget);

/// Term families summed over a tail law.
enum class TermKind {
  kMass,     // p_n
  kPower,    // p_n^alpha
  kEntropy,  // -p_n ln p_n (nats)
};

/// Enclosure of sum_{n >= from} term(p_n) over the tail law only, of width
/// <= tol. `from` must be >= tail_start(tail).
Interval tail_law_sum(const TailLaw& tail, std::int64_t from, TermKind kind, double alpha,
                      double tol, std::uint64_t budget = kDefaultTermBudget);

}  // namespace renyi
