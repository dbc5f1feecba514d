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

#include "renyi/interval.hpp"

// Certified summation of slowly decaying series whose terms are drawn from
// the power-log family f(x) = x^-s (ln x)^a (ln ln x)^m, m in {0, 1}.
namespace renyi::series {

struct PowerLogTerm {
  double s = 2.0;  // power decay exponent
  double a = 0.0;  // exponent on ln x (negative means extra decay)
  int m = 0;       // 1 adds a ln ln x factor

  double operator()(double x) const;

  // True when sum_n f(n) converges (s > 1, or s == 1 and a < -1).
  bool summable() const;
};

// Smallest integer K >= 2 such that f is positive, decreasing and convex on
// [K - 1/2, inf). Derived from explicit bounds on the logarithmic factor's
// derivatives.
std::int64_t regularity_start(const PowerLogTerm& f);

// Enclosure of  int_U^inf e^{-k u} u^a (ln u)^m du  for k >= 0, U > 0
// (U >= e when m == 1). When k == 0 the closed forms require a < -1.
// The width is at most `tol` plus about 1e-13 of the value.
Interval exp_power_log_integral(double k, double a, int m, double u0, double tol);

// Enclosure of int_X^inf f(x) dx.
Interval tail_integral(const PowerLogTerm& f, double x0, double tol);

// Enclosure of sum_{n>=K} f(n) for K >= regularity_start(f) via
//   int_K f + f(K)/2  <=  sum  <=  int_K f + f(K - 1/2)/2.
Interval tail_sum(const PowerLogTerm& f, std::int64_t k, double tol);

// Width contributed by the integral-to-sum sandwich at cutoff K.
double sandwich_gap(const PowerLogTerm& f, std::int64_t k);

// Running sum of floating-point terms carrying a rigorous bound on the
// accumulated rounding error (compensated summation plus a per-term
// relative evaluation error).
class CertifiedSum {
 public:
  explicit CertifiedSum(double term_rel_error = 1e-15)
      : term_rel_error_(term_rel_error) {}

  void add(double x);
  void add(Interval x);

  double estimate() const { return sum_ + comp_; }
  Interval value() const;
  std::uint64_t count() const { return count_; }

 private:
  double term_rel_error_;
  double sum_ = 0.0;
  double comp_ = 0.0;
  double abs_sum_ = 0.0;
  double extra_lo_ = 0.0;  // interval inputs accumulate their own widths
  double extra_hi_ = 0.0;
  std::uint64_t count_ = 0;
};

// One additive piece of a tail term: scale * f(n).
struct Piece {
  double scale = 1.0;
  PowerLogTerm term;
};

// Enclosure of sum_{n >= start} term(n) where mathematically
// term(n) == sum_i pieces[i].scale * pieces[i].term(n). `term` is evaluated
// directly for the explicit part; the remainder is bracketed piecewise.
// Throws Error(kBudgetExceeded) when more than `budget` explicit terms would
// be needed to reach width `tol`.
Interval sum_series(const std::function<double(double)>& term,
                    std::span<const Piece> pieces, std::int64_t start,
                    double tol, std::uint64_t budget);

}  // namespace renyi::series
