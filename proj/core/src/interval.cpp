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

#include "renyi/interval.hpp"

#include <ostream>

#include "renyi/error.hpp"

namespace renyi {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kBudgetExceeded: return "budget-exceeded";
    case ErrorKind::kAlphaNearOne: return "alpha-near-one";
    case ErrorKind::kImpossibleNormalization: return "impossible-normalization";
    case ErrorKind::kInvalidWeights: return "invalid-weights";
    case ErrorKind::kInvalidDonor: return "invalid-donor";
    case ErrorKind::kBelowN0: return "below-n0";
    case ErrorKind::kRegionError: return "region-error";
    case ErrorKind::kParseError: return "parse-error";
  }
  return "unknown";
}

Interval widen(Interval x, double rel_slop) {
  const double dl = std::abs(x.lo) * rel_slop + std::numeric_limits<double>::denorm_min();
  const double dh = std::abs(x.hi) * rel_slop + std::numeric_limits<double>::denorm_min();
  return {round_down(x.lo - dl), round_up(x.hi + dh)};
}

Interval operator+(Interval a, Interval b) {
  return {round_down(a.lo + b.lo), round_up(a.hi + b.hi)};
}

Interval operator-(Interval a, Interval b) {
  return {round_down(a.lo - b.hi), round_up(a.hi - b.lo)};
}

Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

Interval operator*(Interval a, Interval b) {
  const double p1 = a.lo * b.lo;
  const double p2 = a.lo * b.hi;
  const double p3 = a.hi * b.lo;
  const double p4 = a.hi * b.hi;
  return {round_down(std::min({p1, p2, p3, p4})),
          round_up(std::max({p1, p2, p3, p4}))};
}

Interval operator/(Interval a, Interval b) {
  if (b.lo <= 0.0 && b.hi >= 0.0) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan};
  }
  const double q1 = a.lo / b.lo;
  const double q2 = a.lo / b.hi;
  const double q3 = a.hi / b.lo;
  const double q4 = a.hi / b.hi;
  return {round_down(std::min({q1, q2, q3, q4})),
          round_up(std::max({q1, q2, q3, q4}))};
}

Interval hull(Interval a, Interval b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Interval log(Interval x) {
  return widen({std::log(x.lo), std::log(x.hi)}, kLibmSlop);
}

Interval exp(Interval x) {
  Interval r = widen({std::exp(x.lo), std::exp(x.hi)}, kLibmSlop);
  r.lo = std::max(r.lo, 0.0);
  return r;
}

Interval pow(Interval x, double p) {
  const double a = std::pow(std::max(x.lo, 0.0), p);
  const double b = std::pow(std::max(x.hi, 0.0), p);
  Interval r = widen({std::min(a, b), std::max(a, b)}, kLibmSlop);
  r.lo = std::max(r.lo, 0.0);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  return os << '[' << x.lo << ", " << x.hi << ']';
}

}  // namespace renyi
