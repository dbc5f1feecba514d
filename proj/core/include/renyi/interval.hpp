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

#include <algorithm>
#include <cmath>
#include <iosfwd>
#include <limits>

namespace renyi {

// Closed interval [lo, hi] of reals. Arithmetic is outward-rounded by
// stepping one ulp away from the result after every operation, which covers
// the round-to-nearest error of the underlying IEEE operation.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr Interval() = default;
  constexpr explicit Interval(double v) : lo(v), hi(v) {}
  constexpr Interval(double l, double h) : lo(l), hi(h) {}

  double width() const { return hi - lo; }
  double mid() const { return lo + 0.5 * (hi - lo); }
  double radius() const { return 0.5 * (hi - lo); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline double round_down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double round_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}

// Widens by a relative slop on each side plus one ulp. Used after
// libm calls (exp, log, pow, expm1, log1p) whose results are faithful but
// not correctly rounded.
Interval widen(Interval x, double rel_slop);

// Slop applied after a chain of a handful of libm calls.
inline constexpr double kLibmSlop = 1e-14;

Interval operator+(Interval a, Interval b);
Interval operator-(Interval a, Interval b);
Interval operator*(Interval a, Interval b);
Interval operator/(Interval a, Interval b);
Interval operator-(Interval a);

inline Interval operator+(Interval a, double b) { return a + Interval(b); }
inline Interval operator*(double a, Interval b) { return Interval(a) * b; }
inline Interval operator*(Interval a, double b) { return a * Interval(b); }
inline Interval operator/(Interval a, double b) { return a / Interval(b); }

Interval hull(Interval a, Interval b);

// Monotone elementary functions; domain violations produce NaN bounds.
Interval log(Interval x);
Interval exp(Interval x);
// x^p for x >= 0 and real p (monotone in x; direction chosen by sign of p).
Interval pow(Interval x, double p);

std::ostream& operator<<(std::ostream& os, const Interval& x);

}  // namespace renyi
