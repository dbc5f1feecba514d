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

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <gtest/gtest.h>

#include "renyi/error.hpp"
#include "renyi/interval.hpp"
#include "renyi/series.hpp"

namespace {

using renyi::Interval;
using renyi::series::PowerLogTerm;

TEST(Interval, ArithmeticEnclosesExactResults) {
  const Interval a(0.1, 0.2);
  const Interval b(-0.3, 0.5);
  const Interval sum = a + b;
  EXPECT_LE(sum.lo, -0.2);
  EXPECT_GE(sum.hi, 0.7);
  const Interval prod = a * b;
  EXPECT_LE(prod.lo, 0.2 * -0.3);
  EXPECT_GE(prod.hi, 0.2 * 0.5);
  const Interval third = Interval(1.0) / Interval(3.0);
  EXPECT_LT(third.lo, third.hi);
  EXPECT_TRUE(third.contains(1.0 / 3.0));
  EXPECT_TRUE(std::isnan((Interval(1.0) / b).lo));
}

TEST(Interval, TranscendentalsAreWidenedOutward) {
  const Interval x(2.0);
  const Interval l = renyi::log(x);
  EXPECT_TRUE(l.contains(std::numbers::ln2));
  EXPECT_GT(l.width(), 0.0);
  const Interval e = renyi::exp(Interval(-1.0, 1.0));
  EXPECT_LE(e.lo, std::exp(-1.0));
  EXPECT_GE(e.hi, std::exp(1.0));
  EXPECT_TRUE(renyi::pow(Interval(4.0), 0.5).contains(2.0));
}

TEST(Interval, HullAndPrinting) {
  const Interval h = renyi::hull(Interval(1.0, 2.0), Interval(-1.0, 0.5));
  EXPECT_EQ(h, Interval(-1.0, 2.0));
  std::ostringstream os;
  os << Interval(1.0, 2.0);
  EXPECT_EQ(os.str(), "[1, 2]");
}

TEST(Series, PowerLogTermEvaluatesFamily) {
  const PowerLogTerm f{2.0, -1.0, 1};
  const double x = 50.0;
  EXPECT_NEAR(f(x), std::pow(x, -2.0) / std::log(x) * std::log(std::log(x)), 1e-18);
  EXPECT_TRUE((PowerLogTerm{1.0, -2.0, 0}).summable());
  EXPECT_FALSE((PowerLogTerm{1.0, -1.0, 0}).summable());
  EXPECT_FALSE((PowerLogTerm{0.9, -5.0, 0}).summable());
}

TEST(Series, RegularityStartGivesConvexDecreasingTerms) {
  for (const PowerLogTerm f : {PowerLogTerm{1.0, -2.0, 0}, PowerLogTerm{1.5, 3.0, 1},
                               PowerLogTerm{1.01, 4.0, 0}, PowerLogTerm{2.0, -3.0, 1}}) {
    const std::int64_t k = renyi::series::regularity_start(f);
    ASSERT_GE(k, 2);
    // Second differences on a sample of the half-line.
    for (double x = k - 0.5; x < 1e7; x *= 1.7) {
      const double h = 1e-3 * x;
      EXPECT_GT(f(x), f(x + h));
      EXPECT_GE(f(x - h) + f(x + h) - 2 * f(x), -1e-12 * f(x));
    }
  }
}

long double quad(double k, double a, int m, double u0) {
  boost::math::quadrature::exp_sinh<long double> integrator;
  return integrator.integrate(
      [&](long double t) {
        const long double u = u0 + t;
        // Log domain keeps huge t from producing inf * 0.
        long double lv = -k * t + a * std::log(u);
        if (m == 1) lv += std::log(std::log(u));
        const long double v = std::exp(lv);
        return std::isfinite(v) ? v : 0.0L;
      },
      0.0L, std::numeric_limits<long double>::infinity()) *
         std::exp(-(long double)k * u0);
}

TEST(Series, ExpPowerLogIntegralClosedForms) {
  const auto e1 = renyi::series::exp_power_log_integral(1.0, 0.0, 0, 3.0, 1e-15);
  EXPECT_TRUE(e1.contains(std::exp(-3.0))) << e1;
  const double u = 2.5;
  const auto e2 = renyi::series::exp_power_log_integral(2.0, 1.0, 0, u, 1e-15);
  EXPECT_NEAR(e2.mid(), std::exp(-2 * u) * (u / 2 + 0.25), 1e-15);
  const auto e3 = renyi::series::exp_power_log_integral(0.0, -2.0, 0, 4.0, 1e-15);
  EXPECT_TRUE(e3.contains(0.25)) << e3;
  // m = 1, k = 0: int_U u^-3 ln u = U^-2 (ln U / 2 + 1/4).
  const double big_u = 5.0;
  const auto e4 = renyi::series::exp_power_log_integral(0.0, -3.0, 1, big_u, 1e-15);
  EXPECT_NEAR(e4.mid(), std::pow(big_u, -2.0) * (std::log(big_u) / 2 + 0.25), 1e-15);
}

TEST(Series, ExpPowerLogIntegralMatchesQuadrature) {
  struct Case {
    double k, a;
    int m;
    double u0;
  };
  for (const Case c : {Case{0.5, -1.5, 0, 2.0}, Case{0.01, -2.0, 1, 3.0}, Case{1e-4, 2.0, 0, 10.0},
                       Case{3.0, 4.0, 1, 3.0}, Case{0.2, -0.5, 0, 1.0}}) {
    const auto got = renyi::series::exp_power_log_integral(c.k, c.a, c.m, c.u0, 1e-13);
    const double want = static_cast<double>(quad(c.k, c.a, c.m, c.u0));
    EXPECT_LE(got.width(), 1e-13 + 1e-13 * std::abs(want));
    EXPECT_NEAR(got.mid(), want, 1e-13 + 1e-12 * std::abs(want))
        << c.k << " " << c.a << " " << c.m << " " << c.u0;
  }
}

TEST(Series, TailSumOfZetaTwo) {
  // sum_{n>=1} 1/n^2 = pi^2/6; explicit part up to 9 plus the certified tail.
  const PowerLogTerm f{2.0, 0.0, 0};
  double head = 0;
  for (int n = 1; n < 10; ++n) head += 1.0 / (n * n);
  const Interval tail = renyi::series::tail_sum(f, 10, 1e-14);
  const Interval total = tail + Interval(head);
  EXPECT_LE(tail.width(), 0.5 * (f(9.5) - f(10.0)) + 1e-14);
  EXPECT_TRUE(renyi::widen(total, 1e-15).contains(std::numbers::pi * std::numbers::pi / 6));
}

TEST(Series, SumSeriesReachesTolerance) {
  const PowerLogTerm f{3.0, 0.0, 0};
  const renyi::series::Piece piece{1.0, f};
  const auto s = renyi::series::sum_series([](double x) { return std::pow(x, -3.0); },
                                           std::span(&piece, 1), 1, 1e-13, 100'000'000);
  EXPECT_LE(s.width(), 1e-13);
  EXPECT_TRUE(s.contains(1.2020569031595942)) << s;
}

TEST(Series, SumSeriesLogPowerConstant) {
  // sum_{n>=2} 1/(n ln^2 n) = 2.10974280123689...
  const PowerLogTerm f{1.0, -2.0, 0};
  const renyi::series::Piece piece{1.0, f};
  const auto s = renyi::series::sum_series(f, std::span(&piece, 1), 2, 1e-10, 100'000'000);
  EXPECT_LE(s.width(), 1e-10);
  EXPECT_NEAR(s.mid(), 2.10974280123689, 1e-10);
}

TEST(Series, SumSeriesBudgetExceeded) {
  const PowerLogTerm f{1.0001, 0.0, 0};
  const renyi::series::Piece piece{1.0, f};
  try {
    renyi::series::sum_series(f, std::span(&piece, 1), 1, 1e-14, 1000);
    FAIL() << "expected budget error";
  } catch (const renyi::Error& e) {
    EXPECT_EQ(e.kind(), renyi::ErrorKind::kBudgetExceeded);
  }
}

TEST(Series, CertifiedSumBoundsRounding) {
  renyi::series::CertifiedSum s;
  for (int i = 0; i < 10; ++i) s.add(0.1);
  const Interval v = s.value();
  EXPECT_TRUE(v.contains(1.0));
  EXPECT_LT(v.width(), 1e-13);
  s.add(Interval(0.0, 1e-3));
  EXPECT_GE(s.value().hi, 1.001);
}

}  // namespace
