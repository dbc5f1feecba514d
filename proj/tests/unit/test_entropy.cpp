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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracle.hpp"
#include "renyi/constructions.hpp"
#include "renyi/convergence.hpp"
#include "renyi/entropy.hpp"
#include "renyi/error.hpp"
#include "renyi/literal.hpp"

namespace {

using namespace renyi;

const TailedDistribution& geo() {
  static const auto p = TailedDistribution::make({}, GeometricTail::with_ratio(0.5, 0.5, 1));
  return p;
}
const TailedDistribution& uniform4() {
  static const auto p = TailedDistribution::finite({0.25, 0.25, 0.25, 0.25});
  return p;
}

TEST(Renyi, UniformIsConstant) {
  EvalConfig cfg;
  for (double a : {0.0, 0.5, 2.0, 7.0}) {
    const auto v = renyi_entropy(uniform4(), a, cfg);
    EXPECT_NEAR(v.value(), 2.0, 1e-15) << a;
    EXPECT_LE(v.radius(), cfg.eps);
  }
  EXPECT_NEAR(shannon_entropy(uniform4(), cfg).value(), 2.0, 1e-15);
  EXPECT_EQ(min_entropy(uniform4(), cfg).value(), 2.0);
}

TEST(Renyi, GeometricClosedForms) {
  EvalConfig cfg;
  const auto h2 = renyi_entropy(geo(), 2.0, cfg);
  EXPECT_NEAR(h2.value(), std::log2(3.0), 1e-12);
  EXPECT_TRUE(h2.enclosure().contains(std::log2(3.0)));
  const auto h05 = renyi_entropy(geo(), 0.5, cfg);
  const double want = 2 * std::log2(std::numbers::sqrt2 + 1);
  EXPECT_TRUE(h05.enclosure().contains(want)) << h05.to_string(2);
}

TEST(Renyi, OtherBases) {
  EvalConfig cfg;
  cfg.base = std::numbers::e;
  EXPECT_NEAR(renyi_entropy(geo(), 2.0, cfg).value(), std::log(3.0), 1e-12);
  cfg.base = 10;
  EXPECT_NEAR(shannon_entropy(geo(), cfg).value(), 2 * std::log10(2.0), 1e-12);
}

TEST(Renyi, DivergenceIsSymbolic) {
  EvalConfig cfg;
  const auto zeta = normalize({}, PowerTail{1, 2, 1}, 1e-12);
  EXPECT_FALSE(renyi_entropy(zeta, 0.4, cfg).is_finite());
  EXPECT_FALSE(renyi_entropy(zeta, 0.5, cfg).is_finite());
  EXPECT_EQ(renyi_entropy(zeta, 0.4, cfg).to_string(2), "inf");
  EXPECT_FALSE(renyi_entropy(geo(), 0.0, cfg).is_finite());
  EXPECT_NEAR(renyi_entropy(TailedDistribution::finite({0.5, 0, 0.5}), 0.0, cfg).value(), 1.0,
              1e-15);
}

TEST(Renyi, AlphaNearOneRefused) {
  EvalConfig cfg;
  try {
    renyi_entropy(geo(), 1.0 + 1e-7, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kAlphaNearOne);
  }
  EXPECT_NEAR(entropy_at(geo(), 1.0, cfg).value(), 2.0, 1e-12);
  EXPECT_EQ(entropy_at(geo(), INFINITY, cfg).value(), 1.0);
}

TEST(Renyi, ConfigValidation) {
  EvalConfig cfg;
  cfg.base = 1.0;
  EXPECT_THROW(renyi_entropy(geo(), 2, cfg), Error);
  cfg = {};
  cfg.eps = 0;
  EXPECT_THROW(renyi_entropy(geo(), 2, cfg), Error);
  EXPECT_THROW(renyi_entropy(geo(), -1, EvalConfig{}), Error);
}

TEST(Renyi, RadiusBelowRequestedEps) {
  std::mt19937_64 rng(41);
  for (double eps : {1e-6, 1e-9, 1e-11}) {
    EvalConfig cfg;
    cfg.eps = eps;
    for (int i = 0; i < 8; ++i) {
      const auto p = gen::draw(rng);
      const double a = critical_exponent(p).alpha_c + gen::uniform(rng, 0.15, 2.0);
      if (std::abs(a - 1) < 0.01) continue;
      const auto v = renyi_entropy(p, a, cfg);
      ASSERT_TRUE(v.is_finite());
      EXPECT_LE(v.radius(), eps) << format_distribution(p) << " alpha=" << a;
    }
  }
}

TEST(Renyi, MatchesOracleOnRandomInputs) {
  std::mt19937_64 rng(43);
  EvalConfig cfg;
  cfg.eps = 1e-9;
  for (int i = 0; i < 12; ++i) {
    const auto p = gen::draw(rng);
    const double a = critical_exponent(p).alpha_c + gen::uniform(rng, 0.2, 2.0);
    if (std::abs(a - 1) < 0.05) continue;
    const auto v = renyi_entropy(p, a, cfg);
    const auto o = oracle::entropy(p, a, 2.0, 300'000);
    if (o.hi - o.lo < 1e-9) {
      EXPECT_TRUE(v.enclosure().contains(static_cast<double>(o.mid())))
          << format_distribution(p) << " alpha=" << a;
    } else {
      EXPECT_LE(v.enclosure().lo, (double)o.hi);
      EXPECT_GE(v.enclosure().hi, (double)o.lo);
    }
  }
}

TEST(Shannon, Examples) {
  EvalConfig cfg;
  const auto h = shannon_entropy(geo(), cfg);
  EXPECT_NEAR(h.value(), 2.0, 1e-12);
  EXPECT_LE(h.radius(), cfg.eps);
  const auto lp = normalize({}, LogPowerTail{1, 1, 2, 2}, 1e-12);
  EXPECT_FALSE(shannon_entropy(lp, cfg).is_finite());
  EXPECT_EQ(shannon_entropy(TailedDistribution::finite({1.0}), cfg).value(), 0.0);
}

TEST(MinEntropy, Examples) {
  EvalConfig cfg;
  EXPECT_EQ(min_entropy(geo(), cfg).value(), 1.0);
  EXPECT_NEAR(min_entropy(TailedDistribution::finite({0.7, 0.3}), cfg).value(), 0.514573172829758,
              1e-14);
  // Tail maximum at its first index.
  const auto p = normalize({0.01}, PowerTail{1, 2, 2}, 1e-12);
  EXPECT_NEAR(min_entropy(p, cfg).value(), -std::log2(pmf(p, 2)), 1e-14);
}

TEST(MinEntropy, BelowEveryOrder) {
  std::mt19937_64 rng(47);
  EvalConfig cfg;
  cfg.eps = 1e-7;
  for (int i = 0; i < 10; ++i) {
    const auto p = gen::draw(rng);
    const double hmin = min_entropy(p, cfg).value();
    for (double a : {1.2, 2.0, 5.0, 20.0})
      EXPECT_LE(hmin, renyi_entropy(p, a, cfg).value() + 2e-7);
  }
}

TEST(LimitProbe, GeometricApproachesShannon) {
  EvalConfig cfg;
  const double schedule[] = {1.5, 1.25, 1.1, 1.01};
  const LimitProbe probe = limit_alpha_to_one_plus(geo(), cfg, schedule);
  EXPECT_TRUE(probe.monotone);
  EXPECT_TRUE(probe.bounded_by_shannon);
  EXPECT_FALSE(probe.exceeds_bound);
  for (std::size_t i = 1; i < probe.values.size(); ++i)
    EXPECT_GT(probe.values[i].value(), probe.values[i - 1].value());
  EXPECT_GT(probe.final_gap, 0.0);
  EXPECT_LT(probe.final_gap, 0.02);
}

TEST(LimitProbe, DivergentShannon) {
  EvalConfig cfg;
  cfg.eps = 1e-6;
  cfg.alpha_one_window = 1e-9;
  const auto lp = normalize({}, LogPowerTail{1, 1, 2, 10}, 1e-12);
  const auto schedule = dyadic_schedule(12);
  const LimitProbe probe = limit_alpha_to_one_plus(lp, cfg, schedule, 20.0);
  EXPECT_FALSE(probe.shannon.is_finite());
  EXPECT_TRUE(probe.exceeds_bound);
  EXPECT_TRUE(probe.monotone);
  EXPECT_TRUE(std::isinf(probe.final_gap));
}

TEST(LimitProbe, UniformConstantAndValidation) {
  EvalConfig cfg;
  const double schedule[] = {3.0, 2.0, 1.5};
  const LimitProbe probe = limit_alpha_to_one_plus(uniform4(), cfg, schedule);
  for (const auto& v : probe.values) EXPECT_NEAR(v.value(), 2.0, 1e-14);
  const double bad[] = {1.5, 1.6};
  EXPECT_THROW(limit_alpha_to_one_plus(geo(), cfg, bad), Error);
  const double below[] = {1.5, 0.9};
  EXPECT_THROW(limit_alpha_to_one_plus(geo(), cfg, below), Error);
}

TEST(ProductForm, Examples) {
  EvalConfig cfg;
  EXPECT_TRUE(widen(product_form(geo(), cfg), 1e-8).contains(0.25));
  EXPECT_TRUE(product_form(TailedDistribution::finite({1.0}), cfg).contains(1.0));
  EXPECT_NEAR(product_form(uniform4(), cfg).mid(), 0.25, 1e-12);
  try {
    product_form(normalize({}, LogPowerTail{1, 1, 2, 2}, 1e-12), cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kRegionError);
  }
}

TEST(Properties, VerticalAsymptote) {
  EvalConfig cfg;
  cfg.eps = 1e-6;
  const auto zeta = normalize({}, PowerTail{1, 2, 1}, 1e-12);
  double prev = 0;
  for (double d : {0.2, 0.1, 0.05, 0.02, 0.01, 0.005}) {
    const double v = renyi_entropy(zeta, 0.5 + d, cfg).value();
    EXPECT_GT(v, prev);
    prev = v;
  }
  EXPECT_GT(prev, 10.0);
}

TEST(Properties, TruncationLowerSemicontinuity) {
  // For alpha <= 1 the truncations approach H_alpha(P) from below in the limit.
  EvalConfig cfg;
  cfg.eps = 1e-9;
  const auto zeta = normalize({}, PowerTail{1, 2, 1}, 1e-12);
  for (double a : {0.8, 1.0}) {
    const double target = entropy_at(zeta, a, cfg).value();
    double prev_gap = INFINITY;
    for (std::int64_t n : {10, 100, 1000, 10000}) {
      const double gap = target - entropy_at(truncate_distribution(zeta, n), a, cfg).value();
      EXPECT_LT(gap, prev_gap);
      prev_gap = gap;
    }
    EXPECT_LT(prev_gap, 0.05);
  }
}

TEST(Properties, ConcaveForSmallOrders) {
  std::mt19937_64 rng(53);
  EvalConfig cfg;
  for (int i = 0; i < 40; ++i) {
    const auto p = gen::finite(rng, 4, 4);
    const auto q = gen::finite(rng, 4, 4);
    const double lam = gen::uniform(rng, 0.05, 0.95);
    std::vector<double> t(4);
    for (int k = 0; k < 4; ++k) t[k] = lam * p.prefix()[k] + (1 - lam) * q.prefix()[k];
    const auto mix = TailedDistribution::finite(t);
    for (double a : {0.3, 0.7, 1.0}) {
      const double lhs = entropy_at(mix, a, cfg).value();
      const double rhs = lam * entropy_at(p, a, cfg).value() + (1 - lam) * entropy_at(q, a, cfg).value();
      EXPECT_GE(lhs, rhs - 1e-8);
    }
  }
}

}  // namespace
