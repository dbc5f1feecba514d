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

// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Reference values come from the brute-force oracle in support/.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracle.hpp"
#include "renyi/constructions.hpp"
#include "renyi/convergence.hpp"
#include "renyi/distribution.hpp"
#include "renyi/entropy.hpp"
#include "renyi/literal.hpp"

namespace {

using namespace renyi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

TailedDistribution half_geometric() {
  return TailedDistribution::make({}, GeometricTail::with_ratio(0.5, 0.5, 1));
}

TailedDistribution unit_logpower(double gamma, std::int64_t start = 2) {
  return normalize({}, LogPowerTail{1.0, 1.0, gamma, start}, 1e-12);
}

TailedDistribution uniform4() { return TailedDistribution::finite({0.25, 0.25, 0.25, 0.25}); }

double lower(const EntropyValue& v) { return v.is_finite() ? v.value() - v.radius() : INFINITY; }
double upper(const EntropyValue& v) { return v.is_finite() ? v.value() + v.radius() : INFINITY; }

// 1. Symbolic region classification.
Outcome regions() {
  Outcome o;
  struct Case {
    TailedDistribution p;
    ConvergenceRegion want;
  };
  const std::vector<Case> cases{
      {half_geometric(), {0.0, false}},
      {normalize({}, PowerTail{1.0, 2.0, 1}, 1e-12), {0.5, false}},
      {normalize({}, LogPowerTail{1.0, 2.0, 4.0, 2}, 1e-12), {0.5, true}},
      {unit_logpower(2.0), {1.0, false}},
      {unit_logpower(3.0), {1.0, true}},
      {uniform4(), {0.0, true}},
  };
  int bad = 0;
  for (const Case& c : cases) {
    if (!(critical_exponent(c.p) == c.want)) ++bad;
  }
  const EvalConfig cfg;
  const bool h_inf = !shannon_entropy(cases[3].p, cfg).is_finite();
  const bool h_fin = shannon_entropy(cases[4].p, cfg).is_finite();
  o.pass = bad == 0 && h_inf && h_fin;
  o.detail = std::to_string(cases.size() - bad) + "/6 regions exact; H(beta=1,gamma=2) " +
             (h_inf ? "inf" : "finite") + ", H(beta=1,gamma=3) " + (h_fin ? "finite" : "inf");
  return o;
}

// 2. Enclosures contain the brute-force reference.
Outcome soundness() {
  std::mt19937_64 rng(2026);
  EvalConfig cfg;
  cfg.eps = 0.5e-8;  // radius, so the full width stays within 1e-8
  int misses = 0, wide = 0;
  double worst_width = 0;
  for (int i = 0; i < 200; ++i) {
    const auto p = gen::draw(rng, gen::kAllFamilies[i % 5]);
    const ConvergenceRegion reg = critical_exponent(p);
    double alpha = gen::uniform(rng, reg.alpha_c + 0.1, 4.0);
    if (std::abs(alpha - 1.0) < 0.05) alpha = 1.0;
    const EntropyValue v = entropy_at(p, alpha, cfg);
    const oracle::Bounds ob = oracle::entropy(p, alpha, 2.0);
    const double width = 2 * v.radius();
    worst_width = std::max(worst_width, width);
    if (!(width <= 1e-8)) ++wide;
    const double slack = static_cast<double>(ob.hi - ob.lo) / 2;
    const double mid = static_cast<double>(ob.mid());
    if (!(mid >= lower(v) - slack && mid <= upper(v) + slack)) ++misses;
  }
  Outcome o;
  o.pass = misses == 0 && wide == 0;
  o.detail = fmt("200 pairs, %.0f outside, %.0f too wide, max width %.2g", misses, wide,
                 worst_width);
  return o;
}

// 3. Closed forms.
Outcome closed_forms() {
  const EvalConfig cfg;
  const auto g = half_geometric();
  const double h2 = renyi_entropy(g, 2.0, cfg).value();
  const double h1 = shannon_entropy(g, cfg).value();
  const EntropyValue hinf = min_entropy(g, cfg);
  double uni = 0;
  for (double a : {0.0, 0.25, 0.5, 0.9, 1.0, 1.5, 2.0, 3.0, 10.0, 100.0, double(INFINITY)}) {
    uni = std::max(uni, std::abs(entropy_at(uniform4(), a, cfg).value() - 2.0));
  }
  Outcome o;
  o.pass = std::abs(h2 - std::log2(3.0)) <= 1e-9 && std::abs(h1 - 2.0) <= 1e-9 &&
           hinf.value() == 1.0 && uni <= 1e-9;
  o.detail = fmt("|H2-log2 3| %.2g, |H-2| %.2g, ", std::abs(h2 - std::log2(3.0)),
                 std::abs(h1 - 2.0)) +
             fmt("Hmin %.17g (radius %.2g), uniform-4 max dev %.2g", hinf.value(), hinf.radius(), uni);
  return o;
}

// 4. H_alpha is non-increasing in alpha.
Outcome monotonicity() {
  std::mt19937_64 rng(4);
  const EvalConfig cfg;
  int violations = 0;
  for (int i = 0; i < 50; ++i) {
    const auto p = gen::draw(rng, gen::kAllFamilies[i % 5]);
    const ConvergenceRegion reg = critical_exponent(p);
    const double lo = reg.includes_boundary ? reg.alpha_c : reg.alpha_c + 0.05;
    std::vector<double> grid;
    for (int j = 0; j < 19; ++j) {
      double a = lo + (8.0 - lo) * std::pow(j / 18.0, 2.0);
      if (std::abs(a - 1.0) < 1e-3) a = 1.0;
      grid.push_back(a);
    }
    grid.push_back(INFINITY);
    EntropyValue prev = entropy_at(p, grid[0], cfg);
    for (std::size_t j = 1; j < grid.size(); ++j) {
      const EntropyValue cur = entropy_at(p, grid[j], cfg);
      if (lower(cur) > upper(prev)) ++violations;
      prev = cur;
    }
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = fmt("50 distributions x 20 orders, %.0f violations", violations);
  return o;
}

// 5. Entropy-shift sequences hit H + r exactly with shrinking distance.
Outcome shifts() {
  const auto p = half_geometric();
  const EvalConfig cfg;
  double worst = 0;
  int order_bad = 0, bound_bad = 0, cases = 0;
  for (double alpha : {0.3, 0.5, 0.8}) {
    const double base = renyi_entropy(p, alpha, cfg).value();
    for (double r : {0.5, 1.0, 3.0}) {
      const std::int64_t n0 = find_n0(p, alpha, r, cfg);
      Interval prev_tv(INFINITY);
      for (std::int64_t n = n0; n <= n0 + 4; ++n) {
        const ShiftSolution s = solve_shift(p, alpha, r, n, cfg);
        const double h = renyi_entropy(s.distribution, alpha, cfg).value();
        worst = std::max(worst, std::abs(h - base - r));
        const Interval tv = total_variation(p, s.distribution, 1e-12);
        if (!(tv.hi < prev_tv.lo)) ++order_bad;
        if (!(tv.hi <= 2 * std::ldexp(1.0, -static_cast<int>(n)))) ++bound_bad;
        prev_tv = tv;
        ++cases;
      }
    }
  }
  Outcome o;
  o.pass = worst <= 1e-6 && order_bad == 0 && bound_bad == 0;
  o.detail = fmt("%.0f shifts, max |dH - r| %.2g, ", cases, worst) +
             fmt("%.0f non-decreasing distances, %.0f above 2^(1-n)", order_bad, bound_bad);
  return o;
}

// 6. alpha -> 1+ limit probes.
Outcome limit_probe() {
  EvalConfig cfg;
  // The last order is 1 + 2^-20, inside the default window around 1, and
  // double-precision sums only support about 1e-6 there.
  cfg.alpha_one_window = 1e-7;
  cfg.eps = 1e-6;
  const auto schedule = dyadic_schedule(20);
  const LimitProbe geo = limit_alpha_to_one_plus(half_geometric(), cfg, schedule);
  // Starting the law at n = 10 keeps the partial sums within reach.
  const LimitProbe heavy = limit_alpha_to_one_plus(unit_logpower(2.0, 10), cfg, schedule, 20.0);
  double peak = 0;
  for (const auto& v : heavy.values) peak = std::max(peak, v.value());
  Outcome o;
  o.pass = geo.monotone && geo.bounded_by_shannon && geo.final_gap <= 1e-3 && heavy.exceeds_bound;
  o.detail = fmt("geometric gap %.2g (monotone %.0f); heavy tail peak %.4g bits", geo.final_gap,
                 geo.monotone, peak);
  return o;
}

// 7. The two iterated limits differ by r.
Outcome interchange() {
  const EvalConfig cfg;
  const auto alphas = dyadic_schedule(12);
  std::vector<std::int64_t> ns;
  for (std::int64_t n = 2; n <= 9; ++n) ns.push_back(n);
  const GapReport rep = interchange_gap_demo(half_geometric(), 1.0, alphas, ns, cfg);
  Outcome o;
  o.pass = std::abs(rep.inner_then_outer - 3.0) <= 1e-3 &&
           std::abs(rep.outer_then_inner - 2.0) <= 1e-3;
  o.detail = fmt("inner-then-outer %.6f, outer-then-inner %.6f, column deviation %.3g",
                 rep.inner_then_outer, rep.outer_then_inner, rep.column_deviation);
  return o;
}

// 8. Truncation never raises H_alpha for alpha > 1; Shannon grows without
// bound on the divergent family.
Outcome truncation() {
  const EvalConfig cfg;
  const std::vector<TailedDistribution> families{
      half_geometric(), normalize({}, PowerTail{1.0, 2.0, 1}, 1e-12), unit_logpower(3.0)};
  int violations = 0, checks = 0;
  for (const auto& p : families) {
    for (double alpha : {1.5, 2.0, 5.0}) {
      const EntropyValue hp = renyi_entropy(p, alpha, cfg);
      for (std::int64_t n : {2, 5, 10, 50}) {
        const EntropyValue hq = renyi_entropy(truncate_distribution(p, n), alpha, cfg);
        if (lower(hq) > upper(hp)) ++violations;
        ++checks;
      }
    }
  }
  // 10 bits would need n near exp(exp(7)); 4 bits by n = 1e6 is the bound
  // reachable here.
  const auto heavy = unit_logpower(2.0);
  bool growing = true;
  double prev = 0, last = 0;
  for (std::int64_t n = 10; n <= 1'000'000; n *= 10) {
    last = shannon_entropy(truncate_distribution(heavy, n), cfg).value();
    growing = growing && last > prev;
    prev = last;
  }
  const bool divergent = !shannon_entropy(heavy, cfg).is_finite();
  Outcome o;
  o.pass = violations == 0 && growing && last >= 4.0 && divergent;
  o.detail = fmt("%.0f truncations, %.0f violations; ", checks, violations) +
             fmt("H(Q_1e6) = %.4f bits (bound 4), increasing %.0f", last, growing);
  return o;
}

// 9. Distance and mixture inequalities on finite pairs.
Outcome inequalities() {
  std::mt19937_64 rng(9);
  int violations = 0;
  for (int i = 0; i < 100; ++i) {
    const int k = gen::integer(rng, 2, 12);
    const auto p = gen::finite(rng, k, k);
    const auto q = gen::finite(rng, k, k);
    const Interval l1 = total_variation(p, q, 1e-12);
    for (double alpha : {1.25, 2.0, 3.0, 10.0}) {
      long double s = 0;
      for (int n = 0; n < k; ++n) s += std::pow(std::abs((long double)p.prefix()[n] - q.prefix()[n]), alpha);
      const double la = static_cast<double>(std::pow(s, 1.0L / alpha));
      if (la > l1.hi * (1 + 1e-12)) ++violations;
    }
    const double lambda = gen::uniform(rng, 0.05, 0.95);
    std::vector<double> t(k);
    for (int n = 0; n < k; ++n) t[n] = lambda * p.prefix()[n] + (1 - lambda) * q.prefix()[n];
    const auto mix = TailedDistribution::finite(std::move(t), 1e-9);
    for (double alpha : {0.1, 0.5, 0.9}) {
      const Interval sp = power_sum(p, alpha, 1e-13);
      const Interval sq = power_sum(q, alpha, 1e-13);
      const Interval st = power_sum(mix, alpha, 1e-13);
      const Interval lo = Interval(lambda) * sp + Interval(1 - lambda) * sq;
      const Interval hi =
          Interval(std::pow(lambda, alpha)) * sp + Interval(std::pow(1 - lambda, alpha)) * sq;
      if (lo.lo > st.hi * (1 + 1e-12) || st.lo > hi.hi * (1 + 1e-12)) ++violations;
    }
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = fmt("100 pairs, %.0f violations", violations);
  return o;
}

// 10. Splicing reaches any donor region within the requested distance.
Outcome splice_density() {
  std::mt19937_64 rng(10);
  int bad_region = 0, too_far = 0;
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const auto p = gen::draw(rng, gen::kAllFamilies[i % 5]);
    const auto donor = (i % 2 == 0)
                           ? normalize({}, PowerTail{1.0, gen::uniform(rng, 1.1, 5.0), 1}, 1e-12)
                           : normalize({}, LogPowerTail{1.0, 1.0, gen::uniform(rng, 1.5, 4.0), 2},
                                       1e-12);
    for (double eps : {0.1, 0.01}) {
      const auto s = splice_to_gamma(p, donor, eps);
      if (!(critical_exponent(s) == critical_exponent(donor))) ++bad_region;
      const Interval d = total_variation(p, s, 1e-9);
      worst = std::max(worst, d.hi / eps);
      if (!(d.hi <= eps)) ++too_far;
    }
  }
  Outcome o;
  o.pass = bad_region == 0 && too_far == 0;
  o.detail = fmt("40 splices, %.0f region mismatches, %.0f too far, max d/eps %.3g", bad_region,
                 too_far, worst);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"region classification", regions},
      {"enclosure soundness", soundness},
      {"closed forms", closed_forms},
      {"monotonicity in alpha", monotonicity},
      {"entropy-shift sequences", shifts},
      {"alpha -> 1+ probe", limit_probe},
      {"limit interchange gap", interchange},
      {"truncation bounds", truncation},
      {"distance and mixture inequalities", inequalities},
      {"splice density", splice_density},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("%s  %2zu %-34s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
