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

#include "renyi/entropy.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "renyi/convergence.hpp"
#include "renyi/error.hpp"
#include "renyi/series.hpp"

namespace renyi {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Point estimate of the total mass: 1 whenever the enclosure allows it.
double mass_point(const TailedDistribution& p) {
  return p.mass().contains(1.0) ? 1.0 : p.mass().mid();
}

EntropyValue from_enclosure(double point, Interval h, double eps) {
  if (!h.contains(point)) point = h.mid();
  const double radius = std::max(point - h.lo, h.hi - point);
  if (!(radius <= eps)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "radius %.3g exceeds eps %.3g", radius, eps);
    throw Error(ErrorKind::kBudgetExceeded, buf);
  }
  return EntropyValue::finite(point, radius);
}

// Exact-ish interval for a product of two doubles computed in floating point.
Interval scalar(double v) { return widen(Interval(v), 4 * std::numeric_limits<double>::epsilon()); }

double largest_mass(const TailedDistribution& p) {
  double best = 0.0;
  for (double m : p.prefix()) best = std::max(best, m);
  if (p.infinite_support()) best = std::max(best, tail_pmf(p.tail(), tail_start(p.tail())));
  return best;
}

}  // namespace

void EvalConfig::validate() const {
  if (!(base > 1.0) || !std::isfinite(base))
    throw Error(ErrorKind::kInvalidArgument, "base must be > 1");
  if (!(eps > 0.0)) throw Error(ErrorKind::kInvalidArgument, "eps must be > 0");
  if (!(alpha_one_window >= 0.0))
    throw Error(ErrorKind::kInvalidArgument, "alpha window must be >= 0");
  if (term_budget == 0) throw Error(ErrorKind::kInvalidArgument, "term budget must be > 0");
}

EntropyValue EntropyValue::finite(double value, double radius) {
  return EntropyValue(true, value, radius);
}
EntropyValue EntropyValue::infinite() { return EntropyValue(false, kInf, 0.0); }

double EntropyValue::value() const { return finite_ ? value_ : kInf; }
double EntropyValue::radius() const { return finite_ ? radius_ : 0.0; }

Interval EntropyValue::enclosure() const {
  if (!finite_) return Interval(kInf, kInf);
  return Interval(round_down(value_ - radius_), round_up(value_ + radius_));
}

std::string EntropyValue::to_string(double base) const {
  if (!finite_) return "inf";
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.12g ± %.3g [base %g]", value_, radius_, base);
  return buf;
}

Interval power_sum(const TailedDistribution& p, double alpha, double tol,
                   std::uint64_t budget) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw Error(ErrorKind::kInvalidArgument, "power sum needs a finite alpha >= 0");
  if (alpha == 0.0) {
    if (p.infinite_support()) return Interval(kInf, kInf);
    return Interval(static_cast<double>(p.support_size()));
  }
  series::CertifiedSum sum;
  for (double m : p.prefix())
    if (m > 0.0) sum.add(alpha == 1.0 ? m : std::pow(m, alpha));
  Interval total = sum.value();
  if (p.infinite_support())
    total = total + tail_law_sum(p.tail(), tail_start(p.tail()), TermKind::kPower, alpha,
                                 0.75 * tol, budget);
  return total;
}

Interval shannon_sum(const TailedDistribution& p, double tol, std::uint64_t budget) {
  series::CertifiedSum sum;
  for (double m : p.prefix())
    if (m > 0.0) sum.add(-m * std::log(m));
  Interval total = sum.value();
  if (p.infinite_support())
    total = total + tail_law_sum(p.tail(), tail_start(p.tail()), TermKind::kEntropy, 1.0,
                                 0.75 * tol, budget);
  return total;
}

EntropyValue renyi_entropy(const TailedDistribution& p, double alpha, const EvalConfig& cfg) {
  cfg.validate();
  if (std::isnan(alpha) || alpha < 0.0)
    throw Error(ErrorKind::kInvalidArgument, "alpha must be >= 0");
  if (std::isinf(alpha)) return min_entropy(p, cfg);
  if (std::abs(alpha - 1.0) < cfg.alpha_one_window)
    throw Error(ErrorKind::kAlphaNearOne,
                "alpha is within the window around 1; use the Shannon entropy");
  if (!critical_exponent(p).contains(alpha)) return EntropyValue::infinite();

  const double lnb = std::log(cfg.base);
  const Interval lnb_i = scalar(lnb);
  if (alpha == 0.0) {
    const double count = static_cast<double>(p.support_size());
    return from_enclosure(std::log(count) / lnb, log(Interval(count)) / lnb_i, cfg.eps);
  }

  double guess = 0.0;
  for (double m : p.prefix())
    if (m > 0.0) guess += std::pow(m, alpha);
  guess = std::max(guess, std::pow(largest_mass(p), alpha));
  const double tol = 0.25 * cfg.eps * std::abs(1.0 - alpha) * lnb * guess;

  const Interval s = power_sum(p, alpha, tol, cfg.term_budget);
  const Interval denom = scalar((1.0 - alpha) * lnb);
  const Interval h = (log(s) - Interval(alpha) * log(p.mass())) / denom;
  const double point =
      (std::log(s.mid()) - alpha * std::log(mass_point(p))) / ((1.0 - alpha) * lnb);
  return from_enclosure(point, h, cfg.eps);
}

EntropyValue shannon_entropy(const TailedDistribution& p, const EvalConfig& cfg) {
  cfg.validate();
  if (!critical_exponent(p).contains(1.0)) return EntropyValue::infinite();
  const double lnb = std::log(cfg.base);
  const Interval raw = shannon_sum(p, 0.5 * cfg.eps * lnb, cfg.term_budget);
  const Interval& mass = p.mass();
  const Interval h = (raw / mass + log(mass)) / scalar(lnb);
  const double mp = mass_point(p);
  const double point = (raw.mid() / mp + std::log(mp)) / lnb;
  return from_enclosure(point, h, cfg.eps);
}

EntropyValue min_entropy(const TailedDistribution& p, const EvalConfig& cfg) {
  cfg.validate();
  const double top = largest_mass(p);
  const double lnb = std::log(cfg.base);
  const Interval h = (log(p.mass()) - log(Interval(top))) / scalar(lnb);
  const double point = (std::log(mass_point(p)) - std::log(top)) / lnb;
  return from_enclosure(point, h, cfg.eps);
}

EntropyValue entropy_at(const TailedDistribution& p, double alpha, const EvalConfig& cfg) {
  if (std::isinf(alpha) && alpha > 0) return min_entropy(p, cfg);
  if (std::abs(alpha - 1.0) < cfg.alpha_one_window) return shannon_entropy(p, cfg);
  return renyi_entropy(p, alpha, cfg);
}

LimitProbe limit_alpha_to_one_plus(const TailedDistribution& p, const EvalConfig& cfg,
                                   std::span<const double> schedule, double divergence_bound) {
  if (schedule.empty()) throw Error(ErrorKind::kInvalidArgument, "empty alpha schedule");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i] > 1.0))
      throw Error(ErrorKind::kInvalidArgument, "schedule values must exceed 1");
    if (i > 0 && !(schedule[i] < schedule[i - 1]))
      throw Error(ErrorKind::kInvalidArgument, "schedule must be strictly decreasing");
  }
  LimitProbe probe;
  probe.shannon = shannon_entropy(p, cfg);
  for (double a : schedule) {
    probe.alphas.push_back(a);
    probe.values.push_back(renyi_entropy(p, a, cfg));
  }
  for (std::size_t i = 0; i < probe.values.size(); ++i) {
    const EntropyValue& v = probe.values[i];
    if (v.value() > divergence_bound) probe.exceeds_bound = true;
    if (i > 0) {
      const EntropyValue& u = probe.values[i - 1];
      if (v.value() + v.radius() + u.radius() < u.value()) probe.monotone = false;
    }
    if (probe.shannon.is_finite() &&
        v.value() - v.radius() > probe.shannon.value() + probe.shannon.radius())
      probe.bounded_by_shannon = false;
  }
  probe.final_gap = probe.shannon.is_finite()
                        ? probe.shannon.value() - probe.values.back().value()
                        : kInf;
  return probe;
}

std::vector<double> dyadic_schedule(int count) {
  std::vector<double> out;
  for (int k = 1; k <= count; ++k) out.push_back(1.0 + std::ldexp(1.0, -k));
  return out;
}

Interval product_form(const TailedDistribution& p, const EvalConfig& cfg) {
  const EntropyValue h = shannon_entropy(p, cfg);
  if (!h.is_finite())
    throw Error(ErrorKind::kRegionError, "Shannon entropy is infinite; the product is 0");
  return exp(-(h.enclosure() * scalar(std::log(cfg.base))));
}

}  // namespace renyi
