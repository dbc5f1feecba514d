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

#include "renyi/convergence.hpp"

#include <cmath>
#include <cstdio>

#include "renyi/error.hpp"

namespace renyi {

bool ConvergenceRegion::at_boundary(double alpha) const {
  return std::abs(alpha - alpha_c) <= 1e-12 * std::max(1.0, alpha_c);
}

bool ConvergenceRegion::contains(double alpha) const {
  if (at_boundary(alpha)) return includes_boundary;
  return alpha > alpha_c;
}

std::string ConvergenceRegion::to_string() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%c%.9g, inf)", includes_boundary ? '[' : '(', alpha_c);
  return buf;
}

ConvergenceRegion critical_exponent(const TailLaw& tail) {
  if (is_finite(tail)) return {0.0, true};
  if (std::holds_alternative<GeometricTail>(tail)) return {0.0, false};
  if (const auto* t = std::get_if<PowerTail>(&tail)) return {1.0 / t->beta, false};
  const auto& t = std::get<LogPowerTail>(tail);
  if (t.beta > 1.0) {
    // p^(1/beta) ~ n^-1 (ln n)^-(gamma/beta): summable iff gamma/beta > 1.
    return {1.0 / t.beta, t.gamma / t.beta > 1.0};
  }
  // beta == 1: the boundary is alpha = 1 where -p ln p ~ n^-1 (ln n)^(1-gamma).
  return {1.0, t.gamma > 2.0};
}

ConvergenceRegion critical_exponent(const TailedDistribution& p) {
  return critical_exponent(p.tail());
}

ConvergenceRegion intersect(std::span<const ConvergenceRegion> regions) {
  if (regions.empty()) throw Error(ErrorKind::kInvalidArgument, "empty region list");
  ConvergenceRegion out = regions.front();
  for (const auto& r : regions.subspan(1)) {
    if (r.alpha_c > out.alpha_c && !out.at_boundary(r.alpha_c)) {
      out = r;
    } else if (out.at_boundary(r.alpha_c)) {
      out.includes_boundary = out.includes_boundary && r.includes_boundary;
    }
  }
  return out;
}

bool same_region(const TailedDistribution& p, const TailedDistribution& q) {
  const TailLaw& a = p.tail();
  const TailLaw& b = q.tail();
  if (a.index() != b.index()) return false;
  if (const auto* g = std::get_if<GeometricTail>(&a)) {
    return g->complement == std::get<GeometricTail>(b).complement;
  }
  if (const auto* t = std::get_if<PowerTail>(&a)) return t->beta == std::get<PowerTail>(b).beta;
  if (const auto* t = std::get_if<LogPowerTail>(&a)) {
    const auto& u = std::get<LogPowerTail>(b);
    return t->beta == u.beta && t->gamma == u.gamma;
  }
  return true;
}

Mixture::Mixture(std::vector<double> weights, std::vector<TailedDistribution> components)
    : weights_(std::move(weights)), components_(std::move(components)) {
  if (weights_.empty() || weights_.size() != components_.size()) {
    throw Error(ErrorKind::kInvalidWeights, "need one weight per component and K >= 1");
  }
  double total = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) throw Error(ErrorKind::kInvalidWeights, "weights must be > 0");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) throw Error(ErrorKind::kInvalidWeights, "weights must sum to 1");
  std::vector<ConvergenceRegion> regions;
  regions.reserve(components_.size());
  for (const auto& c : components_) regions.push_back(critical_exponent(c));
  region_ = intersect(regions);
}

double Mixture::pmf(std::int64_t n) const {
  double v = 0.0;
  for (std::size_t k = 0; k < weights_.size(); ++k) v += weights_[k] * components_[k].pmf(n);
  return v;
}

MassEnclosure Mixture::tail_mass(std::int64_t n0, double eps) const {
  Interval total(0.0);
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    total = total + Interval(weights_[k]) * renyi::tail_mass(components_[k], n0, eps / 2);
  }
  total.lo = std::max(total.lo, 0.0);
  return total;
}

Mixture mixture(std::vector<std::pair<double, TailedDistribution>> parts) {
  std::vector<double> w;
  std::vector<TailedDistribution> c;
  for (auto& [weight, dist] : parts) {
    w.push_back(weight);
    c.push_back(std::move(dist));
  }
  return Mixture(std::move(w), std::move(c));
}

bool partial_sums_exceed(const std::function<double(std::int64_t)>& pmf, double alpha,
                         double bound, std::int64_t terms) {
  double sum = 0.0;
  for (std::int64_t n = 1; n <= terms; ++n) {
    const double p = pmf(n);
    if (p > 0.0) sum += std::pow(p, alpha);
    if (sum > bound) return true;
  }
  return false;
}

}  // namespace renyi
