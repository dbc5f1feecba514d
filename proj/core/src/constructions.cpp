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

#include "renyi/constructions.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "renyi/convergence.hpp"
#include "renyi/error.hpp"
#include "renyi/series.hpp"

namespace renyi {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLogFloor = -700.0;   // ln of the smallest complement tried
constexpr double kN0Margin = 1e-6;     // required excess of the target over the degenerate tail
constexpr double kSolveRel = 1e-9;     // bisection residual, relative to the target

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::kInvalidArgument, what);
}

std::int64_t prefix_len(const TailedDistribution& p) {
  return static_cast<std::int64_t>(p.prefix().size());
}

Interval tight_tail(const TailedDistribution& p, std::int64_t n0, std::uint64_t budget) {
  series::CertifiedSum acc;
  for (std::int64_t n = n0; n <= prefix_len(p); ++n) acc.add(p.prefix()[n - 1]);
  Interval total = acc.value();
  if (p.infinite_support()) {
    const std::int64_t from = std::max(n0, tail_start(p.tail()));
    total = total + tail_law_sum(p.tail(), from, TermKind::kMass, 1.0, 1e-14, budget);
  }
  total.lo = std::max(total.lo, 0.0);
  return total;
}

// The law restricted to n >= n0, with the same masses.
TailLaw advance_to(const TailLaw& law, std::int64_t n0) {
  if (n0 <= tail_start(law)) return law;
  if (const auto* g = std::get_if<GeometricTail>(&law)) {
    const double shift = static_cast<double>(n0 - g->start);
    return GeometricTail::with_complement(g->first_mass * std::exp(shift * g->log_ratio()),
                                          g->complement, n0);
  }
  return with_start(law, n0);
}

// The donor's masses from n0 on: explicit ones (zero-padded up to the law's
// start, positions n0, n0+1, ...) followed by the law.
struct DonorPiece {
  std::vector<double> head;
  TailLaw law;
  double mass = 0.0;
};

DonorPiece donor_from(const TailedDistribution& donor, std::int64_t n0, std::uint64_t budget) {
  DonorPiece piece;
  piece.law = advance_to(donor.tail(), n0);
  const std::int64_t law_start = tail_start(piece.law);
  for (std::int64_t n = n0; n < law_start; ++n) piece.head.push_back(pmf(donor, n));
  series::CertifiedSum acc;
  for (double m : piece.head) acc.add(m);
  const Interval law_mass =
      tail_law_sum(piece.law, law_start, TermKind::kMass, 1.0, 1e-14, budget);
  piece.mass = (acc.value() + law_mass).mid();
  return piece;
}

// Smallest n >= lo with bound(n) <= threshold, for bound non-increasing in n.
std::int64_t first_index_below(const std::function<double(std::int64_t)>& bound,
                               std::int64_t lo, double threshold) {
  if (bound(lo) <= threshold) return lo;
  std::int64_t good = lo;
  std::int64_t step = 1;
  while (true) {
    if (step > (std::int64_t{1} << 40))
      throw Error(ErrorKind::kBudgetExceeded, "no splice index found below 2^40");
    good = lo + step;
    if (bound(good) <= threshold) break;
    step *= 2;
  }
  std::int64_t bad = lo + step / 2;
  if (step == 1) bad = lo;
  while (good - bad > 1) {
    const std::int64_t mid = bad + (good - bad) / 2;
    (bound(mid) <= threshold ? good : bad) = mid;
  }
  return good;
}

std::int64_t splice_index(const TailedDistribution& p, const TailedDistribution& donor,
                          double eps, std::int64_t at_least, std::uint64_t budget) {
  if (p.infinite_support()) {
    return first_index_below([&](std::int64_t n) { return tight_tail(p, n, budget).hi; },
                             std::max<std::int64_t>(at_least, 2), eps / 2);
  }
  return first_index_below([&](std::int64_t n) { return tight_tail(donor, n, budget).hi; },
                           std::max(at_least, p.support_end() + 1), eps / 2);
}

void require_donor(const TailedDistribution& donor) {
  if (!donor.infinite_support())
    throw Error(ErrorKind::kInvalidDonor, "donor distribution must have infinite support");
}

// Masses kept by a shift at prefix length n, and the tail mass to replace.
struct Split {
  std::vector<double> prefix;
  double tail = 0.0;
};

Split split_for_shift(const TailedDistribution& p, std::int64_t n, std::uint64_t budget) {
  require(n >= 1, "prefix length must be >= 1");
  Split s;
  if (p.infinite_support()) {
    for (std::int64_t i = 1; i <= n; ++i) s.prefix.push_back(pmf(p, i));
    s.tail = tight_tail(p, n + 1, budget).mid();
    if (!(s.tail > 0.0))
      throw Error(ErrorKind::kBelowN0, "no tail mass left beyond the prefix");
    return s;
  }
  if (n < p.support_end())
    throw Error(ErrorKind::kBelowN0, "prefix length must reach the end of the support");
  s.tail = std::ldexp(1.0, -static_cast<int>(std::min<std::int64_t>(n, 1000)));
  if (!(s.tail > 0.0)) throw Error(ErrorKind::kBudgetExceeded, "tail mass 2^-n underflows");
  for (std::int64_t i = 1; i <= n; ++i) s.prefix.push_back((1.0 - s.tail) * pmf(p, i));
  return s;
}

double log_phi(double alpha, double t) {
  const double w = std::exp(t);
  return alpha * t - std::log(-std::expm1(alpha * std::log1p(-w)));
}

// Shannon contribution (nats) of a geometric tail of mass T with complement w.
double geometric_shannon(double tail, double t) {
  const double w = std::exp(t);
  const double body = w >= 1.0 ? 0.0 : (1.0 - w) * std::log1p(-w) / w;
  return tail * (-std::log(tail) - t) - tail * body;
}

struct Bisection {
  double t = 0.0;
  double residual = kInf;
  int iterations = 0;
  bool bracket_held = true;
};

// Solves value(t) = target over [kLogFloor, 0] for value decreasing in t.
// `residual` maps value(t) to the error in the solver's native space.
Bisection bisect_decreasing(const std::function<double(double)>& value, double target,
                            const std::function<double(double)>& residual, double tol) {
  double lo = kLogFloor;
  double hi = 0.0;
  if (!(value(lo) >= target))
    throw Error(ErrorKind::kBudgetExceeded,
                "target needs a geometric ratio closer to 1 than exp(-700) allows");
  Bisection b;
  for (b.iterations = 1; b.iterations <= 400; ++b.iterations) {
    const double mid = lo + 0.5 * (hi - lo);
    const double v = value(mid);
    const double res = residual(v);
    if (res < b.residual) {
      b.residual = res;
      b.t = mid;
    }
    if (res <= tol) break;
    (v > target ? lo : hi) = mid;
    if (!(value(lo) >= target && target >= value(hi))) b.bracket_held = false;
    if (hi - lo <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(mid)))
      break;
  }
  if (!b.bracket_held) throw Error(ErrorKind::kBudgetExceeded, "bisection bracket lost");
  if (!(b.residual <= tol))
    throw Error(ErrorKind::kBudgetExceeded, "shift equation not solved to tolerance");
  return b;
}

ShiftSolution finish(const Split& split, std::int64_t n, double h, const Bisection& b) {
  ShiftSolution sol;
  sol.n = n;
  sol.complement = std::exp(b.t);
  sol.q = 1.0 - sol.complement;
  sol.B = sol.complement * split.tail;
  sol.h = h;
  sol.residual = b.residual;
  sol.tail_mass = split.tail;
  sol.iterations = b.iterations;
  sol.bracket_held = b.bracket_held;
  sol.distribution = TailedDistribution::make(
      split.prefix, GeometricTail::with_complement(sol.B, sol.complement, n + 1));
  return sol;
}

double power_target(const TailedDistribution& p, double alpha, double r, const EvalConfig& cfg) {
  cfg.validate();
  require(alpha > 0.0 && alpha < 1.0, "shift needs alpha in (0, 1)");
  require(r >= 0.0 && std::isfinite(r), "shift needs a finite r >= 0");
  if (!critical_exponent(p).contains(alpha))
    throw Error(ErrorKind::kRegionError, "alpha lies outside the convergence region");
  double guess = 0.0;
  for (double m : p.prefix()) guess += m > 0.0 ? std::pow(m, alpha) : 0.0;
  guess = std::max(guess, 1.0);
  const double rel = std::min(0.25 * cfg.eps * (1.0 - alpha) * std::log(cfg.base), 1e-10);
  const Interval s = power_sum(p, alpha, rel * guess, cfg.term_budget);
  return std::pow(cfg.base, (1.0 - alpha) * r) * s.mid();
}

double prefix_power(const std::vector<double>& prefix, double alpha) {
  series::CertifiedSum acc;
  for (double m : prefix)
    if (m > 0.0) acc.add(std::pow(m, alpha));
  return acc.estimate();
}

TailedDistribution default_donor(double alpha) {
  return normalize({}, PowerTail{1.0, 2.0 / (1.0 + alpha), 1}, 1e-10);
}

TailedDistribution log_power_donor() {
  return normalize({}, LogPowerTail{1.0, 1.0, 2.0, 2}, 1e-10);
}

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

TailedDistribution splice_at(const TailedDistribution& p, const TailedDistribution& donor,
                             std::int64_t n0, std::uint64_t budget) {
  require_donor(donor);
  require(n0 >= 2, "splice index must be >= 2");
  DonorPiece piece = donor_from(donor, n0, budget);
  std::vector<double> prefix;
  if (p.infinite_support()) {
    const double removed = tight_tail(p, n0, budget).mid();
    const double factor = removed / piece.mass;
    for (std::int64_t n = 1; n < n0; ++n) prefix.push_back(pmf(p, n));
    for (double m : piece.head) prefix.push_back(m * factor);
    piece.law = with_scale(piece.law, tail_scale(piece.law) * factor);
  } else {
    require(n0 > p.support_end(), "splice index must lie beyond a finite support");
    series::CertifiedSum acc;
    for (double m : p.prefix()) acc.add(m);
    const double keep = 1.0 - piece.mass / acc.estimate();
    for (std::int64_t n = 1; n < n0; ++n) prefix.push_back(pmf(p, n) * keep);
    for (double m : piece.head) prefix.push_back(m);
  }
  return TailedDistribution::make(std::move(prefix), std::move(piece.law));
}

TailedDistribution splice_to_gamma(const TailedDistribution& p, const TailedDistribution& donor,
                                   double eps, std::uint64_t budget) {
  require_donor(donor);
  require(eps > 0.0, "splice needs eps > 0");
  if (eps >= 2.0) return donor;
  if (p.infinite_support()) return splice_at(p, donor, splice_index(p, donor, eps, 2, budget), budget);
  try {
    return splice_at(p, donor, splice_index(p, donor, eps, 2, budget), budget);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kBudgetExceeded) throw;
  }
  // The donor's own tail never gets below eps/2 at a reachable index (log-power
  // tails with beta = 1). Graft it right after the support, rescaled to mass
  // eps/4; scaling leaves the region unchanged and the distance is eps/2.
  const std::int64_t n0 = std::max<std::int64_t>(2, p.support_end() + 1);
  DonorPiece piece = donor_from(donor, n0, budget);
  const double graft = eps / 4;
  const double factor = graft / piece.mass;
  series::CertifiedSum acc;
  for (double m : p.prefix()) acc.add(m);
  const double keep = 1.0 - graft / acc.estimate();
  std::vector<double> prefix;
  for (std::int64_t n = 1; n < n0; ++n) prefix.push_back(pmf(p, n) * keep);
  for (double m : piece.head) prefix.push_back(m * factor);
  piece.law = with_scale(piece.law, tail_scale(piece.law) * factor);
  return TailedDistribution::make(std::move(prefix), std::move(piece.law));
}

double shift_phi(double alpha, double w) {
  require(alpha > 0.0 && w > 0.0 && w <= 1.0, "phi needs alpha > 0 and w in (0, 1]");
  return std::exp(log_phi(alpha, std::log(w)));
}

ShiftSolution solve_shift(const TailedDistribution& p, double alpha, double r, std::int64_t n,
                          const EvalConfig& cfg) {
  const double h = power_target(p, alpha, r, cfg);
  const Split split = split_for_shift(p, n, cfg.term_budget);
  const double head = prefix_power(split.prefix, alpha);
  const double t_alpha = std::pow(split.tail, alpha);
  const double ratio = (h - head) / t_alpha;
  if (!(ratio >= 1.0 + kN0Margin)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "R(%lld) = %.9g is not above 1; increase n",
                  static_cast<long long>(n), ratio);
    throw Error(ErrorKind::kBelowN0, buf);
  }
  const double log_ratio = std::log(ratio);
  const Bisection b = bisect_decreasing(
      [&](double t) { return log_phi(alpha, t); }, log_ratio,
      [&](double lphi) { return t_alpha * std::abs(std::exp(lphi) - ratio); }, kSolveRel * h);
  return finish(split, n, h, b);
}

ShiftSolution solve_shannon_shift(const TailedDistribution& p, double r, std::int64_t n,
                                  const EvalConfig& cfg) {
  cfg.validate();
  require(r >= 0.0 && std::isfinite(r), "shift needs a finite r >= 0");
  const EntropyValue base = shannon_entropy(p, cfg);
  if (!base.is_finite())
    throw Error(ErrorKind::kRegionError, "Shannon entropy of the base distribution is infinite");
  const double target = (base.value() + r) * std::log(cfg.base);
  const Split split = split_for_shift(p, n, cfg.term_budget);
  series::CertifiedSum acc;
  for (double m : split.prefix)
    if (m > 0.0) acc.add(-m * std::log(m));
  const double need = target - acc.estimate();
  const double floor = geometric_shannon(split.tail, 0.0);
  if (!(need >= floor + kN0Margin * std::max(std::abs(floor), split.tail))) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "prefix length %lld leaves no room for the shift; increase n",
                  static_cast<long long>(n));
    throw Error(ErrorKind::kBelowN0, buf);
  }
  const Bisection b = bisect_decreasing(
      [&](double t) { return geometric_shannon(split.tail, t); }, need,
      [&](double g) { return std::abs(g - need); }, kSolveRel * target);
  return finish(split, n, target, b);
}

std::int64_t find_n0(const TailedDistribution& p, double alpha, double r, const EvalConfig& cfg,
                     std::int64_t n_max) {
  const double h = power_target(p, alpha, r, cfg);
  const std::int64_t first = p.infinite_support() ? 1 : p.support_end();
  for (std::int64_t n = first; n <= n_max; ++n) {
    const Split split = split_for_shift(p, n, cfg.term_budget);
    const double ratio = (h - prefix_power(split.prefix, alpha)) / std::pow(split.tail, alpha);
    if (ratio >= 1.0 + kN0Margin) return n;
  }
  throw Error(ErrorKind::kBudgetExceeded, "no admissible prefix length up to n_max");
}

std::int64_t find_shannon_n0(const TailedDistribution& p, double r, const EvalConfig& cfg,
                             std::int64_t n_max) {
  const std::int64_t first = p.infinite_support() ? 1 : p.support_end();
  for (std::int64_t n = first; n <= n_max; ++n) {
    try {
      solve_shannon_shift(p, r, n, cfg);
      return n;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kBelowN0) throw;
    }
  }
  throw Error(ErrorKind::kBudgetExceeded, "no admissible prefix length up to n_max");
}

std::vector<TailedDistribution> shift_sequence(const TailedDistribution& p, double alpha,
                                               double r, int count, const EvalConfig& cfg,
                                               const std::optional<TailedDistribution>& donor) {
  require(count >= 1, "sequence length must be >= 1");
  require(r >= 0.0, "r must be >= 0; negative shifts are impossible");
  std::vector<TailedDistribution> out;
  if (r == 0.0) return std::vector<TailedDistribution>(static_cast<std::size_t>(count), p);
  if (std::isinf(r)) {
    require(alpha > 0.0, "alpha must be > 0");
    const TailedDistribution d = donor ? *donor : default_donor(alpha);
    require_donor(d);
    if (critical_exponent(d).contains(alpha))
      throw Error(ErrorKind::kInvalidDonor, "donor must diverge at alpha");
    std::int64_t at_least = 2;
    for (int j = 0; j < count; ++j) {
      const double eps = std::ldexp(1.0, -(j + 1));
      const std::int64_t n0 = splice_index(p, d, eps, at_least, cfg.term_budget);
      out.push_back(splice_at(p, d, n0, cfg.term_budget));
      at_least = n0 + 1;
    }
    return out;
  }
  const std::int64_t n0 = find_n0(p, alpha, r, cfg);
  for (int j = 0; j < count; ++j) out.push_back(solve_shift(p, alpha, r, n0 + j, cfg).distribution);
  return out;
}

TailedDistribution truncate_distribution(const TailedDistribution& p, std::int64_t n,
                                         std::uint64_t budget) {
  require(n >= 2, "truncation length must be >= 2");
  std::vector<double> masses;
  for (std::int64_t i = 1; i < n; ++i) masses.push_back(pmf(p, i));
  masses.push_back(tight_tail(p, n, budget).mid());
  return TailedDistribution::finite(std::move(masses));
}

GapReport interchange_gap_demo(const TailedDistribution& p, double r,
                               std::span<const double> alphas,
                               std::span<const std::int64_t> ns, const EvalConfig& cfg) {
  cfg.validate();
  require(r >= 0.0, "r must be >= 0");
  require(!alphas.empty() && !ns.empty(), "schedules must be non-empty");
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    require(alphas[j] > 1.0, "alpha schedule values must exceed 1");
    require(j == 0 || alphas[j] < alphas[j - 1], "alpha schedule must decrease");
  }
  for (std::size_t i = 0; i < ns.size(); ++i) {
    require(ns[i] >= 1, "n schedule values must be >= 1");
    require(i == 0 || ns[i] > ns[i - 1], "n schedule must increase");
  }
  GapReport rep;
  rep.r = r;
  rep.alphas.assign(alphas.begin(), alphas.end());
  rep.ns.assign(ns.begin(), ns.end());
  rep.base_shannon = shannon_entropy(p, cfg);
  if (!rep.base_shannon.is_finite())
    throw Error(ErrorKind::kRegionError, "Shannon entropy of the base distribution is infinite");
  for (double a : alphas) rep.base_renyi.push_back(entropy_at(p, a, cfg));

  std::optional<TailedDistribution> donor;
  if (std::isinf(r)) donor = log_power_donor();
  for (std::int64_t n : ns) {
    TailedDistribution pn = p;
    if (std::isinf(r)) {
      const std::int64_t n0 = p.infinite_support() ? std::max<std::int64_t>(n, 2)
                                                   : std::max(n, p.support_end() + 1);
      pn = splice_at(p, *donor, n0, cfg.term_budget);
    } else if (r > 0.0) {
      pn = solve_shannon_shift(p, r, n, cfg).distribution;
    }
    std::vector<EntropyValue> row;
    for (double a : alphas) row.push_back(entropy_at(pn, a, cfg));
    rep.table.push_back(std::move(row));
    rep.row_limits.push_back(shannon_entropy(pn, cfg));
  }
  rep.inner_then_outer = rep.row_limits.back().value();
  rep.outer_then_inner = rep.base_renyi.back().value();
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    rep.column_deviation = std::max(
        rep.column_deviation, std::abs(rep.table.back()[j].value() - rep.base_renyi[j].value()));
  }
  return rep;
}

std::string gap_report_csv(const GapReport& report) {
  std::string out = "n";
  for (double a : report.alphas) out += ",alpha=" + fmt(a);
  out += ",shannon\n";
  for (std::size_t i = 0; i < report.ns.size(); ++i) {
    out += std::to_string(report.ns[i]);
    for (const EntropyValue& v : report.table[i]) out += "," + fmt(v.value());
    out += "," + fmt(report.row_limits[i].value()) + "\n";
  }
  out += "# r," + fmt(report.r) + "\n";
  out += "# shannon_base," + fmt(report.base_shannon.value()) + "\n";
  out += "# renyi_base_last_alpha," + fmt(report.base_renyi.back().value()) + "\n";
  out += "# inner_then_outer," + fmt(report.inner_then_outer) + "\n";
  out += "# outer_then_inner," + fmt(report.outer_then_inner) + "\n";
  out += "# gap," + fmt(report.inner_then_outer - report.outer_then_inner) + "\n";
  out += "# column_deviation," + fmt(report.column_deviation) + "\n";
  return out;
}

}  // namespace renyi
