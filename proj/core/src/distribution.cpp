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

#include "renyi/distribution.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "renyi/error.hpp"
#include "renyi/series.hpp"

namespace renyi {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::kInvalidArgument, what);
}

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

// q^x, accurate also when q is within rounding of 1.
double geometric_power(const GeometricTail& g, double x) {
  if (g.complement > 1e-3) return std::pow(g.ratio, x);
  return std::exp(x * g.log_ratio());
}

// Exponent s treated as exactly 1 when it is within rounding of it, so the
// boundary case of the region (alpha == 1/beta) uses the k = 0 closed forms.
double snap_exponent(double s) { return std::abs(s - 1.0) <= 1e-12 ? 1.0 : s; }

std::int64_t prefix_len(const TailedDistribution& p) {
  return static_cast<std::int64_t>(p.prefix().size());
}

Interval geometric_sum(const GeometricTail& g, std::int64_t from, TermKind kind,
                       double alpha) {
  const double j0 = static_cast<double>(from - g.start);
  const double b = g.first_mass;
  const double w = g.complement;
  switch (kind) {
    case TermKind::kMass:
      return widen(Interval(b * geometric_power(g, j0) / w), 1e-13);
    case TermKind::kPower: {
      // Log domain: B^alpha underflows for the tiny first masses produced
      // by entropy shifts while the quotient stays representable.
      const double denom = -std::expm1(alpha * g.log_ratio());
      const double arg = alpha * std::log(b) + alpha * j0 * g.log_ratio() - std::log(denom);
      return widen(Interval(std::exp(arg)), 1e-13 + 4e-16 * std::abs(arg));
    }
    case TermKind::kEntropy: {
      const double head = b * geometric_power(g, j0);
      const double first = -std::log(b) * head / w;
      const double second = -g.log_ratio() * head * (j0 * w + g.ratio) / (w * w);
      return widen(Interval(first + second), 1e-13);
    }
  }
  return {};
}

// Decomposes term(p_n) for a power-log law p_n = c n^-beta (ln n)^-gamma into
// power-log pieces.
std::vector<series::Piece> power_log_pieces(double c, double beta, double gamma,
                                            TermKind kind, double alpha) {
  std::vector<series::Piece> pieces;
  switch (kind) {
    case TermKind::kMass:
      pieces.push_back({c, {snap_exponent(beta), -gamma, 0}});
      break;
    case TermKind::kPower:
      pieces.push_back({std::pow(c, alpha), {snap_exponent(alpha * beta), -alpha * gamma, 0}});
      break;
    case TermKind::kEntropy:
      pieces.push_back({-c * std::log(c), {snap_exponent(beta), -gamma, 0}});
      pieces.push_back({c * beta, {snap_exponent(beta), 1.0 - gamma, 0}});
      if (gamma != 0.0) pieces.push_back({c * gamma, {snap_exponent(beta), -gamma, 1}});
      break;
  }
  return pieces;
}

double apply_term(double p, TermKind kind, double alpha) {
  if (p <= 0.0) return 0.0;
  switch (kind) {
    case TermKind::kMass: return p;
    case TermKind::kPower: return std::pow(p, alpha);
    case TermKind::kEntropy: return -p * std::log(p);
  }
  return 0.0;
}

// d/dx ln p(x) = slope + inv / x + inv_log / (x ln x) for the tail laws.
struct LogSlope {
  double slope = 0.0;
  double inv = 0.0;
  double inv_log = 0.0;
};

LogSlope log_slope(const TailLaw& tail) {
  return std::visit(Overloaded{
                        [](const FiniteSupport&) { return LogSlope{}; },
                        [](const GeometricTail& g) { return LogSlope{g.log_ratio(), 0, 0}; },
                        [](const PowerTail& t) { return LogSlope{0, -t.beta, 0}; },
                        [](const LogPowerTail& t) { return LogSlope{0, -t.beta, -t.gamma}; },
                    },
                    tail);
}

// Index from which the log-ratio derivative of p/q has a fixed sign, and
// that sign (-1, 0, +1).
std::pair<std::int64_t, int> ratio_monotone_from(const TailLaw& p, const TailLaw& q) {
  const LogSlope a = log_slope(p);
  const LogSlope b = log_slope(q);
  const double ds = a.slope - b.slope;
  const double di = a.inv - b.inv;
  const double dl = a.inv_log - b.inv_log;
  const double ln2 = std::log(2.0);
  if (ds != 0.0) {
    const double n = (std::abs(di) + std::abs(dl) / ln2) / std::abs(ds) + 2.0;
    if (n > 9e15) return {std::numeric_limits<std::int64_t>::max(), 0};
    return {static_cast<std::int64_t>(std::ceil(n)), ds > 0 ? 1 : -1};
  }
  if (di != 0.0) {
    const double ln_n = std::abs(dl) / std::abs(di);
    if (ln_n > 36.0) return {std::numeric_limits<std::int64_t>::max(), 0};
    return {static_cast<std::int64_t>(std::ceil(std::exp(ln_n))) + 2, di > 0 ? 1 : -1};
  }
  if (dl != 0.0) return {3, dl > 0 ? 1 : -1};
  return {2, 0};
}

// ln p_n for a parametric law, usable far past where p_n underflows.
double log_tail_pmf(const TailLaw& tail, double n) {
  return std::visit(
      Overloaded{
          [](const FiniteSupport&) { return -std::numeric_limits<double>::infinity(); },
          [n](const GeometricTail& g) {
            return std::log(g.first_mass) + (n - static_cast<double>(g.start)) * g.log_ratio();
          },
          [n](const PowerTail& t) { return std::log(t.scale) - t.beta * std::log(n); },
          [n](const LogPowerTail& t) {
            return std::log(t.scale) - t.beta * std::log(n) - t.gamma * std::log(std::log(n));
          },
      },
      tail);
}

// First k >= n with sign * ln(p_k / q_k) > 0, given that the log ratio is
// monotone in that direction from n on. Returns 0 past the index range.
std::int64_t crossover(const TailLaw& p, const TailLaw& q, int sign, std::int64_t n) {
  auto past = [&](std::int64_t k) {
    const double x = static_cast<double>(k);
    return sign * (log_tail_pmf(p, x) - log_tail_pmf(q, x)) > 0.0;
  };
  constexpr std::int64_t kCap = std::int64_t{1} << 62;
  std::int64_t lo = n, hi = n;
  while (!past(hi)) {
    if (hi >= kCap / 2) return 0;
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (past(mid) ? hi : lo) = mid;
  }
  return past(lo) ? lo : hi;
}

Interval abs_interval(Interval x) {
  if (x.lo >= 0.0) return x;
  if (x.hi <= 0.0) return -x;
  return {0.0, std::max(-x.lo, x.hi)};
}

// sum_{k>=n} |p_k - q_k| for two power-type tails. ln(p_k/q_k) has at most
// one turning point, so the sign of p_k - q_k changes at most twice and each
// constant-sign run is a difference of tail masses.
Interval power_type_remainder(const TailedDistribution& p, const TailedDistribution& q,
                              std::int64_t n, double tol, std::uint64_t budget) {
  constexpr std::int64_t kCap = std::int64_t{1} << 62;
  auto log_ratio = [&](std::int64_t k) {
    const double x = static_cast<double>(k);
    return log_tail_pmf(p.tail(), x) - log_tail_pmf(q.tail(), x);
  };
  auto sgn = [](double v) { return (v > 0.0) - (v < 0.0); };
  const LogSlope a = log_slope(p.tail());
  const LogSlope b = log_slope(q.tail());
  const double di = a.inv - b.inv;
  const double dl = a.inv_log - b.inv_log;

  std::vector<std::int64_t> ends{n};
  if (di != 0.0 && dl != 0.0) {
    const double lx = -dl / di;
    if (lx > std::log(static_cast<double>(n)) && lx < std::log(static_cast<double>(kCap)) - 1) {
      ends.push_back(static_cast<std::int64_t>(std::exp(lx)));
    }
  }
  ends.push_back(kCap);

  std::vector<std::int64_t> cuts{n};
  for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
    std::int64_t lo = ends[i], hi = ends[i + 1];
    const int s_lo = sgn(log_ratio(lo));
    const int s_hi = sgn(log_ratio(hi));
    if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) continue;
    while (hi - lo > 1) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      (sgn(log_ratio(mid)) == s_hi ? hi : lo) = mid;
    }
    cuts.push_back(hi);
  }

  auto diff_at = [&](std::int64_t k) {
    return tail_mass(p, k, tol, budget) - tail_mass(q, k, tol, budget);
  };
  Interval total(0.0);
  double fuzz = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    total = total + abs_interval(diff_at(cuts[i]) - diff_at(cuts[i + 1]));
    // Terms next to a cut are nearly equal; cover misplacing it.
    fuzz += 4e-12 * (p.pmf(cuts[i + 1]) + q.pmf(cuts[i + 1]));
  }
  // Up to the cap the sign is fixed after the last cut. Beyond it the log
  // ratio is monotone, so the sign only flips if it is heading toward zero.
  const std::int64_t last = cuts.back();
  const int direction = di != 0.0 ? sgn(di) : sgn(dl);
  const int at_cap = sgn(log_ratio(kCap));
  if (direction == 0 || at_cap == 0 || at_cap == direction) {
    total = total + abs_interval(diff_at(last));
  } else {
    const Interval far = diff_at(kCap);
    total = total + abs_interval(diff_at(last) - far);
    const Interval tp = tail_mass(p, kCap, tol, budget);
    const Interval tq = tail_mass(q, kCap, tol, budget);
    total = total + Interval(abs_interval(far).lo, round_up(tp.hi + tq.hi));
  }
  return {std::max(0.0, round_down(total.lo - fuzz)), round_up(total.hi + 2 * fuzz)};
}

}  // namespace

GeometricTail GeometricTail::with_ratio(double first_mass, double ratio, std::int64_t start) {
  return {first_mass, ratio, 1.0 - ratio, start};
}

GeometricTail GeometricTail::with_complement(double first_mass, double complement,
                                             std::int64_t start) {
  return {first_mass, 1.0 - complement, complement, start};
}

double GeometricTail::log_ratio() const { return std::log1p(-complement); }

void validate(const TailLaw& tail) {
  std::visit(Overloaded{
                 [](const FiniteSupport&) {},
                 [](const GeometricTail& g) {
                   require(finite_positive(g.first_mass), "geometric tail needs B > 0");
                   require(g.complement > 0.0 && g.complement < 1.0 && g.ratio > 0.0 &&
                               g.ratio <= 1.0,
                           "geometric tail needs 0 < q < 1");
                   require(g.start >= 1, "geometric tail needs start >= 1");
                 },
                 [](const PowerTail& t) {
                   require(finite_positive(t.scale), "power tail needs c > 0");
                   require(std::isfinite(t.beta) && t.beta > 1.0, "power tail needs beta > 1");
                   require(t.start >= 1, "power tail needs start >= 1");
                 },
                 [](const LogPowerTail& t) {
                   require(finite_positive(t.scale), "log-power tail needs c > 0");
                   require(std::isfinite(t.beta) && t.beta >= 1.0,
                           "log-power tail needs beta >= 1");
                   require(std::isfinite(t.gamma) && t.gamma >= 0.0,
                           "log-power tail needs gamma >= 0");
                   require(t.beta > 1.0 || t.gamma > 1.0,
                           "log-power tail with beta = 1 needs gamma > 1");
                   require(t.start >= 2, "log-power tail needs start >= 2");
                 },
             },
             tail);
}

bool is_finite(const TailLaw& tail) { return std::holds_alternative<FiniteSupport>(tail); }

std::int64_t tail_start(const TailLaw& tail) {
  return std::visit(Overloaded{
                        [](const FiniteSupport&) -> std::int64_t { return 0; },
                        [](const auto& t) -> std::int64_t { return t.start; },
                    },
                    tail);
}

double tail_scale(const TailLaw& tail) {
  return std::visit(Overloaded{
                        [](const FiniteSupport&) { return 0.0; },
                        [](const GeometricTail& g) { return g.first_mass; },
                        [](const auto& t) { return t.scale; },
                    },
                    tail);
}

TailLaw with_scale(const TailLaw& tail, double scale) {
  return std::visit(Overloaded{
                        [](const FiniteSupport& f) -> TailLaw { return f; },
                        [&](GeometricTail g) -> TailLaw {
                          g.first_mass = scale;
                          return g;
                        },
                        [&](auto t) -> TailLaw {
                          t.scale = scale;
                          return t;
                        },
                    },
                    tail);
}

TailLaw with_start(const TailLaw& tail, std::int64_t start) {
  return std::visit(Overloaded{
                        [](const FiniteSupport& f) -> TailLaw { return f; },
                        [&](auto t) -> TailLaw {
                          t.start = start;
                          return t;
                        },
                    },
                    tail);
}

double tail_pmf(const TailLaw& tail, std::int64_t n) {
  const std::int64_t start = tail_start(tail);
  if (start == 0 || n < start) return 0.0;
  const double x = static_cast<double>(n);
  return std::visit(Overloaded{
                        [](const FiniteSupport&) { return 0.0; },
                        [&](const GeometricTail& g) {
                          return g.first_mass * geometric_power(g, static_cast<double>(n - g.start));
                        },
                        [&](const PowerTail& t) { return t.scale * std::pow(x, -t.beta); },
                        [&](const LogPowerTail& t) {
                          double v = t.scale * std::pow(x, -t.beta);
                          if (t.gamma != 0.0) v *= std::pow(std::log(x), -t.gamma);
                          return v;
                        },
                    },
                    tail);
}

Interval tail_law_sum(const TailLaw& tail, std::int64_t from, TermKind kind, double alpha,
                      double tol, std::uint64_t budget) {
  if (is_finite(tail)) return Interval(0.0);
  require(from >= tail_start(tail), "tail sum must begin at or after the tail start");
  if (kind == TermKind::kPower) {
    require(alpha > 0.0, "power sums over an infinite tail need alpha > 0");
  }
  auto term = [&](double x) {
    return apply_term(tail_pmf(tail, static_cast<std::int64_t>(x)), kind, alpha);
  };
  return std::visit(
      Overloaded{
          [](const FiniteSupport&) { return Interval(0.0); },
          [&](const GeometricTail& g) { return geometric_sum(g, from, kind, alpha); },
          [&](const PowerTail& t) {
            const auto pieces = power_log_pieces(t.scale, t.beta, 0.0, kind, alpha);
            return series::sum_series(term, pieces, from, tol, budget);
          },
          [&](const LogPowerTail& t) {
            const auto pieces = power_log_pieces(t.scale, t.beta, t.gamma, kind, alpha);
            return series::sum_series(term, pieces, from, tol, budget);
          },
      },
      tail);
}

TailedDistribution TailedDistribution::make(std::vector<double> prefix, TailLaw tail,
                                            double tolerance) {
  for (double p : prefix) require(std::isfinite(p) && p >= 0.0, "masses must be finite and >= 0");
  validate(tail);
  const auto m = static_cast<std::int64_t>(prefix.size());
  if (is_finite(tail)) {
    bool any = false;
    for (double p : prefix) any = any || p > 0.0;
    require(any, "finite-support distribution needs a positive mass");
  } else {
    require(tail_start(tail) >= m + 1, "tail must start after the explicit prefix");
  }

  series::CertifiedSum acc;
  for (double p : prefix) acc.add(p);
  Interval mass = acc.value();
  if (!is_finite(tail)) {
    mass = mass + tail_law_sum(tail, tail_start(tail), TermKind::kMass, 1.0,
                              std::min(tolerance / 4, 1e-12));
  }
  if (!(mass.lo <= 1.0 + tolerance && mass.hi >= 1.0 - tolerance)) {
    throw Error(ErrorKind::kInvalidArgument,
                "masses sum to [" + std::to_string(mass.lo) + ", " + std::to_string(mass.hi) +
                    "], not 1");
  }

  TailedDistribution d;
  d.prefix_ = std::move(prefix);
  d.tail_ = std::move(tail);
  d.mass_ = mass;
  return d;
}

TailedDistribution TailedDistribution::finite(std::vector<double> masses, double tolerance) {
  return make(std::move(masses), FiniteSupport{}, tolerance);
}

std::int64_t TailedDistribution::support_end() const {
  if (infinite_support()) return 0;
  for (std::int64_t i = static_cast<std::int64_t>(prefix_.size()); i > 0; --i) {
    if (prefix_[i - 1] > 0.0) return i;
  }
  return 0;
}

std::int64_t TailedDistribution::support_size() const {
  if (infinite_support()) return std::numeric_limits<std::int64_t>::max();
  std::int64_t count = 0;
  for (double p : prefix_) count += p > 0.0;
  return count;
}

double TailedDistribution::pmf(std::int64_t n) const {
  require(n >= 1, "pmf index must be >= 1");
  if (n <= static_cast<std::int64_t>(prefix_.size())) return prefix_[n - 1];
  return tail_pmf(tail_, n);
}

double pmf(const TailedDistribution& p, std::int64_t n) { return p.pmf(n); }

MassEnclosure tail_mass(const TailedDistribution& p, std::int64_t n0, double eps,
                        std::uint64_t budget) {
  require(n0 >= 1, "tail_mass needs n0 >= 1");
  require(eps > 0.0, "tail_mass needs eps > 0");
  series::CertifiedSum acc;
  for (std::int64_t n = n0; n <= prefix_len(p); ++n) acc.add(p.prefix()[n - 1]);
  Interval total = acc.value();
  if (p.infinite_support()) {
    const std::int64_t from = std::max(n0, tail_start(p.tail()));
    total = total + tail_law_sum(p.tail(), from, TermKind::kMass, 1.0, eps / 2, budget);
  }
  total.lo = std::max(total.lo, 0.0);
  if (total.width() > eps) throw Error(ErrorKind::kBudgetExceeded, "tail mass enclosure too wide");
  return total;
}

TailedDistribution normalize(std::vector<double> prefix, TailLaw tail, double eps,
                             std::uint64_t budget) {
  require(eps > 0.0, "normalize needs eps > 0");
  for (double p : prefix) require(std::isfinite(p) && p >= 0.0, "masses must be finite and >= 0");
  series::CertifiedSum acc;
  for (double p : prefix) acc.add(p);
  const Interval head = acc.value();
  if (head.lo > 1.0 + eps / 4) {
    throw Error(ErrorKind::kImpossibleNormalization, "prefix masses exceed 1");
  }
  if (is_finite(tail)) {
    if (head.hi < 1.0 - eps) {
      throw Error(ErrorKind::kImpossibleNormalization,
                  "finite support with prefix mass below 1 has nothing to rescale");
    }
    return TailedDistribution::make(std::move(prefix), tail, eps);
  }
  const double remaining = 1.0 - head.mid();
  if (!(remaining > 0.0)) {
    throw Error(ErrorKind::kImpossibleNormalization, "no mass left for an infinite tail");
  }
  if (tail_start(tail) <= static_cast<std::int64_t>(prefix.size())) {
    tail = with_start(tail, static_cast<std::int64_t>(prefix.size()) + 1);
  }
  const TailLaw unit = with_scale(tail, 1.0);
  validate(unit);
  // Relative width of the unit-scale mass translates into absolute width of
  // the rescaled tail mass at most `remaining`.
  const Interval unit_mass =
      tail_law_sum(unit, tail_start(unit), TermKind::kMass, 1.0, std::min(eps / 4, 1e-13), budget);
  const double scale = remaining / unit_mass.mid();
  TailLaw scaled = with_scale(tail, scale);
  return TailedDistribution::make(std::move(prefix), std::move(scaled), eps);
}

MassEnclosure total_variation(const TailedDistribution& p, const TailedDistribution& q,
                              double eps, std::uint64_t budget) {
  require(eps > 0.0, "total_variation needs eps > 0");
  if (p == q) return Interval(0.0);
  const std::int64_t m = std::max(prefix_len(p), prefix_len(q));
  const bool p_inf = p.infinite_support();
  const bool q_inf = q.infinite_support();
  const double sub_tol = eps / 8;

  if (!p_inf && !q_inf) {
    series::CertifiedSum acc;
    for (std::int64_t n = 1; n <= m; ++n) {
      const double a = p.pmf(n), b = q.pmf(n);
      const double e = 4 * std::numeric_limits<double>::epsilon() * (a + b);
      acc.add(Interval(std::abs(a - b) - e, std::abs(a - b) + e));
    }
    Interval v = acc.value();
    v.lo = std::max(v.lo, 0.0);
    return v;
  }

  // Index from which both laws are in their parametric regime.
  std::int64_t ready = m + 1;
  if (p_inf) ready = std::max(ready, tail_start(p.tail()));
  if (q_inf) ready = std::max(ready, tail_start(q.tail()));
  const std::int64_t regime = ready;
  int sign = 0;
  if (p_inf && q_inf) {
    const auto [from, s] = ratio_monotone_from(p.tail(), q.tail());
    ready = std::max(ready, from);
    sign = s;
  }

  const bool power_type = p_inf && q_inf && log_slope(p.tail()).slope == 0.0 &&
                          log_slope(q.tail()).slope == 0.0;
  bool no_crossover = false;
  auto certified_remainder = [&](std::int64_t n, double a, double b) -> std::optional<Interval> {
    if (power_type && n >= regime) return power_type_remainder(p, q, n, eps / 32, budget);
    if (n < ready) return std::nullopt;
    if (!q_inf) return tail_mass(p, n, sub_tol, budget);
    if (!p_inf) return tail_mass(q, n, sub_tol, budget);
    const double scale = std::max(a, b);
    const double margin = 1e-12 * scale;
    const bool ok = sign == 0 || (sign > 0 && a - b > margin) || (sign < 0 && b - a > margin);
    if (!ok && no_crossover) return std::nullopt;
    const Interval diff = tail_mass(p, n, sub_tol, budget) - tail_mass(q, n, sub_tol, budget);
    if (ok) return abs_interval(diff);
    // One sign change left: split the remainder at the crossover.
    const std::int64_t k = crossover(p.tail(), q.tail(), sign, n);
    if (k == 0) {
      no_crossover = true;
      return std::nullopt;
    }
    const Interval after = tail_mass(p, k, sub_tol, budget) - tail_mass(q, k, sub_tol, budget);
    Interval r = abs_interval(diff - after) + abs_interval(after);
    // Terms next to the crossover are nearly equal; cover misplacing it.
    const double fuzz = 4e-12 * (p.pmf(k) + q.pmf(k));
    return Interval(std::max(0.0, r.lo - fuzz), r.hi + 2 * fuzz);
  };

  series::CertifiedSum acc;
  std::int64_t next_checkpoint = std::max<std::int64_t>(64, ready);
  for (std::int64_t n = 1;; ++n) {
    const double a = p.pmf(n), b = q.pmf(n);
    if (auto rem = certified_remainder(n, a, b)) {
      Interval v = acc.value() + *rem;
      v.lo = std::max(v.lo, 0.0);
      return v;
    }
    if (n >= next_checkpoint) {
      // Generic bound: |tail_p - tail_q| <= rest <= tail_p + tail_q.
      next_checkpoint *= 2;
      const Interval tp = tail_mass(p, n, sub_tol, budget);
      const Interval tq = tail_mass(q, n, sub_tol, budget);
      const Interval rest(abs_interval(tp - tq).lo, round_up(tp.hi + tq.hi));
      Interval v = acc.value() + rest;
      const bool out_of_budget = static_cast<std::uint64_t>(n) > budget;
      if (v.width() <= eps || out_of_budget) {
        if (v.width() > eps) {
          throw Error(ErrorKind::kBudgetExceeded, "total variation enclosure too wide");
        }
        v.lo = std::max(v.lo, 0.0);
        return v;
      }
    }
    const double e = 1e-14 * (a + b);
    acc.add(Interval(std::abs(a - b) - e, std::abs(a - b) + e));
  }
}

}  // namespace renyi
