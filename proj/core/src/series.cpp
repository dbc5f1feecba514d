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

#include "renyi/series.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "renyi/error.hpp"

namespace renyi::series {
namespace {

constexpr double kUnit = std::numeric_limits<double>::epsilon() / 2;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Degree of the Taylor model used on each integration block.
constexpr int kDegree = 14;

// m_j(x) = int_0^1 t^j e^{-x t} dt for j = 0..kDegree + 1.
std::array<double, kDegree + 2> unit_moments(double x) {
  std::array<double, kDegree + 2> m{};
  if (x <= 30.0) {
    const double ex = std::exp(-x);
    for (int j = 0; j < kDegree + 2; ++j) {
      double term = 1.0 / (j + 1);
      double sum = term;
      for (int n = 1; n < 400; ++n) {
        term *= x / (j + 1 + n);
        sum += term;
        if (term < 1e-18 * sum) break;
      }
      m[j] = ex * sum;
    }
  } else {
    // Upward recurrence is stable once x exceeds the moment order.
    const double ex = std::exp(-x);
    m[0] = -std::expm1(-x) / x;
    for (int j = 1; j < kDegree + 2; ++j) m[j] = (j * m[j - 1] - ex) / x;
  }
  return m;
}

struct Block {
  Interval value;
  double remainder = 0.0;
  double rounding = 0.0;
};

// int_{u0}^{u0+delta} e^{-k u} u^a (ln u)^m du with a degree-kDegree Taylor
// model of u^a (ln u)^m at u0 and a Lagrange bound on the remainder.
Block integrate_block(double k, double a, int m, double u0, double delta) {
  const double rho = delta / u0;
  const double u1 = u0 + delta;
  const double lnu0 = m ? std::log(u0) : 0.0;
  const double lnu1 = m ? std::log(u1) : 0.0;
  const auto mom = unit_moments(k * delta);

  // p_j = (a)_j / j! rho^j,  d_j = d/da (a)_j / j! rho^j.
  double p = 1.0;
  double d = 0.0;
  double sum = 0.0;
  double abs_sum = 0.0;
  for (int j = 0; j <= kDegree; ++j) {
    if (j > 0) {
      const double f = (a - (j - 1)) * rho / j;
      d = d * f + p * rho / j;
      p *= f;
    }
    const double c = m ? (p * lnu0 + d) : p;
    sum += c * mom[j];
    abs_sum += std::abs(c * mom[j]);
  }
  const int j = kDegree + 1;
  const double f = (a - (j - 1)) * rho / j;
  const double d_next = d * f + p * rho / j;
  const double p_next = p * f;
  // u^{a-j} on the block is maximal at one endpoint.
  const double edge = std::max(1.0, std::pow(u1 / u0, a - j));
  const double rem_coef =
      edge * (m ? (std::abs(p_next) * lnu1 + std::abs(d_next)) : std::abs(p_next));

  const double scale = std::exp(-k * u0) * std::pow(u0, a) * delta;
  const double rounding = abs_sum * 64 * kUnit;
  Block b;
  b.rounding = scale * rounding;
  b.remainder = scale * rem_coef * mom[j] + b.rounding;
  b.value = widen(Interval(scale * sum), kLibmSlop);
  return b;
}

// Upper bound for the integral beyond u, or +inf when no bound applies yet.
double far_bound(double k, double a, int m, double u) {
  const double ln_u = std::log(u);
  double best = kInf;
  if (a < -1.0) {
    const double b = a + 1.0;
    const double closed =
        m ? std::pow(u, b) * (ln_u / -b + 1.0 / (b * b)) : std::pow(u, b) / -b;
    best = std::exp(-k * u) * closed;
  }
  if (k > 0.0) {
    const double slope = (a + (m ? 1.0 / ln_u : 0.0)) / u;
    if (slope <= k / 2) {
      const double v = 2.0 / k * std::pow(u, a) * (m ? ln_u : 1.0) * std::exp(-k * u);
      best = std::min(best, v);
    }
  }
  return best * (1 + 1e-12);
}

}  // namespace

double PowerLogTerm::operator()(double x) const {
  const double lx = std::log(x);
  double v = std::pow(x, -s);
  if (a != 0.0) v *= std::pow(lx, a);
  if (m) v *= std::log(lx);
  return v;
}

bool PowerLogTerm::summable() const {
  return s > 1.0 || (s == 1.0 && a < -1.0);
}

std::int64_t regularity_start(const PowerLogTerm& f) {
  if (!(f.s > 0.0)) throw Error(ErrorKind::kInvalidArgument, "power-log term needs s > 0");
  double y = std::log(1.5);
  if (f.m || f.a > 0.0) {
    const double big_a = std::abs(f.a) + f.m;
    const double big_b = big_a * big_a + std::abs(f.a) + 2.0 * f.m;
    const double qa = f.s * (f.s + 1.0);
    const double qb = (2.0 * f.s + 1.0) * big_a;
    const double root = (qb + std::sqrt(qb * qb + 4.0 * qa * big_b)) / (2.0 * qa);
    y = std::max({y, big_a / f.s, root});
    if (f.m) y = std::max(y, std::exp(1.0));
    y = y * (1 + 1e-9) + 1e-9;
  }
  if (y > 40.0) throw Error(ErrorKind::kBudgetExceeded, "term regular only beyond e^40");
  return std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(std::exp(y) + 0.5)));
}

Interval exp_power_log_integral(double k, double a, int m, double u0, double tol) {
  if (!(u0 > 0.0) || (m && u0 < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "integral lower limit out of domain");
  }
  if (std::abs(k) < 1e-15) k = 0.0;
  if (k < 0.0) throw Error(ErrorKind::kInvalidArgument, "divergent integral (k < 0)");
  if (k == 0.0) {
    if (!(a < -1.0)) throw Error(ErrorKind::kInvalidArgument, "divergent integral (a >= -1)");
    const double b = a + 1.0;
    const double ln_u = std::log(u0);
    const double v =
        m ? std::pow(u0, b) * (ln_u / -b + 1.0 / (b * b)) : std::pow(u0, b) / -b;
    return widen(Interval(v), 1e-13);
  }

  CertifiedSum acc(0.0);
  double rem_total = 0.0;
  double u = u0;
  for (int iter = 0; iter < 1'000'000; ++iter) {
    const double far = far_bound(k, a, m, u);
    if (far <= tol / 4) {
      Interval v = acc.value();
      return {round_down(v.lo - rem_total), round_up(v.hi + rem_total + far)};
    }
    double delta = std::min(0.25 * u, 40.0 / k);
    Block b = integrate_block(k, a, m, u, delta);
    // Halve until the remainder is negligible against the block value or
    // a small share of the tolerance.
    for (int h = 0; h < 60; ++h) {
      // Rounding does not shrink with delta, so only the truncation part is tested.
      const double allowed = std::max(1e-15 * std::abs(b.value.mid()), tol * 1e-4) + b.rounding;
      if (b.remainder <= allowed) break;
      delta *= 0.5;
      b = integrate_block(k, a, m, u, delta);
    }
    acc.add(b.value);
    rem_total += b.remainder;
    u += delta;
  }
  throw Error(ErrorKind::kBudgetExceeded, "integral did not converge within block budget");
}

Interval tail_integral(const PowerLogTerm& f, double x0, double tol) {
  const double u0 = std::log(x0);
  Interval v = exp_power_log_integral(f.s - 1.0, f.a, f.m, u0, tol);
  // log(x0) is faithful to an ulp; the integrand times that slack covers it.
  const double integrand = std::exp((1.0 - f.s) * u0) * std::pow(u0, f.a) *
                           (f.m ? std::log(u0) : 1.0);
  const double slack = 4.0 * integrand * u0 * kUnit;
  return {round_down(std::max(0.0, v.lo - slack)), round_up(v.hi + slack)};
}

double sandwich_gap(const PowerLogTerm& f, std::int64_t k) {
  const double x = static_cast<double>(k);
  return 0.5 * (f(x - 0.5) - f(x));
}

Interval tail_sum(const PowerLogTerm& f, std::int64_t k, double tol) {
  const double x = static_cast<double>(k);
  const Interval integral = tail_integral(f, x, tol);
  const Interval lo_edge = widen(Interval(0.5 * f(x)), kLibmSlop);
  const Interval hi_edge = widen(Interval(0.5 * f(x - 0.5)), kLibmSlop);
  return {round_down(integral.lo + lo_edge.lo), round_up(integral.hi + hi_edge.hi)};
}

void CertifiedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    comp_ += (sum_ - t) + x;
  } else {
    comp_ += (x - t) + sum_;
  }
  sum_ = t;
  abs_sum_ += std::abs(x);
  ++count_;
}

void CertifiedSum::add(Interval x) {
  const double mid = x.mid();
  add(mid);
  extra_lo_ += round_down(x.lo - mid);
  extra_hi_ += round_up(x.hi - mid);
}

Interval CertifiedSum::value() const {
  const double est = sum_ + comp_;
  const double n = static_cast<double>(count_);
  const double err = abs_sum_ * (term_rel_error_ + 4 * kUnit + 4 * n * kUnit * kUnit) +
                     std::abs(est) * 2 * kUnit;
  const double pad = (std::abs(extra_lo_) + std::abs(extra_hi_)) * 4 * kUnit;
  return {round_down(est - err + extra_lo_ - pad), round_up(est + err + extra_hi_ + pad)};
}

Interval sum_series(const std::function<double(double)>& term,
                    std::span<const Piece> pieces, std::int64_t start, double tol,
                    std::uint64_t budget) {
  std::int64_t k = std::max<std::int64_t>(start, 4);
  for (const Piece& p : pieces) {
    if (!p.term.summable()) throw Error(ErrorKind::kInvalidArgument, "tail piece is not summable");
    k = std::max(k, regularity_start(p.term));
  }
  auto over_budget = [&](std::int64_t upto) {
    return static_cast<std::uint64_t>(upto - start) > budget;
  };
  if (over_budget(k)) throw Error(ErrorKind::kBudgetExceeded, "regularity cutoff exceeds term budget");

  CertifiedSum acc;
  auto add_terms = [&](std::int64_t from, std::int64_t to) {
    for (std::int64_t n = from; n < to; ++n) acc.add(term(static_cast<double>(n)));
  };
  add_terms(start, k);

  auto gap_at = [&](std::int64_t cut) {
    double g = 0.0;
    for (const Piece& p : pieces) g += std::abs(p.scale) * sandwich_gap(p.term, cut);
    return g;
  };
  while (gap_at(k) > tol / 2) {
    const std::int64_t next = k * 2;
    if (over_budget(next)) {
      throw Error(ErrorKind::kBudgetExceeded, "explicit term budget exhausted before tolerance");
    }
    add_terms(k, next);
    k = next;
  }

  Interval total = acc.value();
  std::size_t active = 0;
  for (const Piece& p : pieces) active += p.scale != 0.0;
  for (const Piece& p : pieces) {
    if (p.scale == 0.0) continue;
    const double piece_tol = tol / (2.0 * static_cast<double>(active) * std::abs(p.scale));
    total = total + Interval(p.scale) * tail_sum(p.term, k, piece_tol);
  }
  return total;
}

}  // namespace renyi::series
