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

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "renyi/constructions.hpp"
#include "renyi/convergence.hpp"
#include "renyi/error.hpp"
#include "renyi/literal.hpp"

namespace renyi::cli {
namespace {

// Bad flag values detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

double parse_real(const std::string& text) {
  if (text == "inf" || text == "+inf" || text == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && !std::isnan(v)) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("not a number: '" + text + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

TailedDistribution parse_dist(const std::string& text) {
  try {
    return parse_distribution(text);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParseError) throw UsageError(e.what());
    throw;
  }
}

struct Globals {
  double base = 2.0;
  double eps = 1e-8;
  std::uint64_t budget = kDefaultTermBudget;
  std::string output = "text";

  EvalConfig config() const {
    EvalConfig cfg;
    cfg.base = base;
    cfg.eps = eps;
    cfg.term_budget = budget;
    try {
      cfg.validate();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    return cfg;
  }
  bool csv() const { return output == "csv"; }
};

std::string value_text(const EntropyValue& v, double base) { return v.to_string(base); }

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  const auto colon = split(text, ':');
  if (colon.size() == 3) {
    const double a = parse_real(colon[0]);
    const double b = parse_real(colon[1]);
    const double step = parse_real(colon[2]);
    if (!(step > 0) || !std::isfinite(a) || !std::isfinite(b) || b < a)
      throw UsageError("grid a:b:step needs finite a <= b and step > 0");
    const double count = std::floor((b - a) / step + 1e-9);
    if (count > 1e6) throw UsageError("grid has too many points");
    std::vector<double> out;
    for (int i = 0; i <= static_cast<int>(count); ++i) out.push_back(a + i * step);
    return out;
  }
  if (colon.size() != 1) throw UsageError("grid must be a:b:step or a comma list");
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_real(part));
  if (out.empty()) throw UsageError("empty grid");
  return out;
}

std::vector<std::int64_t> parse_index_grid(const std::string& text) {
  std::vector<std::int64_t> out;
  for (double v : parse_grid(text)) {
    if (!(v >= 1) || v != std::floor(v) || v > 9e15)
      throw UsageError("index grid values must be positive integers");
    out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

std::string emit_sweep_csv(const TailedDistribution& p, std::span<const double> grid,
                           const EvalConfig& cfg) {
  std::string out = "alpha,value,radius,divergent\n";
  for (double a : grid) {
    const EntropyValue v = entropy_at(p, a, cfg);
    out += fmt(a) + ",";
    if (v.is_finite()) {
      out += fmt(v.value()) + "," + fmt(v.radius()) + ",false\n";
    } else {
      out += "inf,0,true\n";
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Renyi entropy of distributions on the positive integers", "renyi"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--base", g.base, "logarithm base (default 2)");
  app.add_option("--eps", g.eps, "target error radius (default 1e-8)");
  app.add_option("--budget", g.budget, "maximum number of explicit terms");
  app.add_option("--output", g.output, "csv or text")->check(CLI::IsMember({"csv", "text"}));

  std::string dist, donor, alpha_text = "2", r_text = "1", alphas_text, ns_text;
  double tv = 0.01;
  std::int64_t n = 0;
  int count = 1;
  bool show = false;

  auto* eval = app.add_subcommand("eval", "entropy of order alpha (inf = min-entropy)");
  eval->add_option("--dist", dist, "distribution literal")->required();
  eval->add_option("--alpha", alpha_text, "order; values near 1 give the Shannon entropy");

  auto* region = app.add_subcommand("region", "convergence region of H_alpha");
  region->add_option("--dist", dist, "distribution literal")->required();

  auto* sweep = app.add_subcommand("sweep", "entropy over a grid of orders, as CSV");
  sweep->add_option("--dist", dist, "distribution literal")->required();
  sweep->add_option("--alphas", alphas_text, "a:b:step or comma list")->required();

  auto* splice = app.add_subcommand("splice", "nearby distribution with the donor's region");
  splice->add_option("--dist", dist, "distribution literal")->required();
  splice->add_option("--donor", donor, "donor literal (infinite support)")->required();
  splice->add_option("--tv", tv, "l1 distance budget (default 0.01)");

  auto* shift = app.add_subcommand("shift", "distributions near P with entropy raised by r");
  shift->add_option("--dist", dist, "distribution literal")->required();
  shift->add_option("--alpha", alpha_text, "order in (0, 1], 1 = Shannon")->required();
  shift->add_option("--r", r_text, "shift in log-base units, or inf")->required();
  auto* shift_n = shift->add_option("--n", n, "first prefix length (default: smallest admissible)");
  shift->add_option("--count", count, "number of sequence elements (default 1)");
  shift->add_flag("--show", show, "print the constructed distributions");

  auto* truncate = app.add_subcommand("truncate", "lump all mass from index n on");
  truncate->add_option("--dist", dist, "distribution literal")->required();
  truncate->add_option("--n", n, "index of the lumped mass, >= 2")->required();

  auto* demo = app.add_subcommand("demo-gap", "table of H_alpha(P_n) and both iterated limits");
  demo->add_option("--dist", dist, "distribution literal")->required();
  demo->add_option("--r", r_text, "shift in log-base units, or inf (default 1)");
  demo->add_option("--alphas", alphas_text, "decreasing orders above 1 (default 1+2^-k, k<=12)");
  demo->add_option("--ns", ns_text, "increasing prefix lengths (default 2:9:1)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    const EvalConfig cfg = g.config();
    if (eval->parsed()) {
      const TailedDistribution p = parse_dist(dist);
      const double alpha = parse_real(alpha_text);
      const EntropyValue v = entropy_at(p, alpha, cfg);
      if (g.csv()) {
        const double grid[] = {alpha};
        out << emit_sweep_csv(p, grid, cfg);
      } else {
        out << value_text(v, g.base) << "\n";
      }
    } else if (region->parsed()) {
      const ConvergenceRegion reg = critical_exponent(parse_dist(dist));
      if (g.csv()) {
        out << "alpha_c,includes_boundary\n"
            << fmt(reg.alpha_c) << "," << (reg.includes_boundary ? "true" : "false") << "\n";
      } else {
        out << reg.to_string() << "\n";
      }
    } else if (sweep->parsed()) {
      const TailedDistribution p = parse_dist(dist);
      const std::vector<double> grid = parse_grid(alphas_text);
      if (g.csv()) {
        out << emit_sweep_csv(p, grid, cfg);
      } else {
        for (double a : grid) out << fmt(a) << "  " << value_text(entropy_at(p, a, cfg), g.base) << "\n";
      }
    } else if (splice->parsed()) {
      const TailedDistribution p = parse_dist(dist);
      const TailedDistribution d = parse_dist(donor);
      const TailedDistribution s = splice_to_gamma(p, d, tv, cfg.term_budget);
      const Interval dist_tv = total_variation(p, s, 1e-9, cfg.term_budget);
      const std::string reg = critical_exponent(s).to_string();
      if (g.csv()) {
        out << "key,value\ndistribution,\"" << format_distribution(s) << "\"\nregion,\"" << reg
            << "\"\ntv_lo," << fmt(dist_tv.lo) << "\ntv_hi," << fmt(dist_tv.hi) << "\n";
      } else {
        out << "distribution: " << format_distribution(s) << "\nregion: " << reg
            << "\ndistance: [" << fmt(dist_tv.lo) << ", " << fmt(dist_tv.hi) << "]\n";
      }
    } else if (shift->parsed()) {
      const TailedDistribution p = parse_dist(dist);
      const double alpha = parse_real(alpha_text);
      const double r = parse_real(r_text);
      if (count < 1) throw UsageError("--count must be >= 1");
      if (shift_n->count() > 0 && n < 1) throw UsageError("--n must be >= 1");
      if (g.csv()) out << "n,B,q,value,radius,tv_lo,tv_hi\n";
      auto emit = [&](std::int64_t idx, double b, double q, const TailedDistribution& pn) {
        const EntropyValue v = entropy_at(pn, alpha, cfg);
        const Interval d = total_variation(p, pn, 1e-9, cfg.term_budget);
        if (g.csv()) {
          out << idx << "," << fmt(b) << "," << fmt(q) << ","
              << (v.is_finite() ? fmt(v.value()) + "," + fmt(v.radius()) : "inf,0") << ","
              << fmt(d.lo) << "," << fmt(d.hi) << "\n";
        } else {
          out << "n=" << idx << "  H=" << value_text(v, g.base) << "  tv=[" << fmt(d.lo) << ", "
              << fmt(d.hi) << "]";
          if (std::isfinite(b)) out << "  B=" << fmt(b) << "  q=" << fmt(q);
          out << "\n";
          if (show) out << "  " << format_distribution(pn) << "\n";
        }
      };
      if (std::isinf(r) || r == 0.0) {
        const auto seq = shift_sequence(p, alpha, r, count, cfg);
        const double nan = std::numeric_limits<double>::quiet_NaN();
        for (std::size_t j = 0; j < seq.size(); ++j) emit(static_cast<std::int64_t>(j + 1), nan, nan, seq[j]);
      } else {
        const bool shannon = std::abs(alpha - 1.0) < cfg.alpha_one_window;
        const std::int64_t first =
            shift_n->count() > 0 ? n : (shannon ? find_shannon_n0(p, r, cfg) : find_n0(p, alpha, r, cfg));
        for (int j = 0; j < count; ++j) {
          const ShiftSolution sol = shannon ? solve_shannon_shift(p, r, first + j, cfg)
                                            : solve_shift(p, alpha, r, first + j, cfg);
          emit(sol.n, sol.B, sol.q, sol.distribution);
        }
      }
    } else if (truncate->parsed()) {
      const TailedDistribution q = truncate_distribution(parse_dist(dist), n, cfg.term_budget);
      if (g.csv()) {
        out << "index,mass\n";
        for (std::size_t i = 0; i < q.prefix().size(); ++i) out << i + 1 << "," << fmt(q.prefix()[i]) << "\n";
      } else {
        out << format_distribution(q) << "\n";
      }
    } else if (demo->parsed()) {
      const TailedDistribution p = parse_dist(dist);
      const double r = parse_real(r_text);
      const std::vector<double> alphas =
          alphas_text.empty() ? dyadic_schedule(12) : parse_grid(alphas_text);
      const std::vector<std::int64_t> ns =
          ns_text.empty() ? parse_index_grid("2:9:1") : parse_index_grid(ns_text);
      out << gap_report_csv(interchange_gap_demo(p, r, alphas, ns, cfg));
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace renyi::cli
