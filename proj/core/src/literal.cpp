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

#include "renyi/literal.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <vector>

#include "renyi/error.hpp"

namespace renyi {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool peek_char(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek_char(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_ws();
    const std::size_t b = pos_;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(b, pos_ - b));
  }

  double raw_number() {
    skip_ws();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc()) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  // number ['/' number]
  double number() {
    double v = raw_number();
    if (accept('/')) v /= raw_number();
    return v;
  }

  // Scale argument: a number, or `c` / `auto` for normalization.
  std::optional<double> scale() {
    skip_ws();
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      const std::string w = word();
      if (w == "c" || w == "auto" || w == "B") return std::nullopt;
      fail("unknown scale token '" + w + "'");
    }
    return number();
  }

  std::int64_t integer() {
    const double v = number();
    if (v != std::floor(v) || v < 0 || v > 9e15) fail("expected a non-negative integer");
    return static_cast<std::int64_t>(v);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kParseError,
                what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct ParsedTail {
  TailLaw law = FiniteSupport{};
  bool needs_normalization = false;
  bool has_start = false;
};

ParsedTail parse_law(Parser& in) {
  const std::string name = in.word();
  ParsedTail out;
  if (name == "none") return out;
  in.expect('(');
  const auto scale = in.scale();
  out.needs_normalization = !scale.has_value();
  const double s = scale.value_or(1.0);
  auto maybe_start = [&](std::int64_t& start) {
    if (in.accept(',')) {
      start = in.integer();
      out.has_start = true;
    }
    in.expect(')');
  };
  if (name == "geometric") {
    in.expect(',');
    GeometricTail g;
    // q may be written as 1-w to keep ratios near 1 exact.
    const std::size_t save = in.pos_;
    const double lead = in.raw_number();
    if (lead == 1.0 && in.accept('-')) {
      g = GeometricTail::with_complement(s, in.number(), 1);
    } else {
      in.pos_ = save;
      g = GeometricTail::with_ratio(s, in.number(), 1);
    }
    maybe_start(g.start);
    out.law = g;
  } else if (name == "power") {
    PowerTail t{s, 2.0, 1};
    in.expect(',');
    t.beta = in.number();
    maybe_start(t.start);
    out.law = t;
  } else if (name == "logpower") {
    LogPowerTail t{s, 1.0, 2.0, 2};
    in.expect(',');
    t.beta = in.number();
    in.expect(',');
    t.gamma = in.number();
    maybe_start(t.start);
    out.law = t;
  } else {
    in.fail("unknown tail law '" + name + "'");
  }
  return out;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

TailedDistribution parse_distribution(std::string_view text, double tolerance) {
  Parser in(text);
  std::vector<double> prefix;
  ParsedTail tail;
  bool seen_tail = false;
  if (in.done()) in.fail("empty distribution literal");
  while (!in.done()) {
    const std::size_t save = in.pos_;
    const std::string key = in.word();
    if (key == "prefix" && in.accept('=')) {
      in.expect('[');
      if (!in.accept(']')) {
        do {
          prefix.push_back(in.number());
        } while (in.accept(','));
        in.expect(']');
      }
    } else if (key == "tail" && in.accept('=')) {
      tail = parse_law(in);
      seen_tail = true;
    } else if (!seen_tail && !key.empty()) {
      in.pos_ = save;
      tail = parse_law(in);
      seen_tail = true;
    } else {
      in.fail("expected 'prefix = [...]' or 'tail = <law>'");
    }
    if (!in.accept(';') && !in.done()) in.fail("expected ';'");
  }

  const auto m = static_cast<std::int64_t>(prefix.size());
  if (!tail.has_start && !is_finite(tail.law)) {
    tail.law = with_start(tail.law, std::max<std::int64_t>(m + 1, tail_start(tail.law)));
  }
  if (tail.needs_normalization) {
    return normalize(std::move(prefix), std::move(tail.law), tolerance);
  }
  return TailedDistribution::make(std::move(prefix), std::move(tail.law), tolerance);
}

std::string format_tail(const TailLaw& tail) {
  if (const auto* g = std::get_if<GeometricTail>(&tail)) {
    const std::string q = (1.0 - g->ratio == g->complement && g->complement > 1e-6)
                              ? fmt(g->ratio)
                              : "1-" + fmt(g->complement);
    return "geometric(" + fmt(g->first_mass) + ", " + q + ", " + std::to_string(g->start) + ")";
  }
  if (const auto* t = std::get_if<PowerTail>(&tail)) {
    return "power(" + fmt(t->scale) + ", " + fmt(t->beta) + ", " + std::to_string(t->start) + ")";
  }
  if (const auto* t = std::get_if<LogPowerTail>(&tail)) {
    return "logpower(" + fmt(t->scale) + ", " + fmt(t->beta) + ", " + fmt(t->gamma) + ", " +
           std::to_string(t->start) + ")";
  }
  return "none";
}

std::string format_distribution(const TailedDistribution& p) {
  std::string out = "prefix = [";
  for (std::size_t i = 0; i < p.prefix().size(); ++i) {
    if (i) out += ", ";
    out += fmt(p.prefix()[i]);
  }
  out += "]; tail = " + format_tail(p.tail());
  return out;
}

}  // namespace renyi
