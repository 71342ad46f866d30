// Copyright 2026 The picard-range Authors
// SPDX-License-Identifier: Apache-2.0

#include "picard/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "picard/murty.hpp"

namespace picard {
namespace {

Value isqrt(Value n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  auto r = static_cast<Value>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Value square(Value x) { return x * x; }

std::vector<Value> members_between(const PicardSet& s, Value lo_exclusive, Value hi_exclusive) {
  std::vector<Value> out;
  for (Value x = std::max<Value>(lo_exclusive + 1, 0); x < hi_exclusive; ++x) {
    if (s.contains(x)) out.push_back(x);
  }
  return out;
}

std::string join(const std::vector<Value>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  return os.str();
}

std::string shape_text(const Shape& shape) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < shape.size(); ++i) {
    os << (i ? ", " : "") << '(' << shape[i].m << ',' << shape[i].k << ',' << shape[i].rho << ')';
  }
  os << '}';
  return os.str();
}

std::vector<Shape> normalized(std::vector<Shape> shapes) {
  for (Shape& s : shapes) std::sort(s.begin(), s.end());
  std::sort(shapes.begin(), shapes.end());
  return shapes;
}

Check gap_check(ReachTable& table, int g, const std::string& name, Value lo, Value hi, int min_g) {
  const auto inside = members_between(table.compute_R(g), lo, hi);
  Check c{name, g >= min_g, inside.empty(), {}};
  std::ostringstream os;
  os << "window (" << lo << ", " << hi << ")";
  if (!c.applicable) os << "; requires g >= " << min_g;
  if (inside.empty()) {
    os << " contains no member";
  } else {
    os << " contains rho = " << join(inside);
  }
  c.detail = os.str();
  return c;
}

Check shape_check(ReachTable& table, int g, const std::string& name, Value rho, int min_g,
                  std::vector<Shape> expected) {
  Check c{name, g >= min_g, false, {}};
  std::ostringstream os;
  os << "rho = " << rho;
  if (!c.applicable) {
    os << "; requires g >= " << min_g;
    c.detail = os.str();
    return c;
  }
  const auto found = table.enumerate_shapes(g, rho, expected.size() + 8);
  c.passed = !found.truncated && normalized(found.shapes) == normalized(expected);
  os << "; " << found.shapes.size() << (found.truncated ? "+" : "") << " shape(s):";
  for (const Shape& s : found.shapes) os << ' ' << shape_text(s);
  c.detail = os.str();
  return c;
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  const __int128 lhs = static_cast<__int128>(num) * other.den;
  const __int128 rhs = static_cast<__int128>(other.num) * den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational density(ReachTable& table, int g) {
  if (g < 1) throw std::invalid_argument("density: g must be positive");
  const PicardSet& r = table.compute_R(g);
  return Rational::make(static_cast<std::int64_t>(r.size()), square(g));
}

Value prefix_complete(ReachTable& table, int g) {
  if (g < 1) throw std::invalid_argument("prefix_complete: g must be positive");
  const PicardSet& r = table.compute_R(g);
  const auto& runs = r.runs();
  if (runs.empty() || runs.front().lo > 1 || runs.front().hi < 1) return 0;
  return runs.front().hi;
}

bool below_b_g(int g, Value n) {
  const Value x = square(g) + 8 * static_cast<Value>(g) + 1 - n;
  if (x <= 0) return false;
  const __int128 lhs = static_cast<__int128>(32) * g * g * g;
  return lhs < static_cast<__int128>(x) * x;
}

Value count_below_b_g(int g) {
  if (g < 1) throw std::invalid_argument("count_below_b_g: g must be positive");
  // Predicate holds iff X >= isqrt(32 g^3) + 1, with X = g^2 + 8g + 1 - n.
  const Value x_min = isqrt(32 * static_cast<Value>(g) * g * g) + 1;
  const Value x_max = square(g) + 8 * static_cast<Value>(g);  // n = 1
  return std::max<Value>(0, x_max - x_min + 1);
}

std::array<Value, 4> four_square(Value m) {
  if (m < 0) throw std::invalid_argument("four_square: m must be non-negative");
  for (Value a = isqrt(m); a >= 0; --a) {
    const Value ra = m - a * a;
    for (Value b = std::min(a, isqrt(ra)); b >= 0; --b) {
      const Value rb = ra - b * b;
      for (Value c = std::min(b, isqrt(rb)); c >= 0; --c) {
        const Value rc = rb - c * c;
        const Value d = isqrt(rc);
        if (d * d == rc && d <= c) return {a, b, c, d};
      }
    }
  }
  throw std::logic_error("four_square: no representation found");
}

std::optional<Decomposition> lombardo_realize(Value n, int g) {
  if (g < 1 || n < 1 || n > square(g)) throw std::invalid_argument("lombardo_realize: need 1 <= n <= g^2");
  std::vector<Value> parts;
  const Value n1 = isqrt(n - 1);
  if (n1 > 0) parts.push_back(n1);
  for (Value p : four_square(n - 1 - n1 * n1)) {
    if (p > 0) parts.push_back(p);
  }
  const Value used = std::accumulate(parts.begin(), parts.end(), Value{0});
  if (used > g - 1) return std::nullopt;

  Decomposition out;
  out.g = g;
  const auto cm = *EndoClass::realizable(EndoKind::IV, 1, 1);
  for (Value p : parts) out.blocks.emplace_back(1, static_cast<int>(p), cm);
  const int filler = g - static_cast<int>(used);
  out.blocks.emplace_back(filler, 1, *EndoClass::realizable(EndoKind::I, 1, filler));
  return out;
}

int large_threshold(int g) {
  if (g < 4) throw std::invalid_argument("large_threshold: requires g >= 4");
  const Value gg = g;
  auto large = [gg](Value s) {
    const bool not_self_product = 2 * (square(gg - s) + 1) >= gg * (gg + 1);
    const bool separated = s * s + 4 * s + 1 - 2 * gg < 0;
    return s <= gg && not_self_product && separated;
  };
  Value s = 0;
  while (large(s + 1)) ++s;
  return static_cast<int>(s);
}

PicardSet translated_set(ReachTable& table, int g, int s) {
  if (s < 0 || s > g) throw std::invalid_argument("translated_set: need 0 <= s <= g");
  const Value shift = square(g - s);
  std::vector<Value> members;
  table.compute_R(s).for_each([&](Value x) { members.push_back(shift + x); });
  return PicardSet::from_members(g, members);
}

DistributionCheck verify_distribution(ReachTable& table, int g, int ell) {
  if (ell < 0 || ell > large_threshold(g)) {
    throw std::invalid_argument("verify_distribution: ell must lie in [0, large_threshold(g)]");
  }
  DistributionCheck out;
  out.g = g;
  out.ell = ell;
  const PicardSet& r = table.compute_R(g);
  const Value lo = square(g - ell) + 1;
  for (Value x = lo; x <= square(g); ++x) {
    if (r.contains(x)) out.window.push_back(x);
  }
  std::size_t total = 0;
  std::set<Value> merged;
  for (int s = 0; s <= ell; ++s) {
    const PicardSet t = translated_set(table, g, s);
    total += t.size();
    t.for_each([&](Value x) { merged.insert(x); });
  }
  out.translates.assign(merged.begin(), merged.end());
  out.disjoint = merged.size() == total;
  out.holds = out.disjoint && out.window == out.translates;
  return out;
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return !c.applicable || c.passed; });
}

VerificationReport verify_theorems(ReachTable& table, int g) {
  if (g < 1) throw std::invalid_argument("verify_theorems: g must be positive");
  VerificationReport report;
  report.g = g;
  const Value gg = g;
  auto& checks = report.checks;

  checks.push_back(gap_check(table, g, "gap-1", square(gg - 1) + 1, square(gg), 4));
  checks.push_back(gap_check(table, g, "gap-2", square(gg - 2) + 4, square(gg - 1) + 1, 7));

  checks.push_back(shape_check(table, g, "shape-max", square(gg), 1, {{{1, g, square(gg)}}}));
  if (g >= 5) {
    checks.push_back(shape_check(table, g, "shape-near-max", square(gg - 1) + 1, 5,
                                 {{{1, g - 1, square(gg - 1)}, {1, 1, 1}}}));
  } else {
    checks.push_back(Check{"shape-near-max", false, false, "requires g >= 5"});
  }
  if (g >= 7) {
    checks.push_back(shape_check(table, g, "shape-second", square(gg - 2) + 4, 7,
                                 {{{1, g - 2, square(gg - 2)}, {1, 2, 4}}}));
    checks.push_back(shape_check(table, g, "two-shapes", square(gg - 2) + 3, 7,
                                 {{{1, g - 2, square(gg - 2)}, {1, 2, 3}}, {{2, 1, 3}, {1, g - 2, square(gg - 2)}}}));
  } else {
    checks.push_back(Check{"shape-second", false, false, "requires g >= 7"});
    checks.push_back(Check{"two-shapes", false, false, "requires g >= 7"});
  }

  {
    const Value prefix = prefix_complete(table, g);
    Check c{"prefix-2g", g >= 2, prefix >= 2 * gg, {}};
    std::ostringstream os;
    os << "[1, " << prefix << "] is contained in R_g; need [1, " << 2 * gg << "]";
    if (!c.applicable) os << "; requires g >= 2";
    c.detail = os.str();
    checks.push_back(c);
  }

  {
    std::vector<Value> missing;
    std::vector<Value> unrealized;
    const PicardSet& r = table.compute_R(g);
    for (Value n = 1; n <= square(gg) && below_b_g(g, n); ++n) {
      if (!r.contains(n)) missing.push_back(n);
      const auto d = lombardo_realize(n, g);
      if (!d || !d->is_consistent() || d->total_rho() != n) unrealized.push_back(n);
    }
    std::ostringstream os;
    os << count_below_b_g(g) << " integer(s) below b_g";
    if (!missing.empty()) os << "; missing from R_g: " << join(missing);
    if (!unrealized.empty()) os << "; four-square recipe fails for: " << join(unrealized);
    checks.push_back(Check{"below-b_g", true, missing.empty() && unrealized.empty(), os.str()});
  }

  {
    std::vector<int> wrong;
    for (int r = 1; r <= g; ++r) {
      if (table.max_picard_with_blocks(g, r) != square(gg - r + 1) + (r - 1)) wrong.push_back(r);
    }
    std::ostringstream os;
    os << "M_{r,g} = (g-r+1)^2 + (r-1) for r = 1.." << g;
    for (int r : wrong) os << "; fails at r = " << r;
    checks.push_back(Check{"max-with-blocks", true, wrong.empty(), os.str()});
  }

  if (g >= 4) {
    const int ell = large_threshold(g);
    const auto d = verify_distribution(table, g, ell);
    std::ostringstream os;
    os << "ell = " << ell << "; window has " << d.window.size() << " member(s), translates "
       << d.translates.size() << (d.disjoint ? " (disjoint)" : " (overlapping)");
    checks.push_back(Check{"distribution", true, d.holds, os.str()});
  } else {
    checks.push_back(Check{"distribution", false, false, "requires g >= 4"});
  }
  return report;
}

std::vector<DistributionOnset> distribution_onsets(ReachTable& table, int g_min, int g_max) {
  g_min = std::max(g_min, 4);
  std::vector<DistributionOnset> out;
  if (g_max < g_min) return out;
  const int ell_max = large_threshold(g_max);
  for (int ell = 1; ell <= ell_max; ++ell) {
    DistributionOnset onset;
    onset.ell = ell;
    bool all = true;
    for (int g = g_min; g <= g_max; ++g) {
      if (large_threshold(g) < ell) continue;
      ++onset.tested;
      const bool holds = verify_distribution(table, g, ell).holds;
      if (!onset.first_g) {
        if (holds) onset.first_g = g;
      } else if (!holds) {
        all = false;
      }
    }
    onset.holds_for_all_larger = onset.first_g.has_value() && all;
    out.push_back(onset);
  }
  return out;
}

}  // namespace picard
