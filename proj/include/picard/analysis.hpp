// Copyright 2026 The picard-range Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PICARD_ANALYSIS_HPP
#define PICARD_ANALYSIS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "picard/blocks.hpp"
#include "picard/picard_set.hpp"
#include "picard/reach_table.hpp"

namespace picard {

/// Exact fraction in lowest terms with a positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& other) const;
};

/// #R_g / g^2.
Rational density(ReachTable& table, int g);

/// Largest N with [1, N] contained in R_g.
Value prefix_complete(ReachTable& table, int g);

/// n < b_g where b_g = g^2 + 8g + 1 - 4 sqrt(2) g^(3/2), decided exactly:
/// X = g^2 + 8g + 1 - n > 0 and 32 g^3 < X^2.
bool below_b_g(int g, Value n);

/// Number of integers n >= 1 with n < b_g, i.e. ceil(b_g) - 1 (0 if b_g <= 1).
Value count_below_b_g(int g);

/// Lexicographically greatest non-increasing (a, b, c, d) with
/// a^2 + b^2 + c^2 + d^2 = m.
std::array<Value, 4> four_square(Value m);

/// Realizes n in dimension g from n - 1 = n1^2 + ... + n5^2 (n1 = isqrt(n-1),
/// the rest from four_square) as CM elliptic powers E_i^{n_i} plus one
/// filler block with End = Q. nullopt when the parts do not fit in g - 1
/// dimensions. Requires 1 <= n <= g^2.
std::optional<Decomposition> lombardo_realize(Value n, int g);

/// Largest s with (g - s)^2 + 1 >= g(g+1)/2 and
/// (g - s - 1)^2 + (s + 1)^2 < (g - s)^2 + 1. Requires g >= 4.
int large_threshold(int g);

/// (g - s)^2 + R_s, as a subset of [0, g^2]. Requires 0 <= s <= g.
PicardSet translated_set(ReachTable& table, int g, int s);

struct DistributionCheck {
  int g = 0;
  int ell = 0;
  bool disjoint = false;
  bool holds = false;
  /// R_g intersected with [(g - ell)^2 + 1, g^2].
  std::vector<Value> window;
  /// Union of translated_set(g, s) for s = 0..ell.
  std::vector<Value> translates;
};

/// Compares the top of R_g with the disjoint union of its translates.
/// Throws std::invalid_argument if ell > large_threshold(g).
DistributionCheck verify_distribution(ReachTable& table, int g, int ell);

struct Check {
  std::string name;
  bool applicable = false;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  int g = 0;
  std::vector<Check> checks;

  bool ok() const;
};

VerificationReport verify_theorems(ReachTable& table, int g);

/// For one ell: the smallest tested g at which the distribution identity
/// holds, and whether it also holds at every larger tested g.
struct DistributionOnset {
  int ell = 0;
  std::optional<int> first_g;
  bool holds_for_all_larger = false;
  int tested = 0;
};

std::vector<DistributionOnset> distribution_onsets(ReachTable& table, int g_min, int g_max);

}  // namespace picard

#endif  // PICARD_ANALYSIS_HPP
