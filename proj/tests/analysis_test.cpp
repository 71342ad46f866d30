// Copyright 2026 The picard-range Authors
// SPDX-License-Identifier: Apache-2.0

#include "picard/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "gtest/gtest.h"

namespace picard {
namespace {

std::multiset<std::tuple<int, int, EndoKind, std::int64_t>> block_multiset(const Decomposition& d) {
  std::multiset<std::tuple<int, int, EndoKind, std::int64_t>> out;
  for (const Block& b : d.blocks) out.insert({b.m(), b.k(), b.endo().kind(), b.endo().param()});
  return out;
}

const Check& find_check(const VerificationReport& r, const std::string& name) {
  for (const Check& c : r.checks) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("no check named " + name);
}

TEST(RationalTest, ReducesAndCompares) {
  EXPECT_EQ(Rational::make(10, 16), (Rational{5, 8}));
  EXPECT_EQ(Rational::make(3, -6), (Rational{-1, 2}));
  EXPECT_LT(Rational::make(1, 3), Rational::make(1, 2));
  EXPECT_THROW(Rational::make(1, 0), std::invalid_argument);
}

TEST(DensityTest, Examples) {
  ReachTable t;
  EXPECT_EQ(density(t, 1), Rational::make(1, 1));
  EXPECT_EQ(density(t, 3), Rational::make(7, 9));
  EXPECT_EQ(density(t, 4), Rational::make(10, 16));
}

TEST(PrefixCompleteTest, Examples) {
  ReachTable t;
  EXPECT_EQ(prefix_complete(t, 1), 1);
  EXPECT_EQ(prefix_complete(t, 2), 4);
  EXPECT_EQ(prefix_complete(t, 3), 6);
  EXPECT_EQ(prefix_complete(t, 4), 8);
}

TEST(BelowBgTest, SmallDimension) {
  // b_4 = 49 - 32 sqrt(2) ~ 3.745.
  for (Value n = 1; n <= 3; ++n) EXPECT_TRUE(below_b_g(4, n));
  EXPECT_FALSE(below_b_g(4, 4));
  EXPECT_EQ(count_below_b_g(4), 3);
  ReachTable t;
  for (Value n = 1; n <= 3; ++n) EXPECT_TRUE(t.compute_R(4).contains(n));
}

TEST(BelowBgTest, CountMatchesPredicateAndFloatingBound) {
  for (int g = 1; g <= 400; ++g) {
    Value count = 0;
    for (Value n = 1; below_b_g(g, n); ++n) ++count;
    ASSERT_EQ(count_below_b_g(g), count) << "g = " << g;
    const long double b = static_cast<long double>(g) * g + 8.0L * g + 1 - 4 * std::sqrt(2.0L) * std::pow(g, 1.5L);
    if (std::abs(b - std::round(b)) < 1e-9L) continue;
    ASSERT_EQ(count, std::max<Value>(0, static_cast<Value>(std::ceil(b)) - 1)) << "g = " << g;
  }
}

TEST(BelowBgTest, EveryIntegerBelowBoundIsRealized) {
  // The greedy recipe overruns the dimension budget only at these points.
  const std::set<std::pair<int, Value>> budget_overruns{{2, 3}, {2, 4}, {3, 4}};
  ReachTable t;
  for (int g = 1; g <= 64; ++g) {
    const Value top = static_cast<Value>(g) * g;
    for (Value n = 1; n <= top && below_b_g(g, n); ++n) {
      ASSERT_TRUE(t.compute_R(g).contains(n)) << "g=" << g << " n=" << n;
      const auto d = lombardo_realize(n, g);
      if (budget_overruns.contains({g, n})) {
        ASSERT_FALSE(d.has_value()) << "g=" << g << " n=" << n;
        continue;
      }
      ASSERT_TRUE(d.has_value()) << "g=" << g << " n=" << n;
      ASSERT_TRUE(d->is_consistent());
      ASSERT_EQ(d->total_rho(), n);
    }
  }
}

TEST(FourSquareTest, Examples) {
  EXPECT_EQ(four_square(0), (std::array<Value, 4>{0, 0, 0, 0}));
  EXPECT_EQ(four_square(7), (std::array<Value, 4>{2, 1, 1, 1}));
  EXPECT_EQ(four_square(310), (std::array<Value, 4>{17, 4, 2, 1}));
  EXPECT_THROW(four_square(-1), std::invalid_argument);
}

TEST(FourSquareTest, LexicographicallyGreatestSolution) {
  for (Value m = 0; m <= 300; ++m) {
    std::array<Value, 4> best{-1, -1, -1, -1};
    for (Value a = 0; a * a <= m; ++a) {
      for (Value b = 0; b <= a; ++b) {
        for (Value c = 0; c <= b; ++c) {
          for (Value d = 0; d <= c; ++d) {
            if (a * a + b * b + c * c + d * d == m) best = std::max(best, std::array<Value, 4>{a, b, c, d});
          }
        }
      }
    }
    ASSERT_EQ(four_square(m), best) << "m = " << m;
  }
  for (Value m = 301; m <= 5000; ++m) {
    const auto q = four_square(m);
    ASSERT_EQ(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3], m);
    ASSERT_TRUE(q[0] >= q[1] && q[1] >= q[2] && q[2] >= q[3] && q[3] >= 0);
  }
}

TEST(LombardoTest, Examples) {
  const auto cm = *EndoClass::realizable(EndoKind::IV, 1, 1);
  const auto plain = *EndoClass::realizable(EndoKind::I, 1, 1);

  const auto ten = lombardo_realize(10, 4);
  ASSERT_TRUE(ten);
  EXPECT_EQ(ten->total_rho(), 10);
  EXPECT_EQ(block_multiset(*ten), block_multiset(Decomposition{4, {Block(1, 3, cm), Block(1, 1, plain)}}));

  const auto two = lombardo_realize(2, 2);
  ASSERT_TRUE(two);
  EXPECT_EQ(block_multiset(*two), block_multiset(Decomposition{2, {Block(1, 1, cm), Block(1, 1, plain)}}));

  EXPECT_FALSE(lombardo_realize(15, 5));
  ReachTable t;
  EXPECT_TRUE(t.compute_R(5).contains(15));

  EXPECT_THROW(lombardo_realize(26, 5), std::invalid_argument);
  EXPECT_THROW(lombardo_realize(0, 5), std::invalid_argument);
}

TEST(LombardoTest, OutputIsAlwaysValid) {
  for (int g = 1; g <= 30; ++g) {
    for (Value n = 1; n <= static_cast<Value>(g) * g; ++n) {
      const auto d = lombardo_realize(n, g);
      if (!d) continue;
      ASSERT_EQ(d->total_dim(), g);
      ASSERT_EQ(d->total_rho(), n);
      ASSERT_TRUE(d->is_consistent());
    }
  }
}

TEST(LargeThresholdTest, Examples) {
  EXPECT_EQ(large_threshold(4), 1);
  EXPECT_EQ(large_threshold(7), 1);
  EXPECT_EQ(large_threshold(100), 12);
  EXPECT_THROW(large_threshold(3), std::invalid_argument);
}

TEST(LargeThresholdTest, AgreesWithClosedForms) {
  // s <= g - sqrt(2(g^2+g-2))/2 and s < -2 + sqrt(2g+3), evaluated in long
  // double away from integer boundaries.
  for (int g = 4; g <= 2000; ++g) {
    const long double a = g - std::sqrt(2.0L * (static_cast<long double>(g) * g + g - 2)) / 2;
    const long double b = -2 + std::sqrt(2.0L * g + 3);
    if (std::abs(a - std::round(a)) < 1e-9L || std::abs(b - std::round(b)) < 1e-9L) {
      continue;
    }
    const int expected = std::min(static_cast<int>(std::floor(a)), static_cast<int>(std::ceil(b)) - 1);
    ASSERT_EQ(large_threshold(g), expected) << "g = " << g;
  }
}

TEST(TranslatedSetTest, Examples) {
  ReachTable t;
  for (int g = 1; g <= 10; ++g) {
    EXPECT_EQ(translated_set(t, g, 0).members(), (std::vector<Value>{static_cast<Value>(g) * g}));
  }
  EXPECT_EQ(translated_set(t, 4, 1).members(), (std::vector<Value>{10}));
  EXPECT_EQ(translated_set(t, 10, 2).members(), (std::vector<Value>{65, 66, 67, 68}));
  EXPECT_THROW(translated_set(t, 4, 5), std::invalid_argument);
}

TEST(DistributionTest, Examples) {
  ReachTable t;
  const auto ten = verify_distribution(t, 10, 1);
  EXPECT_TRUE(ten.holds);
  EXPECT_EQ(ten.window, (std::vector<Value>{82, 100}));
  EXPECT_TRUE(verify_distribution(t, 20, 2).holds);
  EXPECT_TRUE(verify_distribution(t, 100, 12).holds);
  EXPECT_THROW(verify_distribution(t, 100, 13), std::invalid_argument);
  EXPECT_THROW(verify_distribution(t, 3, 0), std::invalid_argument);
}

TEST(DistributionTest, HoldsAtThresholdUpTo64) {
  ReachTable t;
  for (int g = 4; g <= 64; ++g) {
    const auto d = verify_distribution(t, g, large_threshold(g));
    EXPECT_TRUE(d.disjoint) << "g = " << g;
    EXPECT_TRUE(d.holds) << "g = " << g;
  }
}

TEST(DistributionTest, TranslatesAreCMPowersTimesLowerRows) {
  ReachTable t;
  // At g = 4 the threshold inequality is tight: 10 = (4-1)^2 + 1 = 4 * 5 / 2.
  std::set<Shape> ten;
  for (Shape s : t.enumerate_shapes(4, 10, 100).shapes) {
    std::sort(s.begin(), s.end());
    ten.insert(s);
  }
  EXPECT_EQ(ten, (std::set<Shape>{{{1, 1, 1}, {1, 3, 9}}, {{1, 4, 10}}, {{2, 2, 10}}}));
  for (int g = 5; g <= 40; ++g) {
    const int ell = large_threshold(g);
    for (int n = 0; n <= ell; ++n) {
      const ShapeBlock cm_power{1, g - n, static_cast<Value>(g - n) * (g - n)};
      translated_set(t, g, n).for_each([&](Value rho) {
        const auto shapes = t.enumerate_shapes(g, rho, 10000);
        ASSERT_FALSE(shapes.truncated);
        ASSERT_FALSE(shapes.shapes.empty());
        for (const Shape& s : shapes.shapes) {
          ASSERT_NE(std::find(s.begin(), s.end(), cm_power), s.end()) << "g=" << g << " rho=" << rho;
        }
      });
    }
  }
}

TEST(DistributionTest, Onsets) {
  ReachTable t;
  const auto onsets = distribution_onsets(t, 4, 64);
  ASSERT_EQ(onsets.size(), static_cast<std::size_t>(large_threshold(64)));
  for (const auto& o : onsets) {
    ASSERT_TRUE(o.first_g.has_value());
    EXPECT_TRUE(o.holds_for_all_larger) << "ell = " << o.ell;
    EXPECT_GT(o.tested, 0);
  }
  EXPECT_EQ(onsets.front().first_g, 4);
}

TEST(GapTheoremTest, FirstAndSecondGaps) {
  ReachTable t;
  for (int g = 4; g <= 64; ++g) {
    const Value gg = g;
    const PicardSet& r = t.compute_R(g);
    for (Value x = (gg - 1) * (gg - 1) + 2; x < gg * gg; ++x) ASSERT_FALSE(r.contains(x)) << g;
    if (g >= 7) {
      for (Value x = (gg - 2) * (gg - 2) + 5; x < (gg - 1) * (gg - 1) + 1; ++x) ASSERT_FALSE(r.contains(x)) << g;
    }
  }
  EXPECT_TRUE(t.compute_R(3).contains(6));
  EXPECT_TRUE(t.compute_R(5).contains(15));
}

TEST(DensityTest, TrendAgainstBound) {
  ReachTable t;
  for (int g = 16; g <= 128; ++g) {
    EXPECT_GE(density(t, g), Rational::make(count_below_b_g(g), static_cast<Value>(g) * g)) << "g = " << g;
  }
}

TEST(VerifyTheoremsTest, ThreeMarksFirstGapInapplicable) {
  ReachTable t;
  const auto report = verify_theorems(t, 3);
  const Check& gap = find_check(report, "gap-1");
  EXPECT_FALSE(gap.applicable);
  EXPECT_NE(gap.detail.find("g >= 4"), std::string::npos);
  EXPECT_NE(gap.detail.find("rho = 6"), std::string::npos);
}

TEST(VerifyTheoremsTest, FiveMarksSecondGapInapplicable) {
  ReachTable t;
  const auto report = verify_theorems(t, 5);
  const Check& gap = find_check(report, "gap-2");
  EXPECT_FALSE(gap.applicable);
  EXPECT_NE(gap.detail.find("g >= 7"), std::string::npos);
  EXPECT_NE(gap.detail.find("(13, 17)"), std::string::npos);
  EXPECT_NE(gap.detail.find("15"), std::string::npos);
  EXPECT_TRUE(find_check(report, "gap-1").passed);
  EXPECT_TRUE(report.ok());
}

TEST(VerifyTheoremsTest, FailuresAreExactlyTheKnownCounterexamples) {
  const std::set<std::pair<int, std::string>> known{{2, "below-b_g"}, {3, "below-b_g"}, {7, "two-shapes"}};
  ReachTable t;
  for (int g = 1; g <= 24; ++g) {
    const auto report = verify_theorems(t, g);
    for (const Check& c : report.checks) {
      const bool expected_pass = !known.contains({g, c.name});
      EXPECT_EQ(!c.applicable || c.passed, expected_pass) << "g=" << g << " " << c.name << ": " << c.detail;
      if (!c.applicable) EXPECT_NE(c.detail.find("requires g >="), std::string::npos) << c.name;
    }
  }
  EXPECT_NE(find_check(verify_theorems(t, 7), "two-shapes").detail.find("{(1,7,28)}"), std::string::npos);
  EXPECT_NE(find_check(verify_theorems(t, 2), "below-b_g").detail.find("fails for: 3, 4"), std::string::npos);
  const auto ten = verify_theorems(t, 10);
  for (const Check& c : ten.checks) EXPECT_TRUE(c.applicable) << c.name;
  EXPECT_TRUE(ten.ok());
}

}  // namespace
}  // namespace picard
