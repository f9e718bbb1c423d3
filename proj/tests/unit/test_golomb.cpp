#include <gtest/gtest.h>

#include <set>

#include "../oracles.hpp"
#include "grecip/golomb.hpp"

using namespace grecip;

namespace {

std::vector<std::vector<std::int64_t>> gaps_of(const std::vector<Ruler>& rulers) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& r : rulers) out.push_back(r.gaps());
  return out;
}

}  // namespace

TEST(Golomb, IsGolombExamples) {
  EXPECT_TRUE(is_golomb(Ruler({1, 3, 2})));  // measurements 1,3,2,4,5,6
  EXPECT_FALSE(is_golomb(Ruler({1, 2, 3})));  // z1 + z2 = z3
  EXPECT_TRUE(is_golomb(Ruler({2, 3, 4})));
  EXPECT_FALSE(is_golomb(Ruler({0, 3, 4})));
  EXPECT_TRUE(is_golomb(Ruler({5})));
  EXPECT_FALSE(is_golomb(Ruler({2, 2})));
}

TEST(Golomb, MarkingsRoundTrip) {
  Ruler r({1, 3, 2});
  EXPECT_EQ(r.markings(), (std::vector<std::int64_t>{0, 1, 4, 6}));
  EXPECT_EQ(Ruler::from_markings(r.markings()), r);
  EXPECT_EQ(r.length(), 6);
  EXPECT_EQ(r.to_string(), "(1,3,2)");
  EXPECT_THROW(Ruler(std::vector<std::int64_t>{}), std::invalid_argument);
  EXPECT_THROW(Ruler({1, -1}), std::invalid_argument);
}

TEST(Golomb, DpcsPairsAreDisjointProperConsecutive) {
  for (int m = 1; m <= 6; ++m) {
    auto pairs = dpcs_pairs(m);
    // Choosing a <= b < c <= d from [m] is choosing 4 of m+2 things with
    // repetition in two slots: C(m+2, 4).
    std::size_t expected = static_cast<std::size_t>((m + 2) * (m + 1) * m * (m - 1) / 24);
    EXPECT_EQ(pairs.size(), expected) << "m=" << m;
    for (const auto& p : pairs) {
      EXPECT_LE(1, p.u.first);
      EXPECT_LE(p.u.first, p.u.last);
      EXPECT_LT(p.u.last, p.v.first);
      EXPECT_LE(p.v.first, p.v.last);
      EXPECT_LE(p.v.last, m);
    }
  }
}

TEST(Golomb, EnumerateSmallCases) {
  EXPECT_EQ(gaps_of(enumerate_golomb_rulers(3, 6)),
            (std::vector<std::vector<std::int64_t>>{{1, 3, 2}, {2, 3, 1}}));
  EXPECT_EQ(gaps_of(enumerate_golomb_rulers(2, 5)),
            (std::vector<std::vector<std::int64_t>>{{1, 4}, {2, 3}, {3, 2}, {4, 1}}));
  for (std::int64_t t = 1; t <= 9; ++t)
    EXPECT_EQ(gaps_of(enumerate_golomb_rulers(1, t)), (std::vector<std::vector<std::int64_t>>{{t}}));
  EXPECT_TRUE(enumerate_golomb_rulers(3, 5).empty());
  EXPECT_TRUE(enumerate_golomb_rulers(4, 3).empty());
}

TEST(Golomb, CountExamples) {
  EXPECT_EQ(count_golomb_rulers(3, 18), 98);
  EXPECT_EQ(count_golomb_rulers(3, 35), 510);
  EXPECT_EQ(count_golomb_rulers(2, 4), 2);
  EXPECT_EQ(count_golomb_rulers(1, 0), 0);
  EXPECT_EQ(count_golomb_rulers(3, 0), 0);
}

TEST(Golomb, MatchesBruteForceOracle) {
  for (int m = 1; m <= 5; ++m)
    for (std::int64_t t = 0; t <= 25; ++t) {
      auto expected = oracle::golomb_by_brute_force(m, t);
      auto rulers = enumerate_golomb_rulers(m, t);
      ASSERT_EQ(gaps_of(rulers), expected) << "m=" << m << " t=" << t;
      EXPECT_EQ(count_golomb_rulers(m, t), static_cast<unsigned long>(expected.size()));
    }
}

TEST(Golomb, IntervalTestAgreesWithDifferenceTest) {
  for (int m = 1; m <= 5; ++m)
    for (std::int64_t t = 1; t <= 25; ++t) {
      std::size_t by_intervals = 0, by_differences = 0;
      for (auto& z : oracle::compositions(m, t)) {
        Ruler r(z);
        by_intervals += is_golomb(r);
        by_differences += has_distinct_differences(r);
        ASSERT_EQ(is_golomb(r), has_distinct_differences(r)) << r.to_string();
      }
      EXPECT_EQ(by_intervals, by_differences);
    }
}

TEST(Golomb, EnumeratedRulersHaveAllDifferencesDistinct) {
  for (int m = 1; m <= 5; ++m)
    for (std::int64_t t = 1; t <= 22; ++t)
      for (const auto& r : enumerate_golomb_rulers(m, t)) {
        auto x = r.markings();
        std::set<std::int64_t> d;
        for (std::size_t j = 0; j < x.size(); ++j)
          for (std::size_t k = 0; k < j; ++k) d.insert(x[j] - x[k]);
        EXPECT_EQ(d.size(), static_cast<std::size_t>(m * (m + 1) / 2));
      }
}

TEST(Golomb, ComplementIsAnInvolutionPreservingGolombness) {
  EXPECT_EQ(complement(Ruler({1, 3, 2})), Ruler({2, 3, 1}));
  EXPECT_EQ(complement(Ruler({7})), Ruler({7}));
  EXPECT_EQ(complement(Ruler({1, 4})), Ruler({4, 1}));
  for (int m = 2; m <= 4; ++m)
    for (std::int64_t t = 1; t <= 14; ++t)
      for (auto& z : oracle::compositions(m, t)) {
        Ruler r(z);
        EXPECT_EQ(complement(complement(r)), r);
        EXPECT_EQ(is_golomb(r), is_golomb(complement(r)));
      }
}

TEST(Golomb, RulerSetIsClosedUnderComplementSoCountsAreEven) {
  for (int m = 2; m <= 4; ++m)
    for (std::int64_t t = 1; t <= 30; ++t) {
      auto rulers = enumerate_golomb_rulers(m, t);
      std::set<Ruler> all(rulers.begin(), rulers.end());
      for (const auto& r : rulers) {
        EXPECT_TRUE(all.count(complement(r)));
        EXPECT_NE(complement(r), r);
      }
      EXPECT_EQ(rulers.size() % 2, 0u);
    }
}

TEST(Golomb, OptimalLengths) {
  EXPECT_EQ(optimal_length(1), 1);
  EXPECT_EQ(optimal_length(2), 3);
  EXPECT_EQ(optimal_length(3), 6);
  // Oracle: scan upward with brute force until a ruler appears.
  std::int64_t t = 1;
  while (oracle::golomb_by_brute_force(4, t).empty()) ++t;
  EXPECT_EQ(t, 11);
  EXPECT_EQ(optimal_length(4), t);
}

TEST(Golomb, CountVanishesBelowOptimalLength) {
  for (int m = 1; m <= 5; ++m) {
    auto opt = optimal_length(m);
    for (std::int64_t t = 0; t < opt; ++t) EXPECT_EQ(count_golomb_rulers(m, t), 0) << m << " " << t;
    EXPECT_GT(count_golomb_rulers(m, opt), 0);
  }
}

TEST(Golomb, OptimalLengthCeiling) { EXPECT_THROW(optimal_length(4, 10), Error); }

TEST(Golomb, BudgetExceeded) {
  SearchOptions opts;
  opts.node_budget = 1000;
  EXPECT_THROW(count_golomb_rulers(4, 60, opts), BudgetExceeded);
  EXPECT_THROW(enumerate_golomb_rulers(5, 60, opts), BudgetExceeded);
}

TEST(Golomb, ParallelOutputIsDeterministic) {
  SearchOptions serial, parallel;
  parallel.threads = 4;
  for (std::int64_t t : {20, 33, 47}) {
    EXPECT_EQ(enumerate_golomb_rulers(4, t, serial), enumerate_golomb_rulers(4, t, parallel));
    EXPECT_EQ(count_golomb_rulers(4, t, serial), count_golomb_rulers(4, t, parallel));
  }
}
