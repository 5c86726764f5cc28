#include <gtest/gtest.h>

#include <vector>

#include "auh/grid.hpp"
#include "auh/metrics.hpp"
#include "auh/search.hpp"
#include "support/oracles.hpp"

using auh::GridSpec;
using auh::Objective;
using auh::Rational;

namespace {

std::vector<std::vector<Rational>> points(const GridSpec& spec) {
  std::vector<std::vector<Rational>> out;
  for (const auto& d : auh::enumerate_sorted_simplex(spec)) out.emplace_back(d.probs().begin(), d.probs().end());
  return out;
}

std::vector<Rational> over(std::uint32_t m, std::initializer_list<int> parts) {
  std::vector<Rational> out;
  for (int c : parts) out.emplace_back(c, m);
  return out;
}

}  // namespace

TEST(Grid, SmallEnumerations) {
  EXPECT_EQ(points({2, 4}), (std::vector<std::vector<Rational>>{over(4, {3, 1}), over(4, {2, 2})}));
  EXPECT_EQ(points({3, 5}), (std::vector<std::vector<Rational>>{over(5, {3, 1, 1}), over(5, {2, 2, 1})}));
  EXPECT_EQ(auh::count_sorted_compositions({3, 12}), 12U);
}

TEST(Grid, CountMatchesPartitionOracle) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (std::uint32_t m = static_cast<std::uint32_t>(n); m <= 40; m += 3) {
      EXPECT_EQ(auh::count_sorted_compositions({n, m}), oracle::partitions_exact(m, static_cast<std::int64_t>(n)));
    }
  }
}

TEST(Grid, PointsAreSortedPositiveAndDistinct) {
  const auto pts = points({5, 17});
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rational total = 0;
    for (std::size_t k = 0; k < pts[i].size(); ++k) {
      EXPECT_GT(pts[i][k], 0);
      if (k > 0) {
        EXPECT_LE(pts[i][k], pts[i][k - 1]);
      }
      total += pts[i][k];
    }
    EXPECT_EQ(total, 1);
    if (i > 0) {
      EXPECT_LT(pts[i], pts[i - 1]);  // strictly decreasing, so no repeats
    }
  }
}

TEST(Grid, Validation) {
  EXPECT_THROW(auh::count_sorted_compositions({4, 3}), auh::BadParam);
  EXPECT_THROW(auh::count_sorted_compositions({1, 3}), auh::BadParam);
  EXPECT_EQ(auh::default_resolution(3), 60U);
  EXPECT_EQ(auh::default_resolution(4), 60U);
  EXPECT_EQ(auh::default_resolution(5), 40U);
  EXPECT_EQ(auh::default_resolution(6), 24U);
}

TEST(Search, UniformThreeIsTheLengthMaximizer) {
  const auto r = auh::brute_force_max({3, 9}, Objective::avg_length);
  EXPECT_EQ(r.best_exact, over(9, {3, 3, 3}));
  EXPECT_EQ(*r.best_value_exact, Rational(5, 3));
  EXPECT_EQ(*r.gap_exact, 0);
  EXPECT_TRUE(r.within_bound());
}

// Four grid points attain L = 2 at n = 4, m = 20; the smallest in
// lexicographic order is reported.
TEST(Search, FourSymbolLengthMaximizers) {
  const auto r = auh::brute_force_max({4, 20}, Objective::avg_length);
  EXPECT_EQ(*r.best_value_exact, 2);
  EXPECT_EQ(*r.gap_exact, 0);
  EXPECT_EQ(r.maximizers, 4U);
  EXPECT_EQ(r.best_exact, over(20, {7, 6, 4, 3}));
}

TEST(Search, FiveSymbolLengthMaximizerIsUnique) {
  const auto r = auh::brute_force_max({5, 200}, Objective::avg_length, 4);
  EXPECT_EQ(*r.best_value_exact, Rational(9, 4));
  EXPECT_EQ(r.maximizers, 1U);
  EXPECT_EQ(r.best_exact, over(200, {75, 50, 25, 25, 25}));
}

// The entropy maximum over anti-uniform points at n = 4 lies above the
// Fibonacci value h_max(4) = log2 5 - 0.4.
TEST(Search, FourSymbolEntropyMaximumExceedsFibonacciValue) {
  const auto r = auh::brute_force_max({4, 20}, Objective::entropy);
  EXPECT_EQ(r.best_exact, over(20, {7, 6, 4, 3}));
  EXPECT_NEAR(r.best_value, 1.9261207468426804, 1e-12);
  EXPECT_NEAR(r.best_value, oracle::entropy({0.35, 0.3, 0.2, 0.15}), 1e-12);
  EXPECT_NEAR(r.bound, 1.9219280948873623, 1e-12);
  EXPECT_LT(r.gap, 0);
  EXPECT_FALSE(r.within_bound());
}

TEST(Search, ThreeSymbolEntropyMaximumIsUniform) {
  const auto r = auh::brute_force_max({3, 60}, Objective::entropy);
  EXPECT_EQ(r.best_exact, over(60, {20, 20, 20}));
  EXPECT_NEAR(r.gap, 0.0, 1e-12);
}

TEST(Search, ResultIndependentOfWorkerCount) {
  for (auto objective : {Objective::avg_length, Objective::entropy}) {
    const auto one = auh::brute_force_max({5, 40}, objective, 1);
    for (unsigned w : {2U, 3U, 8U, 64U}) {
      const auto many = auh::brute_force_max({5, 40}, objective, w);
      EXPECT_EQ(many.best_exact, one.best_exact);
      EXPECT_EQ(many.best_value, one.best_value);
      EXPECT_EQ(many.evaluated, one.evaluated);
      EXPECT_EQ(many.maximizers, one.maximizers);
    }
  }
}

TEST(Search, EvaluatedCountsAuhPointsOnly) {
  const GridSpec spec{4, 24};
  std::uint64_t auh_points = 0;
  for (const auto& d : auh::enumerate_sorted_simplex(spec)) auh_points += auh::is_auh(d);
  EXPECT_EQ(auh::brute_force_max(spec, Objective::avg_length).evaluated, auh_points);
}

TEST(Search, EmptyFeasibleSet) {
  EXPECT_THROW(auh::brute_force_max({4, 4}, Objective::avg_length), auh::EmptyFeasibleSet);
  EXPECT_NO_THROW(auh::brute_force_max({3, 3}, Objective::avg_length));
}

TEST(Search, LengthBoundHoldsAtEveryGridPoint) {
  for (std::size_t n = 3; n <= 7; ++n) {
    const GridSpec spec{n, auh::default_resolution(n)};
    const auto bound = auh::l_max(n);
    for (const auto& d : auh::enumerate_sorted_simplex(spec)) {
      if (!auh::is_auh(d)) continue;
      ASSERT_LE(auh::average_length(d.probs(), auh::auh_profile(n)), bound);
    }
  }
}

TEST(Search, ObjectiveNames) {
  EXPECT_EQ(auh::parse_objective("length"), Objective::avg_length);
  EXPECT_EQ(auh::parse_objective("avg_length"), Objective::avg_length);
  EXPECT_EQ(auh::parse_objective("entropy"), Objective::entropy);
  EXPECT_THROW(auh::parse_objective("redundancy"), auh::BadParam);
}
