#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "auh/ascent.hpp"
#include "auh/families.hpp"
#include "auh/random.hpp"

using auh::Distribution;
using auh::Objective;
using auh::Rational;

TEST(Ascent, ReachesLengthBoundFromSkewedStart) {
  const auto r = auh::local_ascent(Distribution<double>::from_values({0.7, 0.15, 0.1, 0.05}), Objective::avg_length);
  EXPECT_LT(std::abs(r.best_value - 2.0), 1e-6);
  EXPECT_EQ(r.method, "ascent");
  EXPECT_GT(r.iterations, 0U);
}

TEST(Ascent, FibonacciStartIsAFixedPoint) {
  for (std::size_t n = 3; n <= 10; ++n) {
    const auto r = auh::local_ascent(auh::fibonacci_dist(n), Objective::avg_length);
    EXPECT_EQ(r.iterations, 0U);
    EXPECT_EQ(r.termination, "converged");
    EXPECT_EQ(*r.gap_exact, 0);
  }
}

TEST(Ascent, RejectsNonAuhStart) {
  EXPECT_THROW(auh::local_ascent(Distribution<double>::from_values({0.25, 0.25, 0.25, 0.25}), Objective::entropy),
               auh::NotAUHStart);
}

TEST(Ascent, ObjectiveNeverDecreasesAndIteratesStayAuh) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    for (auto objective : {Objective::avg_length, Objective::entropy}) {
      double last = -1.0;
      auh::AscentOptions<double> options;
      options.on_iterate = [&](std::uint64_t, const Distribution<double>& d, double value) {
        EXPECT_TRUE(auh::is_auh(d));
        EXPECT_GE(value, last - 1e-14);
        last = value;
      };
      auh::local_ascent(auh::random_auh(4 + s % 4, s), objective, options);
    }
  }
}

TEST(Ascent, LengthBoundFromRandomStarts) {
  for (std::size_t n : {4U, 5U, 6U, 8U}) {
    for (std::uint64_t s = 0; s < 50; ++s) {
      const auto r = auh::local_ascent(auh::random_auh(n, s), Objective::avg_length);
      EXPECT_LT(std::abs(r.gap), 1e-6) << "n=" << n << " seed=" << s;
      EXPECT_GE(r.gap, -1e-12);
    }
  }
}

// At n = 3 the entropy maximum over anti-uniform sources is the uniform
// source, as for length.
TEST(Ascent, EntropyBoundAtThreeSymbols) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto r = auh::local_ascent(auh::random_auh(3, s), Objective::entropy);
    EXPECT_LT(std::abs(r.gap), 1e-6);
  }
}

// From n = 4 on, the entropy ascent climbs past h_max(n) = H(fibonacci_dist(n)).
// At n = 4 the supremum is near (0.3694, 0.2612, 0.1847, 0.1847), H = 1.93675.
TEST(Ascent, EntropyAscentExceedsFibonacciValueAtFourSymbols) {
  const auto r = auh::local_ascent(Distribution<double>::from_values({0.5, 0.25, 0.125, 0.125}), Objective::entropy);
  EXPECT_GT(r.best_value, auh::h_max(4) + 1e-3);
  EXPECT_LT(r.best_value, 1.93676);
  EXPECT_FALSE(r.within_bound());
}

TEST(Ascent, ExactArithmeticRun) {
  const auto start = Distribution<Rational>::from_values({Rational(6, 10), Rational(2, 10), Rational(1, 10),
                                                          Rational(1, 10)});
  const auto r = auh::local_ascent(start, Objective::avg_length);
  EXPECT_EQ(r.termination, "converged");
  ASSERT_TRUE(r.gap_exact.has_value());
  EXPECT_GT(*r.gap_exact, 0);  // approaches the bound from below, never past it
  EXPECT_LT(r.gap, 1e-12);
  EXPECT_EQ(r.best_exact.size(), 4U);
}

TEST(Ascent, IterationCap) {
  auh::AscentOptions<double> options;
  options.max_iterations = 1;
  EXPECT_THROW(auh::local_ascent(Distribution<double>::from_values({0.7, 0.15, 0.1, 0.05}), Objective::avg_length,
                                 options),
               auh::ConvergenceFailure);
}
