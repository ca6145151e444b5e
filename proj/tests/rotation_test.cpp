#include "advice_search/rotation.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Core>
#include <gtest/gtest.h>

using namespace advice_search;

namespace {

// Oracle: one amplification round is a rotation by 2 theta in the
// (marked, unmarked) plane; apply it j times to (sqrt p, sqrt(1-p)).
double rotation_matrix_success(double p, std::uint64_t j) {
  using Mat = Eigen::Matrix<long double, 2, 2>;
  using Vec = Eigen::Matrix<long double, 2, 1>;
  const long double q = p;
  const long double theta = std::asin(std::sqrt(q));
  Mat rot;
  rot << std::cos(2 * theta), std::sin(2 * theta), -std::sin(2 * theta), std::cos(2 * theta);
  Vec v(std::sqrt(q), std::sqrt(1 - q));
  for (std::uint64_t i = 0; i < j; ++i) v = rot * v;
  return static_cast<double>(v[0] * v[0]);
}

double brute_average(double p, std::uint64_t m) {
  long double s = 0.0L;
  for (std::uint64_t r = 0; r < m; ++r) {
    const long double theta = std::asin(std::sqrt(static_cast<long double>(p)));
    const long double v = std::sin((2.0L * r + 1.0L) * theta);
    s += v * v;
  }
  return static_cast<double>(s / m);
}

}  // namespace

TEST(RotationAngle, ReproducesProbability) {
  for (double p : {0.0, 1e-12, 0.01, 0.25, 0.5, 0.9, 1.0 - 1e-9, 1.0}) {
    EXPECT_NEAR(RotationAngle<double>::from_probability(p).probability(), p, 1e-14);
  }
  EXPECT_NEAR(RotationAngle<double>::from_probability(0.25).theta, std::numbers::pi / 6, 1e-15);
}

TEST(SuccessProb, ClassicFourElementCertainty) { EXPECT_NEAR(success_prob(0.25, 1), 1.0, 1e-15); }

TEST(SuccessProb, ZeroIterationsMeasuresInitialState) {
  for (double p : {0.0, 0.01, 0.3, 0.77, 1.0}) EXPECT_NEAR(success_prob(p, 0), p, 1e-15);
}

TEST(SuccessProb, Endpoints) {
  for (std::uint64_t j : {0u, 1u, 5u, 1000u}) {
    EXPECT_EQ(success_prob(0.0, j), 0.0);
    EXPECT_EQ(success_prob(1.0, j), 1.0);
  }
}

TEST(SuccessProb, SixteenElementsTwoIterations) {
  const double s = std::sin(5 * std::asin(0.25));
  EXPECT_NEAR(success_prob(1.0 / 16, 2), s * s, 1e-15);
  EXPECT_NEAR(success_prob(1.0 / 16, 2), rotation_matrix_success(1.0 / 16, 2), 1e-14);
}

TEST(SuccessProb, MatchesRotationMatrixPower) {
  for (double p : {1e-6, 1e-3, 0.01, 0.1, 0.3, 0.5, 0.7, 0.99}) {
    for (std::uint64_t j : {0u, 1u, 2u, 3u, 10u, 57u, 300u, 1000u, 4321u, 10000u}) {
      // A double angle carries about (2j + 1) ulps of phase error.
      const double tol = 1e-12 + 4e-16 * static_cast<double>(2 * j + 1);
      EXPECT_NEAR(success_prob(p, j), rotation_matrix_success(p, j), tol)
          << "p=" << p << " j=" << j;
    }
  }
}

TEST(SuccessProb, AlwaysAProbability) {
  for (int a = 0; a <= 1000; ++a) {
    const double p = a / 1000.0;
    for (std::uint64_t j = 0; j < 30; ++j) {
      const double s = success_prob(p, j);
      ASSERT_GE(s, 0.0);
      ASSERT_LE(s, 1.0);
    }
  }
}

TEST(ExactGroverQueries, FormulaValues) {
  EXPECT_EQ(exact_grover_queries(4, false), 2u);
  EXPECT_EQ(exact_grover_queries(1, true), 2u);
  EXPECT_EQ(exact_grover_queries(100, false), 8u);
  EXPECT_EQ(exact_grover_queries(2, true), 3u);
  EXPECT_EQ(exact_grover_queries(7, true), 4u);
  EXPECT_THROW(exact_grover_queries(0, false), std::invalid_argument);
}

TEST(ExactGroverQueries, NonDecreasing) {
  std::uint64_t prev = 0;
  for (std::uint64_t m = 1; m < 100000; ++m) {
    const auto q = exact_grover_queries(m, false);
    ASSERT_GE(q, prev);
    prev = q;
  }
}

TEST(UniformIterSuccess, SingleIterationRange) {
  EXPECT_NEAR(uniform_iter_success(0.5, 1), 0.5, 1e-15);
  for (double p : {0.01, 0.2, 0.9}) EXPECT_NEAR(uniform_iter_success(p, 1), p, 1e-15);
}

TEST(UniformIterSuccess, BruteForceAverageAtTenPercent) {
  EXPECT_NEAR(uniform_iter_success(0.1, 7), brute_average(0.1, 7), 1e-12);
}

TEST(UniformIterSuccess, MatchesBruteForceOnGrid) {
  for (double p : {1e-14, 1e-9, 1e-4, 0.003, 0.05, 0.2, 0.5, 0.8, 0.999, 1.0 - 1e-13}) {
    for (std::uint64_t m : {1u, 2u, 3u, 5u, 8u, 13u, 100u, 1000u, 4096u}) {
      EXPECT_NEAR(uniform_iter_success(p, m), brute_average(p, m), 1e-12)
          << "p=" << p << " m=" << m;
    }
  }
}

TEST(UniformIterSuccess, Endpoints) {
  EXPECT_EQ(uniform_iter_success(1.0, 17), 1.0);
  EXPECT_EQ(uniform_iter_success(0.0, 17), 0.0);
  EXPECT_THROW(uniform_iter_success(0.5, 0), std::invalid_argument);
}

TEST(UniformIterSuccess, QuarterAboveThreshold) {
  for (int a = 1; a < 500; ++a) {
    const double p = a / 500.0;
    const auto m0 = static_cast<std::uint64_t>(std::ceil(uniform_iter_threshold(p)));
    for (std::uint64_t m = m0; m < m0 + 200; ++m) {
      ASSERT_GE(uniform_iter_success(p, m), 0.25) << "p=" << p << " m=" << m;
    }
  }
  for (double p : {1e-8, 1e-6, 1e-4}) {
    const auto m0 = static_cast<std::uint64_t>(std::ceil(uniform_iter_threshold(p)));
    for (std::uint64_t m : {m0, m0 + 1, 2 * m0, 10 * m0}) {
      ASSERT_GE(uniform_iter_success(p, m), 0.25) << "p=" << p << " m=" << m;
    }
  }
}

TEST(RoundCost, LinearCounts) {
  EXPECT_EQ(round_cost(0), (RoundCost{1, 1, 0}));
  EXPECT_EQ(round_cost(1), (RoundCost{2, 2, 1}));
  EXPECT_EQ(round_cost(10), (RoundCost{11, 11, 10}));
}

TEST(Rotation, LongDoubleInstantiation) {
  EXPECT_NEAR(static_cast<double>(success_prob<long double>(0.25L, 1)), 1.0, 1e-18);
  EXPECT_NEAR(static_cast<double>(uniform_iter_success<long double>(0.1L, 7)),
              brute_average(0.1, 7), 1e-12);
}
