#include "advice_search/statevector.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "advice_search/rotation.hpp"

using namespace advice_search;

namespace {

// Oracle: the amplification operator as a dense matrix built from
// projectors, Q = -S_0^mu S_f with S_0^mu = I - 2|mu><mu|.
Eigen::MatrixXd dense_iteration(const AdviceDistribution& dist, std::size_t marked) {
  const auto n = static_cast<Eigen::Index>(dist.size());
  const Eigen::VectorXd mu = dist.probs().cwiseSqrt();
  Eigen::MatrixXd s_f = Eigen::MatrixXd::Identity(n, n);
  s_f(static_cast<Eigen::Index>(marked), static_cast<Eigen::Index>(marked)) = -1.0;
  const Eigen::MatrixXd s_mu = Eigen::MatrixXd::Identity(n, n) - 2.0 * mu * mu.transpose();
  return -s_mu * s_f;
}

AdviceDistribution random_dist(RandomStream& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(n);
  for (double& x : w) x = u(rng);
  return make_explicit(w);
}

}  // namespace

TEST(StateVector, BasisStateAndNorm) {
  const auto s = StateVector::basis(5, 3);
  EXPECT_EQ(s.dim(), 5u);
  EXPECT_EQ(s.probability(3), 1.0);
  EXPECT_EQ(s.norm_squared(), 1.0);
}

TEST(StateVector, PrepareMuAmplitudes) {
  const auto d = make_explicit(std::vector<double>{1, 3});
  const StateVector s = prepare_mu(d);
  EXPECT_NEAR(s.probability(0), 0.75, 1e-15);
  EXPECT_NEAR(s.probability(1), 0.25, 1e-15);
}

TEST(MuPreparation, IsInvolutionMappingZeroToMu) {
  RandomStream rng(2);
  const auto d = random_dist(rng, 9);
  const MuPreparation<std::complex<double>> prep(d);
  StateVector s = StateVector::basis(9, 0);
  prep.apply(s);
  EXPECT_LT((s.amps() - prep.mu()).norm(), 1e-14);
  prep.apply_inverse(s);
  EXPECT_LT((s.amps() - StateVector::basis(9, 0).amps()).norm(), 1e-14);
}

TEST(MuPreparation, PointMassIsIdentity) {
  const auto d = make_explicit(std::vector<double>{1, 0, 0});
  const MuPreparation<std::complex<double>> prep(d);
  StateVector s = StateVector::basis(3, 2);
  prep.apply(s);
  EXPECT_EQ(s.probability(2), 1.0);
}

TEST(AmplitudeAmplification, PreservesNorm) {
  RandomStream rng(4);
  const auto d = random_dist(rng, 33);
  StateVector s = prepare_mu(d);
  for (int j = 0; j < 500; ++j) s = aa_iteration(s, d, 7);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
}

TEST(AmplitudeAmplification, MatchesDenseMatrixOperator) {
  RandomStream rng(5);
  for (std::size_t n : {1u, 2u, 3u, 8u, 17u}) {
    const auto d = random_dist(rng, n);
    const std::size_t marked = n / 2;
    const Eigen::MatrixXd q = dense_iteration(d, marked);
    Eigen::VectorXd v = d.probs().cwiseSqrt();
    StateVector s = prepare_mu(d);
    for (int j = 0; j < 25; ++j) {
      v = q * v;
      s = aa_iteration(s, d, marked);
      ASSERT_LT((s.amps() - v.cast<std::complex<double>>()).norm(), 1e-11) << "n=" << n;
    }
  }
}

TEST(AmplitudeAmplification, GroverSixteenTwoIterations) {
  const double s = std::sin(5 * std::asin(0.25));
  EXPECT_NEAR(grover_success(16, 2), s * s, 1e-9);
}

TEST(AmplitudeAmplification, GroverFourOneIteration) { EXPECT_NEAR(grover_success(4, 1), 1.0, 1e-12); }

TEST(AmplitudeAmplification, AgreesWithClosedFormOnRandomInstances) {
  RandomStream rng(6);
  std::uniform_int_distribution<std::size_t> size(2, 64);
  for (int t = 0; t < 30; ++t) {
    const auto d = random_dist(rng, size(rng));
    std::uniform_int_distribution<std::size_t> pos(0, d.size() - 1);
    const std::size_t marked = pos(rng);
    for (std::uint64_t j : {0u, 1u, 2u, 5u, 13u, 50u, 200u}) {
      ASSERT_NEAR(aa_success(d, marked, j), success_prob(d.prob(marked), j), 1e-9);
    }
  }
}

TEST(AmplitudeAmplification, AverageOverIterationsMatchesUniformClosedForm) {
  RandomStream rng(8);
  for (int t = 0; t < 10; ++t) {
    const auto d = random_dist(rng, 20);
    const std::size_t marked = static_cast<std::size_t>(t);
    for (std::uint64_t m : {1u, 4u, 9u, 30u}) {
      double avg = 0.0;
      for (std::uint64_t j = 0; j < m; ++j) avg += aa_success(d, marked, j);
      avg /= static_cast<double>(m);
      ASSERT_NEAR(avg, uniform_iter_success(d.prob(marked), m), 1e-9);
    }
  }
}

TEST(AmplitudeAmplification, RejectsOversizedAndOutOfRange) {
  EXPECT_THROW(grover_success(5000, 1), std::length_error);
  EXPECT_THROW(grover_success(32, 1, 16), std::length_error);
  EXPECT_THROW(aa_success(make_uniform(4), 4, 1), std::out_of_range);
}

TEST(ExactSearchPlan, IterationCountDefinition) {
  for (std::size_t n = 1; n <= 2000; ++n) {
    const auto plan = plan_exact_search(n);
    const double bound = 1.0 / std::sqrt(static_cast<double>(n));
    const auto m = plan.iterations;
    ASSERT_LE(std::sin(std::numbers::pi / (2.0 * (2.0 * m + 1.0))), bound + 1e-15) << n;
    if (m > 0) {
      ASSERT_GT(std::sin(std::numbers::pi / (2.0 * (2.0 * m - 1.0))), bound) << n;
    }
    ASSERT_LE(plan.damped_amplitude, 1.0);
  }
  EXPECT_EQ(plan_exact_search(1).iterations, 0u);
  EXPECT_EQ(plan_exact_search(4).iterations, 1u);
}

TEST(ExactSearch, CertainForEverySizeAndPosition) {
  RandomStream rng(9);
  for (std::size_t n = 1; n <= 256; ++n) {
    for (std::size_t marked : {std::size_t{0}, n / 2, n - 1}) {
      const auto out = exact_search_outcome(n, marked, rng);
      ASSERT_NEAR(out.success_probability, 1.0, 1e-9) << "n=" << n;
      ASSERT_NEAR(out.final_norm, 1.0, 1e-9);
      ASSERT_EQ(out.found, marked);
      ASSERT_LE(out.ledger.f, exact_grover_queries(n, false) + 1) << "n=" << n;
    }
  }
}

TEST(ExactSearch, FourElementsWithinTwoQueries) {
  RandomStream rng(10);
  for (std::size_t marked = 0; marked < 4; ++marked) {
    const RunResult r = exact_search(4, marked, rng);
    EXPECT_EQ(r.found, marked);
    EXPECT_LE(r.ledger.f, 2u);
  }
}

TEST(ExactSearch, ZeroOrOneReportsNothingWhenUnmarked) {
  RandomStream rng(11);
  for (std::size_t n : {1u, 2u, 5u, 64u}) {
    const auto none = exact_search_zero_or_one(n, std::nullopt, rng);
    EXPECT_FALSE(none.found.has_value());
    EXPECT_EQ(none.ledger.f, plan_exact_search(n).iterations + 1);
    const auto one = exact_search_zero_or_one(n, n - 1, rng);
    ASSERT_TRUE(one.found.has_value());
    EXPECT_EQ(*one.found, n - 1);
  }
}

TEST(ExactSearch, RespectsCap) {
  RandomStream rng(12);
  EXPECT_THROW(exact_search(3000, 0, rng), std::length_error);
  EXPECT_THROW(exact_search(16, 0, rng, 16), std::length_error);
  EXPECT_NO_THROW(exact_search(8, 0, rng, 16));
}
