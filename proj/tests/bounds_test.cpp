#include "advice_search/bounds.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "advice_search/search.hpp"

using namespace advice_search;

namespace {

double weighted_root_sum(const AdviceDistribution& d) {
  long double s = 0.0L;
  for (std::size_t i = 0; i < d.size(); ++i) {
    s += static_cast<long double>(d.prob(i)) * std::sqrt(static_cast<long double>(i + 1));
  }
  return static_cast<double>(s);
}

// Oracle: direct maximisation of the Las Vegas objective on a fine grid.
double brute_las_vegas(std::uint64_t n, double step) {
  const double denom = 2.0 * std::asin(1.0 / std::sqrt(static_cast<double>(n)));
  double best = -1e300;
  for (double p = 0.0; p <= 1.0; p += step) {
    best = std::max(best, (1.0 - p) * (std::asin(std::sqrt(p)) / denom - 0.5));
  }
  return best;
}

}  // namespace

TEST(Zalka, FormulaExamples) {
  EXPECT_EQ(zalka_bound(4, 1.0), 1u);
  EXPECT_EQ(zalka_bound(4, 1e-12), 0u);
  const double n = 1e6;
  const double approx = std::ceil(std::numbers::pi * std::sqrt(n) / 4 - 0.5);
  EXPECT_LE(std::abs(static_cast<double>(zalka_bound(1000000, 1.0)) - approx), 1.0);
}

TEST(Zalka, NonDecreasingInSuccessProbability) {
  for (std::uint64_t n : {4u, 100u, 65536u}) {
    std::uint64_t prev = 0;
    for (int a = 0; a <= 1000; ++a) {
      const auto q = zalka_bound(n, a / 1000.0);
      ASSERT_GE(q, prev);
      prev = q;
    }
  }
}

TEST(Zalka, RejectsDegenerateSize) { EXPECT_THROW(zalka_bound(1, 0.5), std::invalid_argument); }

TEST(LasVegas, ArgmaxNearThirtySevenPercent) {
  for (std::uint64_t n : {10000ull, 1000000ull}) {
    EXPECT_NEAR(las_vegas_lower(n).argmax_p, 0.369, 0.01) << n;
  }
}

TEST(LasVegas, GridMaxMatchesBruteForce) {
  for (std::uint64_t n : {4ull, 100ull, 1000000ull}) {
    EXPECT_NEAR(las_vegas_lower(n, 1e-4).grid_max, brute_las_vegas(n, 1e-4), 1e-9);
  }
}

TEST(LasVegas, DominatesSquareRootForm) {
  EXPECT_NEAR(las_vegas_lower(100).sqrt_form, 1.06, 1e-12);
  EXPECT_NEAR(las_vegas_lower(4).sqrt_form, -0.588, 1e-12);
  for (std::uint64_t n : {4ull, 16ull, 100ull, 10000ull, 1000000ull}) {
    const auto lv = las_vegas_lower(n);
    EXPECT_GE(lv.grid_max, lv.sqrt_form) << n;
  }
}

TEST(LasVegas, ArcsineFormWithinConstantRounding) {
  // The supremum of (1 - p) arcsin(sqrt p) / 2 is 0.20597..., just below the
  // rounded 0.206, so the arcsine form can exceed the grid maximum by up to
  // 3e-5 / arcsin(1/sqrt n).
  for (std::uint64_t n : {4ull, 16ull, 100ull, 10000ull, 1000000ull}) {
    const auto lv = las_vegas_lower(n);
    const double slack = 4e-5 / std::asin(1.0 / std::sqrt(static_cast<double>(n)));
    EXPECT_GE(lv.grid_max, lv.arcsin_form - slack) << n;
  }
}

TEST(QLower, PointMassAndUniform) {
  EXPECT_NEAR(q_mu_lower(make_explicit(std::vector<double>{1, 0, 0})), -0.794, 1e-12);
  for (std::size_t n : {1u, 10u, 1000u}) {
    double s = 0.0;
    for (std::size_t x = 1; x <= n; ++x) s += std::sqrt(static_cast<double>(x));
    EXPECT_NEAR(q_mu_lower(make_uniform(n)), 0.206 * s / static_cast<double>(n) - 1.0, 1e-10);
  }
}

TEST(GeometricUpper, Examples) {
  const double pe = std::numbers::pi * std::numbers::e;
  EXPECT_NEAR(geometric_upper(make_explicit(std::vector<double>{1, 0})), pe, 1e-12);
  EXPECT_NEAR(geometric_upper(make_uniform(4)),
              pe * (1 + std::sqrt(2.0) + std::sqrt(3.0) + 2) / 4, 1e-12);
  const auto d = make_power_law(5000, -1.2);
  EXPECT_NEAR(geometric_upper(d), pe * weighted_root_sum(d), 1e-10);
}

TEST(GeometricUpper, SandwichesGeometricExpectation) {
  std::vector<AdviceDistribution> family{make_uniform(1), make_uniform(4), make_uniform(1000),
                                         make_explicit(std::vector<double>{0, 1, 0})};
  for (double k : {-0.25, -1.0, -1.75, -2.5}) family.push_back(make_power_law(1 << 16, k));
  for (const auto& d : family) {
    const double v = geometric_expected(d).mean.f;
    EXPECT_LE(q_mu_lower(d), v);
    EXPECT_LE(v, geometric_upper(d));
  }
}

TEST(UnknownUpper, PointAndCrossover) {
  EXPECT_NEAR(unknown_upper_at(1.0, 3), 83 + 4.0 / 3.0, 1e-12);
  EXPECT_NEAR(unknown_upper_at(1.0, 2), 53 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(unknown_upper_at(0.0, 100), 530.0, 1e-12);
  const std::size_t n = 10000;
  const double p = 1.0 / n;
  EXPECT_EQ(unknown_upper_at(p, n), std::min(83 * 100 + 4.0 / 3.0, 53.0 * 100));
}

TEST(UnknownUpper, TotalAgainstDirectSum) {
  const auto d = make_power_law(4096, -1.3);
  const auto u = unknown_upper(d);
  ASSERT_EQ(u.per_x.size(), d.size());
  const double n = 4096;
  double big = 0.0;
  double small = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_EQ(u.per_x[i], unknown_upper_at(d.prob(i), d.size()));
    if (d.prob(i) > 1.0 / n) big += std::sqrt(d.prob(i));
    else small += d.prob(i);
  }
  const double expected = 83 * big + 53 * std::sqrt(n) * small + 4.0 / 3.0;
  EXPECT_NEAR(u.mu_total, expected, 1e-9 * expected);
  EXPECT_EQ(unknown_upper_total(d), u.mu_total);
}

TEST(UnknownUpper, CoversExactExpectation) {
  for (double k : {-0.5, -1.5, -2.5}) {
    const auto d = make_power_law(1 << 12, k);
    const auto e = unknown_expected_mu(d).mean;
    const double cap = unknown_upper_total(d);
    EXPECT_LE(e.f, cap);
    EXPECT_LE(e.o_mu, cap);
    EXPECT_LE(e.o_mu_inv, cap);
  }
}

TEST(BoundReport, Fields) {
  const auto d = make_uniform(64);
  const auto r = bound_report(d);
  EXPECT_EQ(r.n, 64u);
  EXPECT_EQ(r.d_mu, 32.5);
  EXPECT_EQ(r.x0, 64u);
  EXPECT_EQ(r.geometric_upper, geometric_upper(d));
  EXPECT_EQ(r.q_lower, q_mu_lower(d));
}

TEST(PowerlawExponent, TableExamples) {
  EXPECT_EQ(powerlaw_exponent(CostModel::classical, -1.5).exponent, 0.5);
  EXPECT_EQ(powerlaw_exponent(CostModel::quantum_known, -1.75).exponent, 0.0);
  EXPECT_NEAR(powerlaw_exponent(CostModel::quantum_unknown, -1.75).exponent, 1.0 / 14.0, 1e-15);
  EXPECT_EQ(powerlaw_exponent(CostModel::classical, -0.5).exponent, 1.0);
  EXPECT_EQ(powerlaw_exponent(CostModel::quantum_known, -1.25).exponent, 0.25);
  EXPECT_EQ(powerlaw_exponent(CostModel::quantum_unknown, -3.0).exponent, 0.0);
  EXPECT_TRUE(powerlaw_exponent(CostModel::quantum_unknown, -1.5).upper_bound_only);
}

TEST(PowerlawExponent, BoundariesFlagged) {
  EXPECT_TRUE(powerlaw_exponent(CostModel::classical, -1.0).is_boundary());
  EXPECT_TRUE(powerlaw_exponent(CostModel::classical, -2.0).is_boundary());
  EXPECT_TRUE(powerlaw_exponent(CostModel::quantum_known, -1.0).is_boundary());
  EXPECT_TRUE(powerlaw_exponent(CostModel::quantum_known, -1.5).is_boundary());
  EXPECT_TRUE(powerlaw_exponent(CostModel::quantum_unknown, -2.0).is_boundary());
  EXPECT_FALSE(powerlaw_exponent(CostModel::classical, -1.3).is_boundary());
}

TEST(PowerlawExponent, ContinuousAcrossPieces) {
  for (CostModel m : {CostModel::classical, CostModel::quantum_known, CostModel::quantum_unknown}) {
    for (double k0 : {-1.0, -1.5, -2.0}) {
      const double left = powerlaw_exponent(m, k0 - 1e-9).exponent;
      const double right = powerlaw_exponent(m, k0 + 1e-9).exponent;
      EXPECT_NEAR(left, right, 1e-6);
    }
  }
}

TEST(PowerlawExponent, RejectsNonNegative) {
  EXPECT_THROW(powerlaw_exponent(CostModel::classical, 0.0), std::invalid_argument);
  EXPECT_EQ(cost_model_from_string("classical"), CostModel::classical);
}
