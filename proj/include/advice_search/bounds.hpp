#ifndef ADVICE_SEARCH_BOUNDS_HPP
#define ADVICE_SEARCH_BOUNDS_HPP

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string_view>
#include <vector>

#include "advice_search/advice_dist.hpp"

namespace advice_search {

// Constants of the Las Vegas lower bound T >= 0.206 / arcsin(1/sqrt(n)) - 0.316.
inline constexpr double kLasVegasCoefficient = 0.206;
inline constexpr double kLasVegasOffset = 0.316;

// Per-element ceiling of the unknown-distribution search,
// min{K / sqrt(p) + M, L sqrt(n)}, and the matching averaged constants.
inline constexpr double kUnknownK = 83.0;
inline constexpr double kUnknownL = 53.0;
inline constexpr double kUnknownM = 4.0 / 3.0;

// Geometric search upper-bound constant pi * e.
inline constexpr double kGeometricConstant = std::numbers::pi * std::numbers::e;

// Minimum query count of any quantum search over n elements that succeeds
// with probability at least p:
//   ceil(arcsin(sqrt p) / (2 arcsin(1 / sqrt n)) - 1/2).
std::uint64_t zalka_bound(std::uint64_t n, double p);

// Expected-query lower bound for zero-error search on the worst input,
// obtained by maximising (1 - p)(arcsin(sqrt p) / (2 arcsin(1/sqrt n)) - 1/2)
// over a grid of p. The two closed forms are reported alongside.
struct LasVegasLower {
  double grid_max = 0.0;
  double argmax_p = 0.0;
  double arcsin_form = 0.0;  // 0.206 / arcsin(1/sqrt n) - 0.316
  double sqrt_form = 0.0;    // 0.206 sqrt(n) - 1
};

LasVegasLower las_vegas_lower(std::uint64_t n, double grid_step = 1e-4,
                              double coefficient = kLasVegasCoefficient);

// coefficient * sum_x p_x sqrt(x) - 1.
double q_mu_lower(const AdviceDistribution& dist, double coefficient = kLasVegasCoefficient);

// pi e sum_x p_x sqrt(x).
double geometric_upper(const AdviceDistribution& dist);

// min{83 / sqrt(p) + 4/3, 53 sqrt(n)}; 53 sqrt(n) when p = 0.
double unknown_upper_at(double p, std::size_t n);

struct UnknownUpper {
  std::vector<double> per_x;
  // 83 sum_{p > 1/n} sqrt(p) + 53 sqrt(n) sum_{p <= 1/n} p + 4/3
  double mu_total = 0.0;
};

UnknownUpper unknown_upper(const AdviceDistribution& dist);
double unknown_upper_total(const AdviceDistribution& dist);

struct BoundReport {
  std::size_t n = 0;
  double d_mu = 0.0;
  double geometric_upper = 0.0;
  double q_lower = 0.0;
  LasVegasLower las_vegas;
  UnknownUpper unknown;
  std::size_t x0 = 0;
};

BoundReport bound_report(const AdviceDistribution& dist);

// Asymptotic growth of the expected query count for p_x proportional to
// x^k, as Theta(n^exponent) up to the flagged log factor.
enum class CostModel { classical, quantum_known, quantum_unknown };

enum class LogFactor {
  none,
  times_log,   // extra log n factor (exponent 0 means Theta(log n))
  over_log,    // divided by log n
};

struct AsymptoticClass {
  double exponent = 0.0;
  LogFactor log_factor = LogFactor::none;
  bool upper_bound_only = false;  // the unknown-model table only gives O(.)

  bool is_boundary() const { return log_factor != LogFactor::none; }
};

AsymptoticClass powerlaw_exponent(CostModel model, double k);

CostModel cost_model_from_string(std::string_view name);

}  // namespace advice_search

#endif  // ADVICE_SEARCH_BOUNDS_HPP
