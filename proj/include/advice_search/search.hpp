#ifndef ADVICE_SEARCH_SEARCH_HPP
#define ADVICE_SEARCH_SEARCH_HPP

// Executable models of the search procedures, their exact expectation
// calculators and a Monte Carlo driver.
//
// Positions are 0-based indices into the probability-sorted list; the
// 1-based rank x of a position i is i + 1. Quantum subroutines are simulated
// at the probability level: costs come from the rotation.hpp counts and
// success is a Bernoulli draw with the closed-form probability.

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "advice_search/advice_dist.hpp"
#include "advice_search/ledger.hpp"
#include "advice_search/numeric.hpp"

namespace advice_search {

inline constexpr double kGeometricRatio = std::numbers::e;
inline constexpr double kUnknownRatio = 1.162;

// ---------------------------------------------------------------------------
// Classical baselines

// Queries f at positions 0, 1, ... until the marked one.
RunResult classical_sequential(const AdviceDistribution& dist, std::size_t marked);

// sum_x p_x x over 1-based ranks.
double classical_expected(const AdviceDistribution& dist);

// Repeatedly samples from the distribution and checks each sample with f.
// Throws std::invalid_argument when the marked position has zero
// probability, since the loop would never terminate.
RunResult classical_sampling_search(const AdviceDistribution& dist, std::size_t marked,
                                    RandomStream& rng);

// Expected samples of the sampling search: exactly n when every p_x > 0,
// std::nullopt (divergent) otherwise.
std::optional<double> classical_sampling_expected(const AdviceDistribution& dist);

// ---------------------------------------------------------------------------
// Geometric search (known distribution)

struct Block {
  std::size_t first = 0;  // inclusive, 0-based
  std::size_t last = 0;   // inclusive, 0-based
  std::uint64_t nominal_size = 0;  // floor(ratio^step) before truncation at n

  std::size_t size() const { return last - first + 1; }
};

struct GeometricBlocks {
  double ratio = kGeometricRatio;
  std::vector<Block> blocks;
};

GeometricBlocks geometric_blocks(std::size_t n, double ratio = kGeometricRatio);

// f queries for the exact zero-or-one Grover search run on a block. The
// charge uses the nominal size floor(ratio^step), so a truncated final block
// costs the same as a full one.
std::uint64_t geometric_block_cost(const Block& block);

RunResult geometric_search(const AdviceDistribution& dist, std::size_t marked,
                           double ratio = kGeometricRatio);

ExpectationReport geometric_expected(const AdviceDistribution& dist,
                                     double ratio = kGeometricRatio);

// ---------------------------------------------------------------------------
// Search with an unknown distribution (sampling + randomised amplification)

// floor(log_ratio sqrt(n)): the last loop index, so the loop runs this plus
// one rounds before falling back to exact Grover search.
std::uint64_t unknown_last_round(std::size_t n, double ratio);

// Probability that round j succeeds for an element of probability p, with
// m = floor(ratio^j): 1 - (1 - p)(1 - P_m).
double unknown_round_success(double p, std::uint64_t m);

RunResult unknown_search(const AdviceDistribution& dist, std::size_t marked, RandomStream& rng,
                         double ratio = kUnknownRatio);

// Exact expected ledger for one marked position.
ExpectationReport unknown_expected_exact(const AdviceDistribution& dist, std::size_t marked,
                                         double ratio = kUnknownRatio);

// Same as above but only from the element's probability and the list size.
OracleCounts<double> unknown_expected_cost(double p, std::size_t n, double ratio = kUnknownRatio);

// sum_x p_x * unknown_expected_exact(x).
ExpectationReport unknown_expected_mu(const AdviceDistribution& dist,
                                      double ratio = kUnknownRatio);

// ---------------------------------------------------------------------------
// Drivers

enum class Algorithm { classical_sequential, classical_sampling, geometric, unknown };

// Accepts "classical_sequential" (alias "classical"), "classical_sampling"
// (alias "sampling"), "geometric" and "unknown" (alias "unknown_search").
Algorithm algorithm_from_string(std::string_view id);
std::string_view to_string(Algorithm algorithm);

// Default ratio per algorithm; ignored by the classical ones.
double default_ratio(Algorithm algorithm);

// Throws std::invalid_argument when the ratio is outside the range the
// algorithm is defined for.
void check_ratio(Algorithm algorithm, double ratio);

RunResult run_algorithm(Algorithm algorithm, const AdviceDistribution& dist, std::size_t marked,
                        double ratio, RandomStream& rng);

// Expected ledger with the marked element drawn from the distribution.
// Throws std::domain_error for the classical sampling search on a
// distribution without full support.
ExpectationReport exact_expectation(Algorithm algorithm, const AdviceDistribution& dist,
                                    double ratio);

// Draws the marked element from the distribution for each trial and reports
// per-oracle sample means with normal-approximation standard errors. Trials
// are split into fixed-size chunks with seeds derived from (seed, chunk), so
// the report is identical for any worker count.
ExpectationReport monte_carlo(Algorithm algorithm, const AdviceDistribution& dist, double ratio,
                              std::uint64_t trials, std::uint64_t seed);

ExpectationReport monte_carlo(std::string_view algorithm_id, const AdviceDistribution& dist,
                              double ratio, std::uint64_t trials, std::uint64_t seed);

}  // namespace advice_search

#endif  // ADVICE_SEARCH_SEARCH_HPP
