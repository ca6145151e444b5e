#ifndef ADVICE_SEARCH_ADVICE_DIST_HPP
#define ADVICE_SEARCH_ADVICE_DIST_HPP

#include <algorithm>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "advice_search/numeric.hpp"

namespace advice_search {

// A probability distribution over list positions, held in non-increasing
// order of probability. Position i (0-based) in the sorted view is rank
// i + 1 in the usual 1-based notation; perm()[i] is the original index the
// weight came from. Immutable once built.
class AdviceDistribution {
 public:
  std::size_t size() const { return static_cast<std::size_t>(probs_.size()); }

  const Eigen::VectorXd& probs() const { return probs_; }
  double prob(std::size_t position) const { return probs_[static_cast<Eigen::Index>(position)]; }

  const std::vector<std::size_t>& perm() const { return perm_; }
  std::size_t original_index(std::size_t position) const { return perm_[position]; }

  // Inclusive prefix sums of probs().
  const Eigen::VectorXd& cdf() const { return cdf_; }

  // Number of leading positions with non-zero probability.
  std::size_t support_size() const { return support_; }

  friend AdviceDistribution make_power_law(std::size_t n, double k);
  friend AdviceDistribution make_explicit(std::span<const double> weights);

 private:
  AdviceDistribution(Eigen::VectorXd probs, std::vector<std::size_t> perm);

  Eigen::VectorXd probs_;
  std::vector<std::size_t> perm_;
  Eigen::VectorXd cdf_;
  std::size_t support_ = 0;
};

// p_x proportional to x^k (x = 1..n, k < 0), normalised by direct
// compensated summation.
struct PowerLawSpec {
  std::size_t n = 0;
  double k = 0.0;
  double alpha = 0.0;  // 1 / sum_{x=1}^n x^k
};

PowerLawSpec power_law_spec(std::size_t n, double k);

// Closed interval [int_1^n x^k dx, 1 + int_1^n x^k dx] known to contain
// 1/alpha.
struct InverseAlphaBracket {
  double lower = 0.0;
  double upper = 0.0;
};

InverseAlphaBracket inverse_alpha_bracket(std::size_t n, double k);

AdviceDistribution make_power_law(std::size_t n, double k);

// Normalises non-negative weights and stably sorts them non-increasing.
// Ties keep their original order; zero weights end up at the tail.
AdviceDistribution make_explicit(std::span<const double> weights);

inline AdviceDistribution make_uniform(std::size_t n) {
  const std::vector<double> weights(n, 1.0);
  return make_explicit(weights);
}

// Draws a sorted position with probability probs()[position].
template <typename Urbg>
std::size_t sample(const AdviceDistribution& dist, Urbg& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  const auto& cdf = dist.cdf();
  const auto* first = cdf.data();
  const auto* last = first + dist.support_size();
  const auto* it = std::upper_bound(first, last, u);
  if (it == last) {
    // u landed above the rounded total mass.
    return dist.support_size() - 1;
  }
  return static_cast<std::size_t>(it - first);
}

// Number of positions with p >= 1/n, which for a sorted distribution is the
// largest 1-based rank meeting the threshold (0 when none does).
std::size_t x0_threshold(const AdviceDistribution& dist);

}  // namespace advice_search

#endif  // ADVICE_SEARCH_ADVICE_DIST_HPP
