#include "advice_search/advice_dist.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace advice_search {

namespace {

void check_power_law_args(std::size_t n, double k) {
  if (n == 0) {
    throw std::invalid_argument("power law needs n >= 1");
  }
  if (!std::isfinite(k)) {
    throw std::invalid_argument("power law exponent must be finite");
  }
  if (k >= 0.0) {
    throw std::invalid_argument("power law exponent must be negative, got " + std::to_string(k));
  }
}

}  // namespace

AdviceDistribution::AdviceDistribution(Eigen::VectorXd probs, std::vector<std::size_t> perm)
    : probs_(std::move(probs)), perm_(std::move(perm)), cdf_(probs_.size()) {
  CompensatedSum<double> running;
  for (Eigen::Index i = 0; i < probs_.size(); ++i) {
    running.add(probs_[i]);
    cdf_[i] = running.value();
    if (probs_[i] > 0.0) {
      support_ = static_cast<std::size_t>(i) + 1;
    }
  }
}

PowerLawSpec power_law_spec(std::size_t n, double k) {
  check_power_law_args(n, k);
  // Smallest terms first.
  CompensatedSum<double> total;
  for (std::size_t x = n; x >= 1; --x) {
    total.add(std::pow(static_cast<double>(x), k));
  }
  return {n, k, 1.0 / total.value()};
}

InverseAlphaBracket inverse_alpha_bracket(std::size_t n, double k) {
  check_power_law_args(n, k);
  const double nd = static_cast<double>(n);
  double integral = 0.0;
  if (k == -1.0) {
    integral = std::log(nd);
  } else {
    integral = std::expm1((k + 1.0) * std::log(nd)) / (k + 1.0);
  }
  return {integral, 1.0 + integral};
}

AdviceDistribution make_power_law(std::size_t n, double k) {
  const PowerLawSpec spec = power_law_spec(n, k);
  Eigen::VectorXd probs(static_cast<Eigen::Index>(n));
  for (std::size_t x = 1; x <= n; ++x) {
    probs[static_cast<Eigen::Index>(x - 1)] = spec.alpha * std::pow(static_cast<double>(x), k);
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return AdviceDistribution(std::move(probs), std::move(perm));
}

AdviceDistribution make_explicit(std::span<const double> weights) {
  if (weights.empty()) {
    throw std::invalid_argument("explicit distribution needs at least one weight");
  }
  CompensatedSum<double> total;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("explicit weights must be finite and non-negative");
    }
    total.add(w);
  }
  const double mass = total.value();
  if (!(mass > 0.0)) {
    throw std::invalid_argument("explicit weights are all zero");
  }

  std::vector<std::size_t> perm(weights.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });

  Eigen::VectorXd probs(static_cast<Eigen::Index>(weights.size()));
  for (std::size_t i = 0; i < perm.size(); ++i) {
    probs[static_cast<Eigen::Index>(i)] = weights[perm[i]] / mass;
  }
  return AdviceDistribution(std::move(probs), std::move(perm));
}

std::size_t x0_threshold(const AdviceDistribution& dist) {
  const double threshold = 1.0 / static_cast<double>(dist.size());
  const auto& p = dist.probs();
  // probs are non-increasing, so the qualifying positions form a prefix.
  const auto* first = p.data();
  const auto* last = first + p.size();
  const auto* it = std::partition_point(first, last, [&](double v) { return v >= threshold; });
  return static_cast<std::size_t>(it - first);
}

}  // namespace advice_search
