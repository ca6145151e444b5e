#ifndef ADVICE_SEARCH_ROTATION_HPP
#define ADVICE_SEARCH_ROTATION_HPP

// Closed forms for amplitude amplification restricted to the two-dimensional
// subspace spanned by the marked state and its complement. Nothing here
// touches a state vector, so these hold for arbitrary list sizes.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "advice_search/ledger.hpp"

namespace advice_search {

template <typename Real>
constexpr Real clamp_probability(Real p) {
  return std::clamp(p, Real(0), Real(1));
}

// Angle theta in [0, pi/2] with sin^2(theta) equal to the initial success
// probability. atan2 keeps both ends of the range well conditioned.
template <typename Real>
struct RotationAngle {
  Real theta{};

  static RotationAngle from_probability(Real p) {
    p = clamp_probability(p);
    return {std::atan2(std::sqrt(p), std::sqrt(Real(1) - p))};
  }

  Real probability() const {
    const Real s = std::sin(theta);
    return clamp_probability(s * s);
  }
};

// Probability that measuring after `iterations` rounds of amplification
// yields the marked element: sin^2((2j + 1) theta).
template <typename Real>
Real success_prob(Real p, std::uint64_t iterations) {
  if (p <= Real(0)) {
    return Real(0);
  }
  if (p >= Real(1)) {
    return Real(1);
  }
  const Real theta = RotationAngle<Real>::from_probability(p).theta;
  const Real s = std::sin(static_cast<Real>(2 * iterations + 1) * theta);
  return clamp_probability(s * s);
}

// Queries used by exact Grover search over m elements: ceil(pi/4 sqrt(m)),
// plus one verification query under the zero-or-one-marked promise.
inline std::uint64_t exact_grover_queries(std::uint64_t m, bool zero_or_one) {
  if (m == 0) {
    throw std::invalid_argument("exact Grover search needs a non-empty list");
  }
  const double iterations = std::ceil(std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(m)));
  return static_cast<std::uint64_t>(iterations) + (zero_or_one ? 1 : 0);
}

// Success probability when the iteration count r is drawn uniformly from
// {0, ..., m-1}:
//   P_m = 1/2 - sin(4 m theta) / (4 m sin(2 theta)).
// sin(2 theta) = 2 sqrt(p (1 - p)) is evaluated from theta, which is exact
// away from the endpoints; p = 0 and p = 1 are returned directly.
template <typename Real>
Real uniform_iter_success(Real p, std::uint64_t m) {
  if (m == 0) {
    throw std::invalid_argument("uniform iteration range must be non-empty");
  }
  if (p <= Real(0)) {
    return Real(0);
  }
  if (p >= Real(1)) {
    return Real(1);
  }
  const Real md = static_cast<Real>(m);
  Real ratio;
  if (p <= Real(0.5)) {
    const Real theta = std::atan2(std::sqrt(p), std::sqrt(Real(1) - p));
    ratio = std::sin(Real(4) * md * theta) / (Real(4) * md * std::sin(Real(2) * theta));
  } else {
    // theta = pi/2 - eps; sin(4 m theta) = -sin(4 m eps), sin(2 theta) = sin(2 eps).
    const Real eps = std::atan2(std::sqrt(Real(1) - p), std::sqrt(p));
    ratio = -std::sin(Real(4) * md * eps) / (Real(4) * md * std::sin(Real(2) * eps));
  }
  return clamp_probability(Real(0.5) - ratio);
}

// Iteration count above which P_m is guaranteed to be at least 1/4.
template <typename Real>
Real uniform_iter_threshold(Real p) {
  return Real(1) / (Real(2) * std::sqrt(p * (Real(1) - p)));
}

using RoundCost = QueryLedger;

// Oracle calls for one run of amplitude amplification with i iterations:
// i + 1 preparations, i un-preparations and i + 1 membership queries
// (i reflections plus the check of the measured outcome).
constexpr RoundCost round_cost(std::uint64_t iterations) {
  return {iterations + 1, iterations + 1, iterations};
}

}  // namespace advice_search

#endif  // ADVICE_SEARCH_ROTATION_HPP
