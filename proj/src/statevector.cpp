#include "advice_search/statevector.hpp"

#include <cmath>
#include <numbers>

namespace advice_search {

namespace {

std::size_t measure(const StateVector& state, RandomStream& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double target = unit(rng) * state.norm_squared();
  double running = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const double w = state.probability(i);
    if (w > 0.0) {
      last_nonzero = i;
    }
    running += w;
    if (target < running) {
      return i;
    }
  }
  return last_nonzero;
}

struct DampedSearch {
  StateVector state;
  std::uint64_t reflections = 0;
};

// Runs the ancilla-damped amplification. Basis index 2x + a holds list
// element x with ancilla a; the good subspace is (marked, a = 1).
DampedSearch run_damped_search(std::size_t n, std::optional<std::size_t> marked, std::size_t cap) {
  if (n == 0) {
    throw std::invalid_argument("exact search needs n >= 1");
  }
  if (marked && *marked >= n) {
    throw std::out_of_range("marked element out of range");
  }
  check_dimension(2 * n, cap);

  const ExactSearchPlan plan = plan_exact_search(n);
  const double root_n = std::sqrt(static_cast<double>(n));
  const double sin_phi = std::min(1.0, plan.damped_amplitude * root_n);
  const double cos_phi = std::sqrt(std::max(0.0, 1.0 - sin_phi * sin_phi));

  // A|0>: uniform over the list, ancilla rotated by phi.
  StateVector::Amplitudes initial(static_cast<Eigen::Index>(2 * n));
  for (std::size_t x = 0; x < n; ++x) {
    initial[static_cast<Eigen::Index>(2 * x)] = cos_phi / root_n;
    initial[static_cast<Eigen::Index>(2 * x + 1)] = sin_phi / root_n;
  }

  StateVector state(initial);
  for (std::uint64_t r = 0; r < plan.iterations; ++r) {
    if (marked) {
      reflect_basis(state, 2 * *marked + 1);
    }
    // -A I_{|0>} A^{-1} = 2|s><s| - I with |s> = A|0>.
    const std::complex<double> overlap = initial.dot(state.amps());
    state.amps() = 2.0 * overlap * initial - state.amps();
  }
  return {std::move(state), plan.iterations};
}

}  // namespace

StateVector prepare_mu(const AdviceDistribution& dist, std::size_t cap) {
  check_dimension(dist.size(), cap);
  MuPreparation<std::complex<double>> prep(dist);
  StateVector state = StateVector::basis(dist.size(), 0);
  prep.apply(state);
  return state;
}

StateVector aa_iteration(const StateVector& state, const AdviceDistribution& dist,
                         std::size_t marked) {
  if (state.dim() != dist.size()) {
    throw std::invalid_argument("state and distribution dimensions differ");
  }
  MuPreparation<std::complex<double>> prep(dist);
  StateVector next = state;
  aa_iteration(next, prep, marked);
  return next;
}

double aa_success(const AdviceDistribution& dist, std::size_t marked, std::uint64_t iterations,
                  std::size_t cap) {
  check_dimension(dist.size(), cap);
  if (marked >= dist.size()) {
    throw std::out_of_range("marked position out of range");
  }
  MuPreparation<std::complex<double>> prep(dist);
  StateVector state = StateVector::basis(dist.size(), 0);
  prep.apply(state);
  for (std::uint64_t j = 0; j < iterations; ++j) {
    aa_iteration(state, prep, marked);
  }
  return state.probability(marked);
}

double grover_success(std::size_t n, std::uint64_t iterations, std::size_t cap) {
  check_dimension(n, cap);
  return aa_success(make_uniform(n), n - 1, iterations, cap);
}

ExactSearchPlan plan_exact_search(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("exact search needs n >= 1");
  }
  const double target = 1.0 / std::sqrt(static_cast<double>(n));
  std::uint64_t m = 0;
  double a = 1.0;
  for (;; ++m) {
    a = std::sin(std::numbers::pi / (2.0 * static_cast<double>(2 * m + 1)));
    if (a <= target) {
      break;
    }
  }
  return {m, a};
}

ExactSearchOutcome exact_search_zero_or_one(std::size_t n, std::optional<std::size_t> marked,
                                            RandomStream& rng, std::size_t cap) {
  DampedSearch run = run_damped_search(n, marked, cap);
  ExactSearchOutcome out;
  out.final_norm = run.state.norm_squared();
  out.success_probability = marked ? run.state.probability(2 * *marked + 1) : 0.0;
  out.ledger.f = run.reflections + 1;
  const std::size_t candidate = measure(run.state, rng) / 2;
  if (marked && candidate == *marked) {
    out.found = candidate;
  }
  return out;
}

ExactSearchOutcome exact_search_outcome(std::size_t n, std::size_t marked, RandomStream& rng,
                                        std::size_t cap) {
  DampedSearch run = run_damped_search(n, marked, cap);
  ExactSearchOutcome out;
  out.final_norm = run.state.norm_squared();
  out.success_probability = run.state.probability(2 * marked + 1);
  out.ledger.f = run.reflections;
  out.found = measure(run.state, rng) / 2;
  return out;
}

RunResult exact_search(std::size_t n, std::size_t marked, RandomStream& rng, std::size_t cap) {
  const ExactSearchOutcome out = exact_search_outcome(n, marked, rng, cap);
  return {*out.found, out.ledger, 1};
}

}  // namespace advice_search
