#ifndef ADVICE_SEARCH_STATEVECTOR_HPP
#define ADVICE_SEARCH_STATEVECTOR_HPP

// Dense amplitude-vector simulation for small lists. This is the independent
// check on the closed forms in rotation.hpp, not the performance path.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "advice_search/advice_dist.hpp"
#include "advice_search/ledger.hpp"
#include "advice_search/numeric.hpp"

namespace advice_search {

inline constexpr std::size_t kDefaultStatevectorCap = 4096;

template <typename Scalar>
class BasicStateVector {
 public:
  using RealScalar = typename Eigen::NumTraits<Scalar>::Real;
  using Amplitudes = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit BasicStateVector(Amplitudes amps) : amps_(std::move(amps)) {}

  static BasicStateVector basis(std::size_t dim, std::size_t index) {
    Amplitudes a = Amplitudes::Zero(static_cast<Eigen::Index>(dim));
    a[static_cast<Eigen::Index>(index)] = Scalar(1);
    return BasicStateVector(std::move(a));
  }

  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const Amplitudes& amps() const { return amps_; }
  Amplitudes& amps() { return amps_; }

  RealScalar norm_squared() const { return amps_.squaredNorm(); }

  RealScalar probability(std::size_t index) const {
    return std::norm(std::complex<RealScalar>(amps_[static_cast<Eigen::Index>(index)]));
  }

 private:
  Amplitudes amps_;
};

using StateVector = BasicStateVector<std::complex<double>>;

inline void check_dimension(std::size_t dim, std::size_t cap) {
  if (dim > cap) {
    throw std::length_error("statevector dimension " + std::to_string(dim) +
                            " exceeds cap " + std::to_string(cap));
  }
}

// Reflection I - 2|e_index><e_index|.
template <typename Scalar>
void reflect_basis(BasicStateVector<Scalar>& state, std::size_t index) {
  state.amps()[static_cast<Eigen::Index>(index)] = -state.amps()[static_cast<Eigen::Index>(index)];
}

// The state-preparation unitary O_mu, realised as the Householder reflection
// exchanging |0> and |mu>. It is its own inverse, so O_mu^{-1} = O_mu.
template <typename Scalar>
class MuPreparation {
 public:
  using RealScalar = typename Eigen::NumTraits<Scalar>::Real;
  using Amplitudes = typename BasicStateVector<Scalar>::Amplitudes;

  explicit MuPreparation(const AdviceDistribution& dist)
      : mu_(dist.probs().template cast<RealScalar>().cwiseSqrt().template cast<Scalar>()) {
    householder_ = -mu_;
    householder_[0] += Scalar(1);
    norm_squared_ = householder_.squaredNorm();
  }

  const Amplitudes& mu() const { return mu_; }

  void apply(BasicStateVector<Scalar>& state) const {
    if (norm_squared_ == RealScalar(0)) {
      return;  // |mu> = |0>
    }
    const Scalar overlap = householder_.dot(state.amps());
    state.amps() -= (Scalar(2) * overlap / norm_squared_) * householder_;
  }

  void apply_inverse(BasicStateVector<Scalar>& state) const { apply(state); }

 private:
  Amplitudes mu_;
  Amplitudes householder_;
  RealScalar norm_squared_{};
};

// O_mu |0>, i.e. amplitudes sqrt(p_x).
StateVector prepare_mu(const AdviceDistribution& dist, std::size_t cap = kDefaultStatevectorCap);

// One application of -O_mu I_{|0>} O_mu^{-1} I_{|x>}.
template <typename Scalar>
void aa_iteration(BasicStateVector<Scalar>& state, const MuPreparation<Scalar>& prep,
                  std::size_t marked) {
  if (marked >= state.dim()) {
    throw std::out_of_range("marked position out of range");
  }
  reflect_basis(state, marked);
  prep.apply_inverse(state);
  reflect_basis(state, 0);
  prep.apply(state);
  state.amps() = -state.amps();
}

StateVector aa_iteration(const StateVector& state, const AdviceDistribution& dist,
                         std::size_t marked);

// Probability of reading out `marked` after `iterations` rounds of
// amplification starting from |mu>.
double aa_success(const AdviceDistribution& dist, std::size_t marked, std::uint64_t iterations,
                  std::size_t cap = kDefaultStatevectorCap);

// Standard Grover search from the uniform state, n elements.
double grover_success(std::size_t n, std::uint64_t iterations,
                      std::size_t cap = kDefaultStatevectorCap);

// Exact search via ancilla damping: the list is paired with one ancilla
// qubit and the good amplitude is rotated down from 1/sqrt(n) to
// sin(pi / (2 (2m + 1))) so that m rounds land exactly on the good state.
struct ExactSearchPlan {
  std::uint64_t iterations = 0;  // m
  double damped_amplitude = 0.0;
};

ExactSearchPlan plan_exact_search(std::size_t n);

struct ExactSearchOutcome {
  std::optional<std::size_t> found;
  QueryLedger ledger;
  double success_probability = 0.0;  // weight on (marked, ancilla on) before measuring
  double final_norm = 0.0;
};

// Zero-or-one-marked variant: an empty `marked` means no element is marked.
// The measured candidate is verified with one f query.
ExactSearchOutcome exact_search_zero_or_one(std::size_t n, std::optional<std::size_t> marked,
                                            RandomStream& rng,
                                            std::size_t cap = kDefaultStatevectorCap);

// Unique-marked-element variant; only the m oracle reflections are charged.
ExactSearchOutcome exact_search_outcome(std::size_t n, std::size_t marked, RandomStream& rng,
                                        std::size_t cap = kDefaultStatevectorCap);

RunResult exact_search(std::size_t n, std::size_t marked, RandomStream& rng,
                       std::size_t cap = kDefaultStatevectorCap);

}  // namespace advice_search

#endif  // ADVICE_SEARCH_STATEVECTOR_HPP
