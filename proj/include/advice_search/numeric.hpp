#ifndef ADVICE_SEARCH_NUMERIC_HPP
#define ADVICE_SEARCH_NUMERIC_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace advice_search {

// Neumaier's variant of Kahan summation.
template <typename Real>
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;
  constexpr explicit CompensatedSum(Real initial) : sum_(initial) {}

  constexpr void add(Real value) {
    const Real t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  constexpr CompensatedSum& operator+=(Real value) {
    add(value);
    return *this;
  }

  constexpr Real value() const { return sum_ + compensation_; }

 private:
  Real sum_{};
  Real compensation_{};
};

// Caller-owned random stream; one per worker.
using RandomStream = std::mt19937_64;

// SplitMix64 finalizer, used to derive independent per-task seeds from a
// user seed so results do not depend on how tasks are scheduled.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t task) {
  return mix_seed(mix_seed(seed) ^ mix_seed(task + 0x632be59bd9b4e019ULL));
}

// floor(base^exponent) for base > 1, snapping to the nearest integer when
// the extended-precision power lies within a relative 1e-12 of it.
inline std::uint64_t floor_power(long double base, std::uint64_t exponent) {
  const long double v = std::pow(base, static_cast<long double>(exponent));
  const long double nearest = std::nearbyint(v);
  if (std::abs(v - nearest) <= 1e-12L * v) {
    return static_cast<std::uint64_t>(nearest);
  }
  return static_cast<std::uint64_t>(std::floor(v));
}

}  // namespace advice_search

#endif  // ADVICE_SEARCH_NUMERIC_HPP
