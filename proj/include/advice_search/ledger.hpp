#ifndef ADVICE_SEARCH_LEDGER_HPP
#define ADVICE_SEARCH_LEDGER_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace advice_search {

// Per-oracle tally. The three oracles are the membership function f, the
// state preparation O_mu and its inverse. Integral instantiations count
// calls made by a single run; floating instantiations hold expectations.
template <typename T>
struct OracleCounts {
  T f{};
  T o_mu{};
  T o_mu_inv{};

  constexpr T total() const { return f + o_mu + o_mu_inv; }

  constexpr OracleCounts& operator+=(const OracleCounts& rhs) {
    f += rhs.f;
    o_mu += rhs.o_mu;
    o_mu_inv += rhs.o_mu_inv;
    return *this;
  }

  template <typename U>
  constexpr OracleCounts<U> cast() const {
    return {static_cast<U>(f), static_cast<U>(o_mu), static_cast<U>(o_mu_inv)};
  }

  friend constexpr OracleCounts operator+(OracleCounts lhs, const OracleCounts& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend constexpr OracleCounts operator*(T scale, OracleCounts c) {
    return {scale * c.f, scale * c.o_mu, scale * c.o_mu_inv};
  }
  friend constexpr bool operator==(const OracleCounts&, const OracleCounts&) = default;
};

// Calls made by one execution. Classical sample-based runs record each
// classical sample in o_mu and leave o_mu_inv at zero.
using QueryLedger = OracleCounts<std::uint64_t>;

struct RunResult {
  std::size_t found = 0;  // original (unsorted) index
  QueryLedger ledger;
  std::uint64_t rounds = 0;  // loop iterations executed
};

enum class EstimationMethod { exact, monte_carlo };

constexpr std::string_view to_string(EstimationMethod m) {
  return m == EstimationMethod::exact ? "exact" : "monte_carlo";
}

// Expected ledger, either computed exactly (std_error all zero, trials 0)
// or estimated from independent trials with normal-approximation errors.
struct ExpectationReport {
  OracleCounts<double> mean;
  OracleCounts<double> std_error;
  EstimationMethod method = EstimationMethod::exact;
  std::uint64_t trials = 0;
};

}  // namespace advice_search

#endif  // ADVICE_SEARCH_LEDGER_HPP
