#ifndef ADVICE_SEARCH_CONFIG_HPP
#define ADVICE_SEARCH_CONFIG_HPP

// Experiment configuration files. A config is a JSON object holding a
// distribution description
//
//   {"kind": "powerlaw", "n": 65536, "k": -1.75}
//   {"kind": "explicit", "weights": [3, 1, 1]}
//
// with the algorithm fields alongside it:
//
//   "model"       classical | geometric | unknown | sampling   (required)
//   "k_algorithm" ratio of the search schedule (default per model)
//   "mode"        exact | monte_carlo                          (default exact)
//   "trials"      Monte Carlo trials                           (default 100000)
//   "seed"        Monte Carlo seed                             (default 1)
//   "n_grid"      list sizes for a sweep (default 2^8 .. 2^24)

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "advice_search/advice_dist.hpp"
#include "advice_search/search.hpp"

namespace advice_search {

// Malformed config text: not JSON, missing or mistyped fields.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DistributionKind { power_law, explicit_weights };

struct DistributionSpec {
  DistributionKind kind = DistributionKind::power_law;
  std::size_t n = 0;
  double k = 0.0;
  std::vector<double> weights;

  // Throws std::invalid_argument for out-of-range parameters.
  AdviceDistribution build() const;
  AdviceDistribution build_with_size(std::size_t size) const;

  // NaN for explicit weights.
  double exponent() const;
};

enum class SweepMode { exact, monte_carlo };

std::string_view to_string(SweepMode mode);
SweepMode sweep_mode_from_string(std::string_view text);

std::vector<std::uint64_t> default_n_grid();

struct RunConfig {
  DistributionSpec dist;
  Algorithm model = Algorithm::geometric;
  double k_algorithm = kGeometricRatio;
  SweepMode mode = SweepMode::exact;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> n_grid = default_n_grid();

  // Throws std::invalid_argument when a value is outside its valid range.
  void validate() const;
};

RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::string& path);

}  // namespace advice_search

#endif  // ADVICE_SEARCH_CONFIG_HPP
