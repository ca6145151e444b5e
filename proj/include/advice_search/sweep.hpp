#ifndef ADVICE_SEARCH_SWEEP_HPP
#define ADVICE_SEARCH_SWEEP_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "advice_search/config.hpp"
#include "advice_search/ledger.hpp"

namespace advice_search {

// One measured configuration. lower_bound / upper_bound bracket f_mean:
//   classical   D(mu)                      .. n
//   sampling    D(mu)                      .. n
//   geometric   0.206 sum p_x sqrt(x) - 1  .. pi e sum p_x sqrt(x)
//   unknown     0.206 sum p_x sqrt(x) - 1  .. averaged per-element ceiling
struct SweepRow {
  std::uint64_t n = 0;
  double k_dist = 0.0;  // NaN for explicit weights
  std::string model;
  std::string mode;
  ExpectationReport report;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  double seconds = 0.0;
};

inline constexpr const char* kSweepHeader =
    "n,k_dist,model,mode,f_mean,f_stderr,omu_mean,omu_stderr,omuinv_mean,omuinv_stderr,"
    "lower_bound,upper_bound,seconds";

struct RunOptions {
  bool record_time = false;  // otherwise seconds is written as 0
};

// Evaluates one configuration on an already-built distribution. Monte Carlo
// points derive their seed from (config seed, n).
SweepRow evaluate_point(const AdviceDistribution& dist, const RunConfig& config,
                        const RunOptions& options = {});

SweepRow run_single(const RunConfig& config, const RunOptions& options = {});

// One row per n in config.n_grid, in grid order. Requires a power-law
// distribution.
std::vector<SweepRow> run_sweep(const RunConfig& config, const RunOptions& options = {});

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const SweepRow& row);
void write_csv(std::ostream& out, std::span<const SweepRow> rows);
std::vector<SweepRow> read_csv(std::istream& in);

std::string row_to_json(const SweepRow& row);

struct SlopeFit {
  double alpha = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

// Least-squares slope of log(f_mean) against log(n). Rows must share model
// and k_dist and have positive f_mean; at least three are needed.
SlopeFit fit_slope(std::span<const SweepRow> rows);

// fit_slope after dropping the two smallest n, where additive constants
// still dominate.
SlopeFit fit_exponent(std::span<const SweepRow> rows);

}  // namespace advice_search

#endif  // ADVICE_SEARCH_SWEEP_HPP
