#include "advice_search/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "advice_search/parallel.hpp"
#include "advice_search/rotation.hpp"

namespace advice_search {

namespace {

constexpr std::size_t kExpectationChunk = 1 << 16;
constexpr std::uint64_t kTrialChunk = 4096;

void check_position(const AdviceDistribution& dist, std::size_t marked) {
  if (marked >= dist.size()) {
    throw std::out_of_range("marked position " + std::to_string(marked) +
                            " outside list of size " + std::to_string(dist.size()));
  }
}

void check_geometric_ratio(double ratio) {
  if (!std::isfinite(ratio) || !(ratio > 1.0)) {
    throw std::invalid_argument("geometric search needs ratio > 1");
  }
}

void check_unknown_ratio(double ratio) {
  if (!std::isfinite(ratio) || !(ratio > 1.0) || !(ratio < 4.0 / 3.0)) {
    throw std::invalid_argument("unknown-distribution search needs 1 < ratio < 4/3");
  }
}

// Iteration-range sizes floor(ratio^j) for j = 0..last_round.
std::vector<std::uint64_t> unknown_schedule(std::size_t n, double ratio) {
  const std::uint64_t last = unknown_last_round(n, ratio);
  std::vector<std::uint64_t> sizes(last + 1);
  for (std::uint64_t j = 0; j <= last; ++j) {
    sizes[j] = floor_power(ratio, j);
  }
  return sizes;
}

OracleCounts<double> expected_cost_on_schedule(double p, std::span<const std::uint64_t> schedule,
                                               std::uint64_t final_grover) {
  const double miss_sample = 1.0 - p;
  double reach = 1.0;
  OracleCounts<double> cost;
  for (std::uint64_t m : schedule) {
    if (reach == 0.0) {
      break;
    }
    // Sampling step always runs; amplification runs only after a missed
    // sample, with E[i] = (m - 1) / 2 and cost (i + 1, i + 1, i).
    const double md = static_cast<double>(m);
    const double amp_f = miss_sample * (md + 1.0) / 2.0;
    const double amp_inv = miss_sample * (md - 1.0) / 2.0;
    cost.f += reach * (1.0 + amp_f);
    cost.o_mu += reach * (1.0 + amp_f);
    cost.o_mu_inv += reach * amp_inv;
    reach *= miss_sample * (1.0 - uniform_iter_success(p, m));
  }
  cost.f += reach * static_cast<double>(final_grover);
  return cost;
}

struct RunningStats {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double v) {
    ++count;
    const double delta = v - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (v - mean);
  }

  void merge(const RunningStats& other) {
    if (other.count == 0) {
      return;
    }
    const double total = static_cast<double>(count + other.count);
    const double delta = other.mean - mean;
    mean += delta * static_cast<double>(other.count) / total;
    m2 += other.m2 + delta * delta * static_cast<double>(count) *
                         static_cast<double>(other.count) / total;
    count += other.count;
  }

  double std_error() const {
    if (count < 2) {
      return 0.0;
    }
    const double n = static_cast<double>(count);
    return std::sqrt(m2 / (n - 1.0) / n);
  }
};

struct LedgerStats {
  RunningStats f;
  RunningStats o_mu;
  RunningStats o_mu_inv;

  void push(const QueryLedger& l) {
    f.push(static_cast<double>(l.f));
    o_mu.push(static_cast<double>(l.o_mu));
    o_mu_inv.push(static_cast<double>(l.o_mu_inv));
  }

  void merge(const LedgerStats& other) {
    f.merge(other.f);
    o_mu.merge(other.o_mu);
    o_mu_inv.merge(other.o_mu_inv);
  }
};

}  // namespace

// ---------------------------------------------------------------------------

RunResult classical_sequential(const AdviceDistribution& dist, std::size_t marked) {
  check_position(dist, marked);
  RunResult r;
  r.found = dist.original_index(marked);
  r.ledger.f = marked + 1;
  r.rounds = marked + 1;
  return r;
}

double classical_expected(const AdviceDistribution& dist) {
  CompensatedSum<double> total;
  const auto& p = dist.probs();
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    total.add(p[i] * static_cast<double>(i + 1));
  }
  return total.value();
}

RunResult classical_sampling_search(const AdviceDistribution& dist, std::size_t marked,
                                    RandomStream& rng) {
  check_position(dist, marked);
  if (!(dist.prob(marked) > 0.0)) {
    throw std::invalid_argument("sampling search never reaches a zero-probability element");
  }
  RunResult r;
  for (;;) {
    const std::size_t y = sample(dist, rng);
    ++r.ledger.o_mu;
    ++r.ledger.f;
    ++r.rounds;
    if (y == marked) {
      r.found = dist.original_index(marked);
      return r;
    }
  }
}

std::optional<double> classical_sampling_expected(const AdviceDistribution& dist) {
  // Each term is p_x * (1 / p_x) = 1.
  if (dist.support_size() < dist.size()) {
    return std::nullopt;
  }
  return static_cast<double>(dist.size());
}

// ---------------------------------------------------------------------------

GeometricBlocks geometric_blocks(std::size_t n, double ratio) {
  check_geometric_ratio(ratio);
  if (n == 0) {
    throw std::invalid_argument("geometric blocks need n >= 1");
  }
  GeometricBlocks out{ratio, {}};
  std::size_t start = 0;
  for (std::uint64_t step = 0; start < n; ++step) {
    const std::uint64_t nominal = floor_power(ratio, step);
    const std::size_t end = static_cast<std::size_t>(
        std::min<std::uint64_t>(start + nominal - 1, n - 1));
    out.blocks.push_back({start, end, nominal});
    start = end + 1;
  }
  return out;
}

std::uint64_t geometric_block_cost(const Block& block) {
  return exact_grover_queries(block.nominal_size, true);
}

RunResult geometric_search(const AdviceDistribution& dist, std::size_t marked, double ratio) {
  check_position(dist, marked);
  check_geometric_ratio(ratio);
  RunResult r;
  std::size_t start = 0;
  for (std::uint64_t step = 0; start < dist.size(); ++step) {
    const std::uint64_t nominal = floor_power(ratio, step);
    const std::size_t end = static_cast<std::size_t>(
        std::min<std::uint64_t>(start + nominal - 1, dist.size() - 1));
    r.ledger.f += exact_grover_queries(nominal, true);
    ++r.rounds;
    if (marked >= start && marked <= end) {
      r.found = dist.original_index(marked);
      return r;
    }
    start = end + 1;
  }
  throw std::logic_error("geometric blocks failed to cover the list");
}

ExpectationReport geometric_expected(const AdviceDistribution& dist, double ratio) {
  const GeometricBlocks layout = geometric_blocks(dist.size(), ratio);
  const auto& p = dist.probs();
  CompensatedSum<double> total;
  std::uint64_t cumulative = 0;
  for (const Block& b : layout.blocks) {
    cumulative += geometric_block_cost(b);
    CompensatedSum<double> mass;
    for (std::size_t i = b.first; i <= b.last; ++i) {
      mass.add(p[static_cast<Eigen::Index>(i)]);
    }
    total.add(mass.value() * static_cast<double>(cumulative));
  }
  ExpectationReport report;
  report.mean.f = total.value();
  return report;
}

// ---------------------------------------------------------------------------

std::uint64_t unknown_last_round(std::size_t n, double ratio) {
  if (n == 0) {
    throw std::invalid_argument("list must be non-empty");
  }
  if (!(ratio > 1.0)) {
    throw std::invalid_argument("ratio must exceed 1");
  }
  // Largest j with ratio^(2j) <= n, compared without taking logs.
  const long double limit = static_cast<long double>(n) * (1.0L + 1e-12L);
  const long double k = ratio;
  long double power = 1.0L;
  std::uint64_t j = 0;
  while ((power * k) * (power * k) <= limit) {
    power *= k;
    ++j;
  }
  return j;
}

double unknown_round_success(double p, std::uint64_t m) {
  return 1.0 - (1.0 - p) * (1.0 - uniform_iter_success(p, m));
}

RunResult unknown_search(const AdviceDistribution& dist, std::size_t marked, RandomStream& rng,
                         double ratio) {
  check_position(dist, marked);
  check_unknown_ratio(ratio);
  const double p = dist.prob(marked);
  const std::vector<std::uint64_t> schedule = unknown_schedule(dist.size(), ratio);

  RunResult r;
  r.found = dist.original_index(marked);
  for (std::uint64_t m : schedule) {
    ++r.rounds;
    const std::size_t y = sample(dist, rng);
    ++r.ledger.o_mu;
    ++r.ledger.f;
    if (y == marked) {
      return r;
    }
    std::uniform_int_distribution<std::uint64_t> pick(0, m - 1);
    const std::uint64_t i = pick(rng);
    r.ledger += round_cost(i);
    std::bernoulli_distribution measured_marked(success_prob(p, i));
    if (measured_marked(rng)) {
      return r;
    }
  }
  r.ledger.f += exact_grover_queries(dist.size(), false);
  return r;
}

OracleCounts<double> unknown_expected_cost(double p, std::size_t n, double ratio) {
  check_unknown_ratio(ratio);
  const std::vector<std::uint64_t> schedule = unknown_schedule(n, ratio);
  return expected_cost_on_schedule(p, schedule, exact_grover_queries(n, false));
}

ExpectationReport unknown_expected_exact(const AdviceDistribution& dist, std::size_t marked,
                                         double ratio) {
  check_position(dist, marked);
  ExpectationReport report;
  report.mean = unknown_expected_cost(dist.prob(marked), dist.size(), ratio);
  return report;
}

ExpectationReport unknown_expected_mu(const AdviceDistribution& dist, double ratio) {
  check_unknown_ratio(ratio);
  const std::vector<std::uint64_t> schedule = unknown_schedule(dist.size(), ratio);
  const std::uint64_t final_grover = exact_grover_queries(dist.size(), false);
  const auto& p = dist.probs();
  const std::size_t support = dist.support_size();
  const std::size_t chunks = (support + kExpectationChunk - 1) / kExpectationChunk;

  std::vector<OracleCounts<double>> partial(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    CompensatedSum<double> f;
    CompensatedSum<double> o;
    CompensatedSum<double> oi;
    const std::size_t first = c * kExpectationChunk;
    const std::size_t last = std::min(support, first + kExpectationChunk);
    for (std::size_t i = first; i < last; ++i) {
      const double px = p[static_cast<Eigen::Index>(i)];
      const OracleCounts<double> cost = expected_cost_on_schedule(px, schedule, final_grover);
      f.add(px * cost.f);
      o.add(px * cost.o_mu);
      oi.add(px * cost.o_mu_inv);
    }
    partial[c] = {f.value(), o.value(), oi.value()};
  });

  CompensatedSum<double> f;
  CompensatedSum<double> o;
  CompensatedSum<double> oi;
  for (const auto& part : partial) {
    f.add(part.f);
    o.add(part.o_mu);
    oi.add(part.o_mu_inv);
  }
  ExpectationReport report;
  report.mean = {f.value(), o.value(), oi.value()};
  return report;
}

// ---------------------------------------------------------------------------

Algorithm algorithm_from_string(std::string_view id) {
  if (id == "classical_sequential" || id == "classical") {
    return Algorithm::classical_sequential;
  }
  if (id == "classical_sampling" || id == "sampling") {
    return Algorithm::classical_sampling;
  }
  if (id == "geometric") {
    return Algorithm::geometric;
  }
  if (id == "unknown" || id == "unknown_search") {
    return Algorithm::unknown;
  }
  throw std::invalid_argument("unknown algorithm id '" + std::string(id) + "'");
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::classical_sequential:
      return "classical";
    case Algorithm::classical_sampling:
      return "sampling";
    case Algorithm::geometric:
      return "geometric";
    case Algorithm::unknown:
      return "unknown";
  }
  return "?";
}

double default_ratio(Algorithm algorithm) {
  return algorithm == Algorithm::unknown ? kUnknownRatio : kGeometricRatio;
}

void check_ratio(Algorithm algorithm, double ratio) {
  if (algorithm == Algorithm::geometric) {
    check_geometric_ratio(ratio);
  } else if (algorithm == Algorithm::unknown) {
    check_unknown_ratio(ratio);
  }
}

RunResult run_algorithm(Algorithm algorithm, const AdviceDistribution& dist, std::size_t marked,
                        double ratio, RandomStream& rng) {
  switch (algorithm) {
    case Algorithm::classical_sequential:
      return classical_sequential(dist, marked);
    case Algorithm::classical_sampling:
      return classical_sampling_search(dist, marked, rng);
    case Algorithm::geometric:
      return geometric_search(dist, marked, ratio);
    case Algorithm::unknown:
      return unknown_search(dist, marked, rng, ratio);
  }
  throw std::invalid_argument("unhandled algorithm");
}

ExpectationReport exact_expectation(Algorithm algorithm, const AdviceDistribution& dist,
                                    double ratio) {
  check_ratio(algorithm, ratio);
  ExpectationReport report;
  switch (algorithm) {
    case Algorithm::classical_sequential:
      report.mean.f = classical_expected(dist);
      return report;
    case Algorithm::classical_sampling: {
      const auto samples = classical_sampling_expected(dist);
      if (!samples) {
        throw std::domain_error("sampling search diverges: distribution lacks full support");
      }
      report.mean.f = *samples;
      report.mean.o_mu = *samples;
      return report;
    }
    case Algorithm::geometric:
      return geometric_expected(dist, ratio);
    case Algorithm::unknown:
      return unknown_expected_mu(dist, ratio);
  }
  throw std::invalid_argument("unhandled algorithm");
}

ExpectationReport monte_carlo(Algorithm algorithm, const AdviceDistribution& dist, double ratio,
                              std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) {
    throw std::invalid_argument("Monte Carlo needs at least one trial");
  }
  check_ratio(algorithm, ratio);
  const std::uint64_t chunks = (trials + kTrialChunk - 1) / kTrialChunk;
  std::vector<LedgerStats> partial(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    RandomStream rng(derive_seed(seed, c));
    const std::uint64_t first = c * kTrialChunk;
    const std::uint64_t last = std::min(trials, first + kTrialChunk);
    for (std::uint64_t t = first; t < last; ++t) {
      const std::size_t marked = sample(dist, rng);
      const RunResult run = run_algorithm(algorithm, dist, marked, ratio, rng);
      if (run.found != dist.original_index(marked)) {
        throw std::logic_error("search returned a wrong element");
      }
      partial[c].push(run.ledger);
    }
  });

  LedgerStats total;
  for (const auto& part : partial) {
    total.merge(part);
  }
  ExpectationReport report;
  report.method = EstimationMethod::monte_carlo;
  report.trials = trials;
  report.mean = {total.f.mean, total.o_mu.mean, total.o_mu_inv.mean};
  report.std_error = {total.f.std_error(), total.o_mu.std_error(), total.o_mu_inv.std_error()};
  return report;
}

ExpectationReport monte_carlo(std::string_view algorithm_id, const AdviceDistribution& dist,
                              double ratio, std::uint64_t trials, std::uint64_t seed) {
  return monte_carlo(algorithm_from_string(algorithm_id), dist, ratio, trials, seed);
}

}  // namespace advice_search
