#include "advice_search/validate.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "advice_search/rotation.hpp"
#include "advice_search/search.hpp"

namespace advice_search {

namespace {

struct Check {
  std::string name;
  // Returns an empty string on success, otherwise a failure description.
  std::function<std::string()> body;
  std::size_t needs_dimension = 0;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

std::vector<AdviceDistribution> sandwich_family() {
  std::vector<AdviceDistribution> out;
  for (std::size_t n : {1u, 4u, 100u, 4096u}) {
    out.push_back(make_uniform(n));
  }
  for (double k : {-0.25, -0.75, -1.25, -1.75, -2.5}) {
    out.push_back(make_power_law(1 << 14, k));
  }
  const std::vector<double> point{0.0, 0.0, 5.0, 0.0};
  out.push_back(make_explicit(point));
  RandomStream rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(3000);
  for (double& x : w) x = u(rng);
  out.push_back(make_explicit(w));
  return out;
}

std::string grover_closed_form(std::size_t max_n) {
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (std::uint64_t j = 0; j <= 20; ++j) {
      const double sim = grover_success(n, j);
      const double closed = success_prob(1.0 / static_cast<double>(n), j);
      if (std::abs(sim - closed) > 1e-9) {
        return "n=" + std::to_string(n) + " j=" + std::to_string(j) + " sim=" + fmt(sim) +
               " closed=" + fmt(closed);
      }
    }
  }
  return {};
}

std::string aa_closed_form(std::size_t max_n, std::uint64_t seed) {
  RandomStream rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  std::uniform_int_distribution<std::uint64_t> iters(0, 50);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    std::vector<double> w(size(rng));
    for (double& x : w) x = weight(rng);
    const AdviceDistribution dist = make_explicit(w);
    std::uniform_int_distribution<std::size_t> pos(0, dist.size() - 1);
    const std::size_t marked = pos(rng);
    const std::uint64_t j = iters(rng);
    const double sim = aa_success(dist, marked, j);
    const double closed = success_prob(dist.prob(marked), j);
    if (std::abs(sim - closed) > 1e-9) {
      return "trial " + std::to_string(t) + " sim=" + fmt(sim) + " closed=" + fmt(closed);
    }
  }
  return {};
}

std::string exact_search_certainty(std::size_t max_n, std::uint64_t seed) {
  RandomStream rng(seed);
  for (std::size_t n = 1; n <= max_n; ++n) {
    const ExactSearchOutcome out = exact_search_outcome(n, n / 2, rng);
    if (out.success_probability < 1.0 - 1e-9) {
      return "n=" + std::to_string(n) + " success=" + fmt(out.success_probability);
    }
    if (out.ledger.f > exact_grover_queries(n, false) + 1) {
      return "n=" + std::to_string(n) + " used " + std::to_string(out.ledger.f) + " queries";
    }
  }
  return {};
}

std::string uniform_average_closed_form() {
  for (int a = 1; a <= 20; ++a) {
    const double p = a / 21.0;
    for (std::uint64_t m : {1u, 2u, 3u, 7u, 16u, 50u, 200u}) {
      double brute = 0.0;
      for (std::uint64_t r = 0; r < m; ++r) brute += success_prob(p, r);
      brute /= static_cast<double>(m);
      const double closed = uniform_iter_success(p, m);
      if (std::abs(brute - closed) > 1e-12) {
        return "p=" + fmt(p) + " m=" + std::to_string(m);
      }
    }
  }
  return {};
}

std::string uniform_average_threshold() {
  for (int a = 1; a < 200; ++a) {
    const double p = a / 200.0;
    const auto m = static_cast<std::uint64_t>(std::ceil(uniform_iter_threshold(p)));
    for (std::uint64_t mm = m; mm < m + 40; ++mm) {
      if (uniform_iter_success(p, mm) < 0.25) {
        return "p=" + fmt(p) + " m=" + std::to_string(mm);
      }
    }
  }
  return {};
}

std::string geometric_sandwich(double coefficient) {
  for (const auto& dist : sandwich_family()) {
    const double value = geometric_expected(dist).mean.f;
    const double lower = q_mu_lower(dist, coefficient);
    const double upper = geometric_upper(dist);
    if (!(lower <= value && value <= upper)) {
      return "n=" + std::to_string(dist.size()) + " lower=" + fmt(lower) + " value=" +
             fmt(value) + " upper=" + fmt(upper);
    }
  }
  return {};
}

std::string las_vegas_sandwich(double coefficient) {
  for (std::uint64_t n : {4ull, 16ull, 100ull, 10000ull, 1000000ull}) {
    const LasVegasLower lv = las_vegas_lower(n, 1e-4, coefficient);
    if (lv.grid_max < lv.sqrt_form) {
      return "n=" + std::to_string(n) + " grid max " + fmt(lv.grid_max) + " < " +
             fmt(coefficient) + " sqrt(n) - 1 = " + fmt(lv.sqrt_form);
    }
    // The grid maximum and the arcsine form agree to the rounding of the
    // leading constant.
    const double slack = 1e-4 / std::asin(1.0 / std::sqrt(static_cast<double>(n))) + 1e-3;
    if (lv.grid_max < lv.arcsin_form - slack) {
      return "n=" + std::to_string(n) + " grid max " + fmt(lv.grid_max) +
             " below arcsine form " + fmt(lv.arcsin_form);
    }
  }
  return {};
}

std::string unknown_ceiling() {
  for (std::size_t n : {256u, 4096u}) {
    for (double k : {-0.5, -1.25, -2.5}) {
      const AdviceDistribution dist = make_power_law(n, k);
      for (std::size_t i = 0; i < n; i += std::max<std::size_t>(1, n / 50)) {
        const auto cost = unknown_expected_exact(dist, i).mean;
        const double cap = unknown_upper_at(dist.prob(i), n);
        if (cost.f > cap || cost.o_mu > cap || cost.o_mu_inv > cap) {
          return "n=" + std::to_string(n) + " k=" + fmt(k) + " position " + std::to_string(i);
        }
      }
    }
  }
  return {};
}

std::string exact_vs_monte_carlo(std::uint64_t trials, std::uint64_t seed) {
  const std::vector<AdviceDistribution> dists{make_uniform(64), make_power_law(1024, -1.5)};
  for (Algorithm a : {Algorithm::classical_sequential, Algorithm::geometric, Algorithm::unknown}) {
    for (const auto& dist : dists) {
      const double ratio = default_ratio(a);
      const auto exact = exact_expectation(a, dist, ratio);
      const auto mc = monte_carlo(a, dist, ratio, trials, seed);
      const double diffs[] = {mc.mean.f - exact.mean.f, mc.mean.o_mu - exact.mean.o_mu,
                              mc.mean.o_mu_inv - exact.mean.o_mu_inv};
      const double errs[] = {mc.std_error.f, mc.std_error.o_mu, mc.std_error.o_mu_inv};
      for (int c = 0; c < 3; ++c) {
        if (std::abs(diffs[c]) > 4.0 * errs[c] + 1e-9) {
          return std::string(to_string(a)) + " n=" + std::to_string(dist.size()) +
                 " counter " + std::to_string(c) + " off by " + fmt(diffs[c]);
        }
      }
    }
  }
  return {};
}

std::string classical_facts() {
  for (std::size_t n : {1u, 7u, 100u, 1024u}) {
    const double expected = (static_cast<double>(n) + 1.0) / 2.0;
    if (classical_expected(make_uniform(n)) != expected) {
      return "uniform n=" + std::to_string(n);
    }
    const auto samples = classical_sampling_expected(make_power_law(n, -1.3));
    if (!samples || *samples != static_cast<double>(n)) {
      return "sampling n=" + std::to_string(n);
    }
  }
  return {};
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidationOptions& options) {
  const std::size_t sv_n = options.statevector_max_n;
  const double coef = options.lower_coefficient;
  const std::vector<Check> checks{
      {"statevector_grover_closed_form", [&] { return grover_closed_form(sv_n); }, sv_n},
      {"statevector_amplification_closed_form",
       [&] { return aa_closed_form(sv_n, options.seed); }, sv_n},
      {"exact_search_certainty", [&] { return exact_search_certainty(sv_n, options.seed); },
       2 * sv_n},
      {"uniform_iteration_closed_form", [] { return uniform_average_closed_form(); }, 0},
      {"uniform_iteration_threshold", [] { return uniform_average_threshold(); }, 0},
      {"geometric_bound_sandwich", [&] { return geometric_sandwich(coef); }, 0},
      {"las_vegas_lower_sandwich", [&] { return las_vegas_sandwich(coef); }, 0},
      {"unknown_search_ceiling", [] { return unknown_ceiling(); }, 0},
      {"exact_vs_monte_carlo",
       [&] { return exact_vs_monte_carlo(options.trials, options.seed); }, 0},
      {"classical_facts", [] { return classical_facts(); }, 0},
  };

  std::vector<CheckResult> results;
  for (const auto& check : checks) {
    CheckResult r{check.name, CheckStatus::pass, {}};
    if (check.needs_dimension > options.statevector_cap) {
      r.status = CheckStatus::skip;
      r.detail = "warning: needs statevector dimension " + std::to_string(check.needs_dimension) +
                 " above cap " + std::to_string(options.statevector_cap);
    } else {
      try {
        r.detail = check.body();
        r.status = r.detail.empty() ? CheckStatus::pass : CheckStatus::fail;
      } catch (const std::exception& e) {
        r.status = CheckStatus::fail;
        r.detail = std::string("exception: ") + e.what();
      }
    }
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (r.status == CheckStatus::fail) {
      return false;
    }
  }
  return true;
}

void print_report(std::ostream& out, const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    const char* tag = r.status == CheckStatus::pass   ? "PASS"
                      : r.status == CheckStatus::fail ? "FAIL"
                                                      : "SKIP";
    out << tag << ' ' << r.name;
    if (!r.detail.empty()) {
      out << ": " << r.detail;
    }
    out << '\n';
  }
}

}  // namespace advice_search
