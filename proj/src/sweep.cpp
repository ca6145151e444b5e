#include "advice_search/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "advice_search/bounds.hpp"
#include "advice_search/search.hpp"
#include "json.hpp"

namespace advice_search {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool same_k(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

double parse_number(const std::string& text) {
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size()) {
    throw std::invalid_argument("bad number '" + text + "'");
  }
  return v;
}

}  // namespace

SweepRow evaluate_point(const AdviceDistribution& dist, const RunConfig& config,
                        const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SweepRow row;
  row.n = dist.size();
  row.k_dist = config.dist.exponent();
  row.model = std::string(to_string(config.model));
  row.mode = std::string(to_string(config.mode));

  if (config.mode == SweepMode::exact) {
    row.report = exact_expectation(config.model, dist, config.k_algorithm);
  } else {
    row.report = monte_carlo(config.model, dist, config.k_algorithm, config.trials,
                             derive_seed(config.seed, row.n));
  }

  switch (config.model) {
    case Algorithm::classical_sequential:
    case Algorithm::classical_sampling:
      row.lower_bound = classical_expected(dist);
      row.upper_bound = static_cast<double>(dist.size());
      break;
    case Algorithm::geometric:
      row.lower_bound = q_mu_lower(dist);
      row.upper_bound = geometric_upper(dist);
      break;
    case Algorithm::unknown:
      row.lower_bound = q_mu_lower(dist);
      row.upper_bound = unknown_upper_total(dist);
      break;
  }

  if (options.record_time) {
    row.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return row;
}

SweepRow run_single(const RunConfig& config, const RunOptions& options) {
  config.validate();
  if (config.dist.kind == DistributionKind::power_law && config.dist.n == 0) {
    throw std::invalid_argument("a single run needs the list size n");
  }
  const AdviceDistribution dist = config.dist.build();
  return evaluate_point(dist, config, options);
}

std::vector<SweepRow> run_sweep(const RunConfig& config, const RunOptions& options) {
  config.validate();
  if (config.dist.kind != DistributionKind::power_law) {
    throw std::invalid_argument("sweeps need a power-law distribution");
  }
  std::vector<SweepRow> rows;
  rows.reserve(config.n_grid.size());
  for (std::uint64_t n : config.n_grid) {
    const AdviceDistribution dist = config.dist.build_with_size(static_cast<std::size_t>(n));
    rows.push_back(evaluate_point(dist, config, options));
  }
  return rows;
}

void write_csv_header(std::ostream& out) { out << kSweepHeader << '\n'; }

void write_csv_row(std::ostream& out, const SweepRow& row) {
  const auto& m = row.report.mean;
  const auto& e = row.report.std_error;
  out << row.n << ',' << format_double(row.k_dist) << ',' << row.model << ',' << row.mode << ','
      << format_double(m.f) << ',' << format_double(e.f) << ',' << format_double(m.o_mu) << ','
      << format_double(e.o_mu) << ',' << format_double(m.o_mu_inv) << ','
      << format_double(e.o_mu_inv) << ',' << format_double(row.lower_bound) << ','
      << format_double(row.upper_bound) << ',' << format_double(row.seconds) << '\n';
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  write_csv_header(out);
  for (const auto& row : rows) {
    write_csv_row(out, row);
  }
}

std::vector<SweepRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader) {
    throw std::invalid_argument("missing or unexpected sweep header");
  }
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 13) {
      throw std::invalid_argument("sweep row has " + std::to_string(f.size()) + " fields");
    }
    SweepRow row;
    row.n = static_cast<std::uint64_t>(std::stoull(f[0]));
    row.k_dist = parse_number(f[1]);
    row.model = f[2];
    row.mode = f[3];
    row.report.method =
        row.mode == "exact" ? EstimationMethod::exact : EstimationMethod::monte_carlo;
    row.report.mean = {parse_number(f[4]), parse_number(f[6]), parse_number(f[8])};
    row.report.std_error = {parse_number(f[5]), parse_number(f[7]), parse_number(f[9])};
    row.lower_bound = parse_number(f[10]);
    row.upper_bound = parse_number(f[11]);
    row.seconds = parse_number(f[12]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string row_to_json(const SweepRow& row) {
  nlohmann::ordered_json j;
  j["n"] = row.n;
  if (std::isnan(row.k_dist)) {
    j["k_dist"] = nullptr;
  } else {
    j["k_dist"] = row.k_dist;
  }
  j["model"] = row.model;
  j["mode"] = row.mode;
  j["f_mean"] = row.report.mean.f;
  j["f_stderr"] = row.report.std_error.f;
  j["omu_mean"] = row.report.mean.o_mu;
  j["omu_stderr"] = row.report.std_error.o_mu;
  j["omuinv_mean"] = row.report.mean.o_mu_inv;
  j["omuinv_stderr"] = row.report.std_error.o_mu_inv;
  j["lower_bound"] = row.lower_bound;
  j["upper_bound"] = row.upper_bound;
  j["seconds"] = row.seconds;
  return j.dump();
}

SlopeFit fit_slope(std::span<const SweepRow> rows) {
  if (rows.size() < 3) {
    throw std::invalid_argument("slope fit needs at least three rows");
  }
  const auto count = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd design(count, 2);
  Eigen::VectorXd target(count);
  for (Eigen::Index i = 0; i < count; ++i) {
    const SweepRow& r = rows[static_cast<std::size_t>(i)];
    if (r.model != rows.front().model || !same_k(r.k_dist, rows.front().k_dist)) {
      throw std::invalid_argument("slope fit rows must share model and k_dist");
    }
    if (!(r.report.mean.f > 0.0) || r.n == 0) {
      throw std::invalid_argument("slope fit needs positive n and expected values");
    }
    design(i, 0) = std::log(static_cast<double>(r.n));
    design(i, 1) = 1.0;
    target[i] = std::log(r.report.mean.f);
  }

  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(target);
  const Eigen::VectorXd residual = target - design * coef;
  const double ss_res = residual.squaredNorm();
  const double ss_tot = (target.array() - target.mean()).matrix().squaredNorm();

  SlopeFit fit;
  fit.alpha = coef[0];
  fit.intercept = coef[1];
  fit.points = rows.size();
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

SlopeFit fit_exponent(std::span<const SweepRow> rows) {
  std::vector<SweepRow> sorted(rows.begin(), rows.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const SweepRow& a, const SweepRow& b) { return a.n < b.n; });
  if (sorted.size() < 5) {
    throw std::invalid_argument("exponent fit needs at least five rows");
  }
  return fit_slope(std::span<const SweepRow>(sorted).subspan(2));
}

}  // namespace advice_search
