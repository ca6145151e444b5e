#include "advice_search/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "advice_search/numeric.hpp"

namespace advice_search {

namespace {

double sum_p_sqrt_rank(const AdviceDistribution& dist) {
  CompensatedSum<double> total;
  const auto& p = dist.probs();
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    total.add(p[i] * std::sqrt(static_cast<double>(i + 1)));
  }
  return total.value();
}

void check_exponent(double k) {
  if (!std::isfinite(k) || k >= 0.0) {
    throw std::invalid_argument("power-law exponent must be negative and finite");
  }
}

}  // namespace

std::uint64_t zalka_bound(std::uint64_t n, double p) {
  if (n < 2) {
    throw std::invalid_argument("Zalka bound needs n >= 2");
  }
  if (!(p >= 0.0) || p > 1.0) {
    throw std::invalid_argument("success probability must lie in (0, 1]");
  }
  const double ratio =
      std::asin(std::sqrt(p)) / (2.0 * std::asin(1.0 / std::sqrt(static_cast<double>(n))));
  // Rounding of the two arcsines must not push an exact integer up a step.
  const double v = std::ceil(ratio - 0.5 - 1e-9);
  return v <= 0.0 ? 0 : static_cast<std::uint64_t>(v);
}

LasVegasLower las_vegas_lower(std::uint64_t n, double grid_step, double coefficient) {
  if (n < 2) {
    throw std::invalid_argument("Las Vegas bound needs n >= 2");
  }
  if (!(grid_step > 0.0) || grid_step >= 1.0) {
    throw std::invalid_argument("grid step must lie in (0, 1)");
  }
  const double base = std::asin(1.0 / std::sqrt(static_cast<double>(n)));
  LasVegasLower out;
  out.grid_max = -std::numeric_limits<double>::infinity();
  const auto steps = static_cast<std::uint64_t>(std::floor(1.0 / grid_step));
  for (std::uint64_t s = 1; s < steps; ++s) {
    const double p = static_cast<double>(s) * grid_step;
    const double v = (1.0 - p) * (std::asin(std::sqrt(p)) / (2.0 * base) - 0.5);
    if (v > out.grid_max) {
      out.grid_max = v;
      out.argmax_p = p;
    }
  }
  out.arcsin_form = coefficient / base - kLasVegasOffset;
  out.sqrt_form = coefficient * std::sqrt(static_cast<double>(n)) - 1.0;
  return out;
}

double q_mu_lower(const AdviceDistribution& dist, double coefficient) {
  return coefficient * sum_p_sqrt_rank(dist) - 1.0;
}

double geometric_upper(const AdviceDistribution& dist) {
  return kGeometricConstant * sum_p_sqrt_rank(dist);
}

double unknown_upper_at(double p, std::size_t n) {
  const double worst = kUnknownL * std::sqrt(static_cast<double>(n));
  if (!(p > 0.0)) {
    return worst;
  }
  return std::min(kUnknownK / std::sqrt(p) + kUnknownM, worst);
}

double unknown_upper_total(const AdviceDistribution& dist) {
  const double threshold = 1.0 / static_cast<double>(dist.size());
  CompensatedSum<double> heavy;
  CompensatedSum<double> light;
  const auto& p = dist.probs();
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] > threshold) {
      heavy.add(std::sqrt(p[i]));
    } else {
      light.add(p[i]);
    }
  }
  return kUnknownK * heavy.value() +
         kUnknownL * std::sqrt(static_cast<double>(dist.size())) * light.value() + kUnknownM;
}

UnknownUpper unknown_upper(const AdviceDistribution& dist) {
  UnknownUpper out;
  out.per_x.resize(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    out.per_x[i] = unknown_upper_at(dist.prob(i), dist.size());
  }
  out.mu_total = unknown_upper_total(dist);
  return out;
}

BoundReport bound_report(const AdviceDistribution& dist) {
  BoundReport r;
  r.n = dist.size();
  CompensatedSum<double> d;
  const auto& p = dist.probs();
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    d.add(p[i] * static_cast<double>(i + 1));
  }
  r.d_mu = d.value();
  r.geometric_upper = geometric_upper(dist);
  r.q_lower = q_mu_lower(dist);
  if (dist.size() >= 2) {
    r.las_vegas = las_vegas_lower(dist.size());
  }
  r.unknown = unknown_upper(dist);
  r.x0 = x0_threshold(dist);
  return r;
}

AsymptoticClass powerlaw_exponent(CostModel model, double k) {
  check_exponent(k);
  switch (model) {
    case CostModel::classical:
      if (k > -1.0) return {1.0, LogFactor::none, false};
      if (k == -1.0) return {1.0, LogFactor::over_log, false};
      if (k > -2.0) return {k + 2.0, LogFactor::none, false};
      if (k == -2.0) return {0.0, LogFactor::times_log, false};
      return {0.0, LogFactor::none, false};
    case CostModel::quantum_known:
      if (k > -1.0) return {0.5, LogFactor::none, false};
      if (k == -1.0) return {0.5, LogFactor::over_log, false};
      if (k > -1.5) return {k + 1.5, LogFactor::none, false};
      if (k == -1.5) return {0.0, LogFactor::times_log, false};
      return {0.0, LogFactor::none, false};
    case CostModel::quantum_unknown:
      if (k >= -1.0) return {0.5, LogFactor::none, true};
      if (k > -2.0) return {-(0.5 + 1.0 / k), LogFactor::none, true};
      if (k == -2.0) return {0.0, LogFactor::times_log, true};
      return {0.0, LogFactor::none, true};
  }
  throw std::invalid_argument("unhandled cost model");
}

CostModel cost_model_from_string(std::string_view name) {
  if (name == "classical") return CostModel::classical;
  if (name == "quantum_known" || name == "geometric") return CostModel::quantum_known;
  if (name == "quantum_unknown" || name == "unknown") return CostModel::quantum_unknown;
  throw std::invalid_argument("unknown cost model '" + std::string(name) + "'");
}

}  // namespace advice_search
