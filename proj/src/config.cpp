#include "advice_search/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace advice_search {

namespace {

using nlohmann::json;

template <typename T>
T required(const json& obj, const char* key) {
  if (!obj.contains(key)) {
    throw ConfigError(std::string("missing field '") + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("field '") + key + "' has the wrong type: " + e.what());
  }
}

template <typename T>
T optional_field(const json& obj, const char* key, T fallback) {
  if (!obj.contains(key)) {
    return fallback;
  }
  return required<T>(obj, key);
}

// Integers must be JSON integers, not floats or negative numbers.
std::uint64_t unsigned_field(const json& obj, const char* key) {
  const json& v = obj.at(key);
  if (v.is_number_unsigned()) {
    return v.get<std::uint64_t>();
  }
  if (v.is_number_integer()) {
    throw std::invalid_argument(std::string("field '") + key + "' must be non-negative");
  }
  throw ConfigError(std::string("field '") + key + "' must be an integer");
}

}  // namespace

AdviceDistribution DistributionSpec::build() const { return build_with_size(n); }

AdviceDistribution DistributionSpec::build_with_size(std::size_t size) const {
  if (kind == DistributionKind::power_law) {
    return make_power_law(size, k);
  }
  if (size != weights.size()) {
    throw std::invalid_argument("explicit weights cannot be resized");
  }
  return make_explicit(weights);
}

double DistributionSpec::exponent() const {
  return kind == DistributionKind::power_law ? k : std::numeric_limits<double>::quiet_NaN();
}

std::string_view to_string(SweepMode mode) {
  return mode == SweepMode::exact ? "exact" : "monte_carlo";
}

SweepMode sweep_mode_from_string(std::string_view text) {
  if (text == "exact") return SweepMode::exact;
  if (text == "monte_carlo" || text == "mc") return SweepMode::monte_carlo;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "'");
}

std::vector<std::uint64_t> default_n_grid() {
  std::vector<std::uint64_t> grid;
  for (int e = 8; e <= 24; ++e) {
    grid.push_back(std::uint64_t{1} << e);
  }
  return grid;
}

void RunConfig::validate() const {
  if (dist.kind == DistributionKind::power_law) {
    if (!std::isfinite(dist.k) || dist.k >= 0.0) {
      throw std::invalid_argument("power-law k must be negative");
    }
  } else {
    if (dist.weights.empty()) throw std::invalid_argument("weights must be non-empty");
    double total = 0.0;
    for (double w : dist.weights) {
      if (!std::isfinite(w) || w < 0.0) throw std::invalid_argument("weights must be >= 0");
      total += w;
    }
    if (!(total > 0.0)) throw std::invalid_argument("weights are all zero");
  }
  check_ratio(model, k_algorithm);
  if (mode == SweepMode::monte_carlo && trials == 0) {
    throw std::invalid_argument("trials must be >= 1 in monte_carlo mode");
  }
  if (n_grid.empty()) throw std::invalid_argument("n_grid must be non-empty");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] == 0) throw std::invalid_argument("n_grid entries must be positive");
    if (i > 0 && n_grid[i] <= n_grid[i - 1]) {
      throw std::invalid_argument("n_grid must be strictly increasing");
    }
  }
}

RunConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("config must be a JSON object");
  }

  RunConfig cfg;
  const auto kind = required<std::string>(doc, "kind");
  if (kind == "powerlaw") {
    cfg.dist.kind = DistributionKind::power_law;
    if (doc.contains("n")) {
      cfg.dist.n = static_cast<std::size_t>(unsigned_field(doc, "n"));
      if (cfg.dist.n == 0) throw std::invalid_argument("n must be positive");
    } else if (!doc.contains("n_grid")) {
      throw ConfigError("missing field 'n'");
    }
    cfg.dist.k = required<double>(doc, "k");
  } else if (kind == "explicit") {
    cfg.dist.kind = DistributionKind::explicit_weights;
    cfg.dist.weights = required<std::vector<double>>(doc, "weights");
    cfg.dist.n = cfg.dist.weights.size();
  } else {
    throw ConfigError("unknown distribution kind '" + kind + "'");
  }

  const auto model = required<std::string>(doc, "model");
  try {
    cfg.model = algorithm_from_string(model);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  cfg.k_algorithm = optional_field<double>(doc, "k_algorithm", default_ratio(cfg.model));
  const auto mode = optional_field<std::string>(doc, "mode", "exact");
  try {
    cfg.mode = sweep_mode_from_string(mode);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (doc.contains("trials")) cfg.trials = unsigned_field(doc, "trials");
  if (doc.contains("seed")) cfg.seed = unsigned_field(doc, "seed");
  if (doc.contains("n_grid")) {
    const json& grid = doc.at("n_grid");
    if (!grid.is_array()) throw ConfigError("field 'n_grid' must be an array");
    cfg.n_grid.clear();
    for (const json& v : grid) {
      if (!v.is_number_integer()) throw ConfigError("n_grid entries must be integers");
      if (!v.is_number_unsigned()) throw std::invalid_argument("n_grid entries must be positive");
      cfg.n_grid.push_back(v.get<std::uint64_t>());
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace advice_search
