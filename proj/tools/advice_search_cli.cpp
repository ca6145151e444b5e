// advice-search: run, sweep, fit and validate search-with-advice experiments.
//
// Exit codes: 0 success, 1 failed validation or internal error, 2 malformed
// config, 3 invalid parameter range, 4 unwritable output.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "advice_search/config.hpp"
#include "advice_search/sweep.hpp"
#include "advice_search/validate.hpp"

namespace {

using namespace advice_search;

constexpr int kExitFailure = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitRange = 3;
constexpr int kExitOutput = 4;

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalFlags {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<std::string> mode;
  std::string out;
  std::size_t cap = kDefaultStatevectorCap;
  bool timing = false;
};

void apply_overrides(RunConfig& cfg, const GlobalFlags& flags) {
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.trials) cfg.trials = *flags.trials;
  if (flags.mode) cfg.mode = sweep_mode_from_string(*flags.mode);
}

// Writes to --out when given, otherwise stdout.
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw OutputError("cannot open output file '" + path + "'");
  }
  fn(out);
  out.flush();
  if (!out) {
    throw OutputError("failed writing output file '" + path + "'");
  }
}

int cmd_run(const std::string& config_path, const GlobalFlags& flags) {
  RunConfig cfg = load_config(config_path);
  apply_overrides(cfg, flags);
  const SweepRow row = run_single(cfg, {flags.timing});
  with_output(flags.out, [&](std::ostream& out) { out << row_to_json(row) << '\n'; });
  return 0;
}

int cmd_sweep(const std::string& config_path, const GlobalFlags& flags) {
  RunConfig cfg = load_config(config_path);
  apply_overrides(cfg, flags);
  cfg.validate();
  // Fail on an unwritable path before spending time on the sweep.
  if (!flags.out.empty() && flags.out != "-") {
    std::ofstream probe(flags.out, std::ios::app);
    if (!probe) {
      throw OutputError("cannot open output file '" + flags.out + "'");
    }
  }
  const std::vector<SweepRow> rows = run_sweep(cfg, {flags.timing});
  with_output(flags.out, [&](std::ostream& out) { write_csv(out, rows); });
  return 0;
}

int cmd_fit(const std::string& csv_path, const GlobalFlags& flags, bool keep_all) {
  std::ifstream in(csv_path);
  if (!in) {
    throw ConfigError("cannot read sweep file '" + csv_path + "'");
  }
  std::vector<SweepRow> rows;
  try {
    rows = read_csv(in);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("malformed sweep file: ") + e.what());
  }

  // Group by (model, mode, k_dist), preserving first-appearance order.
  std::vector<std::vector<SweepRow>> groups;
  std::map<std::string, std::size_t> index;
  for (auto& row : rows) {
    char key[128];
    std::snprintf(key, sizeof key, "%s|%s|%.17g", row.model.c_str(), row.mode.c_str(),
                  row.k_dist);
    auto [it, inserted] = index.emplace(key, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(std::move(row));
  }

  with_output(flags.out, [&](std::ostream& out) {
    out << "model,mode,k_dist,points,alpha,r_squared\n";
    for (const auto& g : groups) {
      const SlopeFit fit = keep_all ? fit_slope(g) : fit_exponent(g);
      char line[256];
      std::snprintf(line, sizeof line, "%s,%s,%.17g,%zu,%.17g,%.17g\n", g.front().model.c_str(),
                    g.front().mode.c_str(), g.front().k_dist, fit.points, fit.alpha,
                    fit.r_squared);
      out << line;
    }
  });
  return 0;
}

int cmd_validate(const GlobalFlags& flags) {
  ValidationOptions options;
  options.statevector_cap = flags.cap;
  if (flags.seed) options.seed = *flags.seed;
  if (flags.trials) options.trials = *flags.trials;
  const auto results = run_validation(options);
  print_report(std::cout, results);
  const bool ok = all_passed(results);
  for (const auto& r : results) {
    if (r.status == CheckStatus::fail) {
      std::cerr << "validation failed: " << r.name << '\n';
    } else if (r.status == CheckStatus::skip) {
      std::cerr << "warning: skipped " << r.name << '\n';
    }
  }
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum search with advice: expected query counts, bounds and scaling sweeps"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "Monte Carlo seed (overrides the config)");
  app.add_option("--trials", flags.trials, "Monte Carlo trials (overrides the config)");
  app.add_option("--mode", flags.mode, "exact or monte_carlo (overrides the config)");
  app.add_option("--out", flags.out, "Output file (default stdout)");
  app.add_option("--cap", flags.cap, "Statevector dimension cap for validation");
  app.add_flag("--timing", flags.timing, "Record wall time in the seconds column");

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run one experiment and print a JSON record");
  run->add_option("config", config_path, "Config file")->required();

  auto* sweep = app.add_subcommand("sweep", "Sweep n over the config's n_grid, write CSV");
  sweep->add_option("config", config_path, "Config file")->required();

  std::string csv_path;
  bool keep_all = false;
  auto* fit = app.add_subcommand("fit", "Fit log-log slopes to a sweep CSV");
  fit->add_option("csv", csv_path, "Sweep CSV")->required();
  fit->add_flag("--all-points", keep_all, "Do not drop the two smallest n");

  auto* validate = app.add_subcommand("validate", "Run the cross-module invariant checks");

  // Global flags are accepted after the subcommand too.
  for (auto* sub : {run, sweep, fit, validate}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (*run) return cmd_run(config_path, flags);
    if (*sweep) return cmd_sweep(config_path, flags);
    if (*fit) return cmd_fit(csv_path, flags, keep_all);
    return cmd_validate(flags);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const OutputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOutput;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRange;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
