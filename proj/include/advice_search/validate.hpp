#ifndef ADVICE_SEARCH_VALIDATE_HPP
#define ADVICE_SEARCH_VALIDATE_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "advice_search/bounds.hpp"
#include "advice_search/statevector.hpp"

namespace advice_search {

struct ValidationOptions {
  // Coefficient of the Las Vegas lower bound; overridable so a corrupted
  // constant can be shown to trip the sandwich checks.
  double lower_coefficient = kLasVegasCoefficient;
  std::size_t statevector_cap = kDefaultStatevectorCap;
  std::size_t statevector_max_n = 64;
  std::uint64_t trials = 20000;
  std::uint64_t seed = 1;
};

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

std::vector<CheckResult> run_validation(const ValidationOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

// "PASS name: detail" lines.
void print_report(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace advice_search

#endif  // ADVICE_SEARCH_VALIDATE_HPP
