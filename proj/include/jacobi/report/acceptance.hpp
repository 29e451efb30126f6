#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace jacobi::report {

struct AcceptanceConfig {
  std::uint64_t seed = 42;
  // Criterion ids to run; empty runs all of 1..8. Criterion 9 is a property
  // of the report as a whole and is checked by running it twice.
  std::vector<int> only;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  // Deterministic evidence; no timings.
  nlohmann::json data;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no limit
};

// Throws std::invalid_argument for ids outside 1..8.
CriterionResult run_criterion(int id, const AcceptanceConfig& config);
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config);

// {"seed", "criteria": [{"id", "name", "pass", "detail", "data"}]}
nlohmann::json report_json(const std::vector<CriterionResult>& results, const AcceptanceConfig& config);

// One "PASS|FAIL  [id] name: detail" line per criterion, timings optional.
std::string report_table(const std::vector<CriterionResult>& results, bool timings);

}  // namespace jacobi::report
