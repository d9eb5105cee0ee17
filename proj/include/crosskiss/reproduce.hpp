#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace crosskiss {

struct CriterionItem {
  std::string label;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct CriterionResult {
  int number = 0;
  std::string name;
  std::vector<CriterionItem> items;
  bool pass = false;
  double seconds = 0;
  double budget_seconds = 0;
};

struct ReproductionReport {
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
};

struct ReproduceOptions {
  std::string cli_path;      // binary used for the output-determinism check
  std::uint64_t seed = 0;    // fixed seed for the randomized property suites
};

/// Runs the full verification battery (exact counts, equivalence, covering
/// radius, containment chain, bound inequalities, the code construction,
/// rate anchors, the enlargement identity, and the property suites) and
/// reports one result per criterion.
ReproductionReport run_reproduction(const ReproduceOptions& options);

/// Aligned text table, one row per checked quantity.
std::string reproduction_table(const ReproductionReport& report);

}  // namespace crosskiss
