#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinhurwitz/monodromy.hpp"

namespace spinhurwitz {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // failure diagnostics; empty when passed
};

// Self-audit suites behind the CLI `check` command.  Every equality they
// test is exact; a failure carries the offending case in `detail`.
std::vector<CheckResult> run_spin_checks();
std::vector<CheckResult> run_oracle_checks(std::uint64_t budget = kDefaultMonodromyBudget);
std::vector<CheckResult> run_identity_checks();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace spinhurwitz
