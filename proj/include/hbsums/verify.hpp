#pragma once

#include <string>
#include <vector>

namespace hbsums {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Names accepted by run_suite, in the order they are listed by the CLI.
const std::vector<std::string>& suite_names();

/// Runs a fixed battery of identity checks. Throws PreconditionError for an
/// unknown suite name.
std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace hbsums
