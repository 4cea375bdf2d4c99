#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cli/report.hpp"

namespace qdefect::cli {

struct SuiteConfig {
  std::uint64_t seed = 7;
  int per_shape = 4;
  BigInt subspace_budget = kDefaultSubspaceBudget;
  BigInt codeword_budget = kDefaultCodewordBudget;
};

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  json first_failure;  // null when every check passed
};

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace qdefect::cli
