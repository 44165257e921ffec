#pragma once

// Invariant suites run by `adsbh verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace adsbh {

enum class Suite { Algebra, Orbits, Causal, Btz, Ads2, All };

Suite parse_suite(const std::string& name);  // throws DomainError
const char* to_string(Suite s);

struct CheckResult {
  std::string name;
  bool passed = true;
  long cases = 0;
  std::string counterexample;  // first failing case
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  int passed() const;
  int failed() const;
};

std::vector<SuiteReport> run_verification(Suite suite, std::uint64_t seed = 1);

}  // namespace adsbh
