#pragma once

#include "glocsur/integer.hpp"
#include "glocsur/parallel.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace glocsur {

struct SuiteResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::string first_failure;  // "instance k: ..." for the lowest failing k
  std::size_t failed() const { return instances - passed; }
  bool ok() const { return passed == instances; }
};

struct SelftestOptions {
  std::uint64_t seed = 42;
  std::size_t count = 0;  // instances per suite; 0 keeps each suite's default
  std::vector<std::string> only;
  Execution exec = Execution::parallel;
};

struct SelftestReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  bool ok() const;
};

struct SuiteInfo {
  std::string name;
  std::size_t default_count;
  std::string description;
};
const std::vector<SuiteInfo>& selftest_suites();

/// Runs the randomized property suites. Instance k of a suite draws from
/// instance_rng(seed ^ suite tag, k), so results do not depend on threading.
SelftestReport run_selftest(const SelftestOptions& opts);

}  // namespace glocsur
