#pragma once

#include <map>
#include <string>
#include <vector>

#include "gzero/sampling.hpp"

namespace gzero::suites {

struct SuiteConfig {
  std::string seed = kDefaultSeed;
  Point window = 32;
  int samples = 200;
};

struct Failure {
  std::string inputs;
  std::string expected;
  std::string got;
};

struct SuiteReport {
  std::string suite;
  std::string seed;
  Point window = 32;
  int samples = 200;
  long cases = 0;
  long passes = 0;
  long failureCount = 0;
  std::vector<Failure> failures;  // the first kMaxListed
  long oracleChecks = 0;
  long oracleDisagreements = 0;
  long oracleSkipped = 0;  // answers outside the oracles' reach
  std::map<std::string, std::string> metrics;
  long elapsedMs = 0;

  static constexpr std::size_t kMaxListed = 25;

  bool passed() const { return failureCount == 0; }
};

const std::vector<std::string>& suiteNames();
std::string suiteSummary(const std::string& name);

/// Deterministic for a fixed configuration. Throws Error for an unknown name.
SuiteReport runSuite(const std::string& name, const SuiteConfig& config = {});

}  // namespace gzero::suites
