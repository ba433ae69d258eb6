#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dlat {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  std::optional<int> trials;  // overrides the suite's own trial count
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Standard lattice families used as the test corpus.
const std::vector<std::string>& corpus_families();

/// Acceptance suites in criterion order.
const std::vector<std::string>& suite_names();

/// Runs one suite. Unknown names raise PreconditionError; any other
/// exception inside the suite is reported as a failure.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace dlat
