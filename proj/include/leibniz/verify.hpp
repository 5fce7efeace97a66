#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace leibniz {

struct CheckResult {
  std::string group;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  std::size_t failures() const;
};

/// Seed of the sampler for the lambda4(1/4) extension check.
inline constexpr std::uint64_t kQuarterSeed = 20240613;
inline constexpr std::size_t kQuarterSamples = 20;

/// Runs every check of the built-in classification results. Groups run on up
/// to `threads` workers; the report order does not depend on scheduling.
SuiteReport run_verification_suite(unsigned threads = 1);

/// Worker count from LEIBNIZ_THREADS (default 1, clamped to [1, 64]).
unsigned threads_from_env();

}  // namespace leibniz
