#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Invariant suite behind the `verify` subcommand: arithmetic laws, assessor
// and box-kite structure, table properties, and serialization round-trips,
// scoped to one dimension exponent and optionally one strut constant.
namespace boxkite {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // set on failure
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::size_t failures = 0;
  std::string text() const;
};

/// s = -1 runs every strut constant of the level.
VerifyReport run_verification(std::uint32_t n, int s = -1);

}  // namespace boxkite
