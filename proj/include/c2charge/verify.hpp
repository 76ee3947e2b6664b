#pragma once

// The acceptance property suite.  Each check pins the bound stated in its
// criterion; a smaller --bound only shrinks the range, never the check.

#include <string>
#include <vector>

namespace c2c {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

// Runs every criterion at min(bound, criterion bound); jobs > 1 fans the
// per-weight workloads over a small thread pool.
std::vector<CheckResult> run_acceptance(long long bound, long long jobs);

}  // namespace c2c
