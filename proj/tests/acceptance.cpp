// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Bounds are the ones fixed in the criteria themselves.

#include "c2charge/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main() {
  long long jobs = 1;
  if (const char* env = std::getenv("C2C_JOBS")) jobs = std::max(1L, std::atol(env));
  std::vector<c2c::CheckResult> checks = c2c::run_acceptance(6, jobs);
  bool all = true;
  for (const c2c::CheckResult& c : checks) {
    std::printf("%s criterion %s%s%s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.empty() ? "" : "  -- ", c.detail.c_str());
    all = all && c.passed;
  }
  return all ? 0 : 1;
}
