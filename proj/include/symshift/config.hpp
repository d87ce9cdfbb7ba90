#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace symshift {

// Raised when an enumeration would exceed the configured budget.  CLI maps
// this to exit code 3 and prints whatever partial report is available.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when two supposedly-equivalent computation routes disagree, or a
// theorem-backed assertion fails on concrete data.  CLI maps this to exit 2.
struct VerificationFailure : std::runtime_error {
  explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

struct Config {
  long long enumeration_budget = 1'000'000;  // partitions emitted per dominated-set walk
  long long fiber_budget = 200'000;          // T-monomials per fiber degree
  int sn_cap = 8;                            // largest n for S_n orbit expansion
  int lp_cap = 64;                           // n + #generators bound for LP instances
};

inline Config& config() {
  static Config cfg = [] {
    Config c;
    if (const char* env = std::getenv("SYMSHIFT_BUDGET")) {
      char* end = nullptr;
      long long v = std::strtoll(env, &end, 10);
      if (end && *end == '\0' && v > 0) {
        c.enumeration_budget = v;
        c.fiber_budget = v;
      }
    }
    return c;
  }();
  return cfg;
}

}  // namespace symshift
