#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mekr {

/// Thrown when an enumeration would exceed its configured resource budget.
/// Callers that want a graceful refusal (the CLI does) catch this and report.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration limits.  Defaults are desk-scale: exhaustive search stays
/// below a universe of `brute_universe` members, closed-set enumeration
/// below `closure_sets` sets, bijection table dumps below `table_rows` rows.
/// The MEKR_BUDGET environment variable, when set to a positive integer,
/// overrides all three with that single value.
struct Budgets {
  std::uint64_t brute_universe = 24;
  std::uint64_t closure_sets = 1000000;
  std::uint64_t clique_universe = 4096;
  std::uint64_t table_rows = 100000;
  std::uint64_t canonical_injections = 5000000;

  /// Defaults with any MEKR_BUDGET override applied.
  static Budgets from_env() {
    Budgets b;
    if (const char* env = std::getenv("MEKR_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0)
        b.brute_universe = b.closure_sets = b.clique_universe = b.table_rows =
            b.canonical_injections = v;
    }
    return b;
  }
};

}  // namespace mekr
