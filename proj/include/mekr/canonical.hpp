#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mekr/budget.hpp"
#include "mekr/universe.hpp"

namespace mekr {

/// Canonical form of an unordered pair of families up to relabelling of the
/// ground set: the lexicographically least (sorted rank list, sorted rank
/// list) over all permutations of [m] and the optional swap of the two
/// sides.  Two pairs are equivalent exactly when their forms compare equal.
struct PairCanonicalForm {
  int m = 0, k = 0;
  std::vector<std::uint64_t> first;
  std::vector<std::uint64_t> second;

  auto operator<=>(const PairCanonicalForm&) const = default;
};

/// Only permutations moving the supports matter, so the search enumerates
/// injections from the union of supports into [m] instead of all of S_m.
/// Throws BudgetError if that injection count exceeds the budget.
PairCanonicalForm canonicalize_pair(const Family& a, const Family& b,
                                    const Budgets& budgets = Budgets::from_env());

/// Canonical form of a single family (pair with itself collapses to this).
std::vector<std::uint64_t> canonicalize_family(const Family& a,
                                               const Budgets& budgets = Budgets::from_env());

/// Rebuild concrete families from a canonical form.
std::pair<Family, Family> realize_pair(const PairCanonicalForm& form);

}  // namespace mekr
