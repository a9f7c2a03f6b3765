#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mekr/bigint.hpp"
#include "mekr/bitmask.hpp"
#include "mekr/bounds.hpp"
#include "mekr/budget.hpp"
#include "mekr/canonical.hpp"
#include "mekr/universe.hpp"

namespace mekr {

/// Pairwise compatibility for one universe at threshold t: partner_mask(r)
/// marks every member whose intersection with member r has size >= t.  The
/// relation is symmetric, and reflexive whenever t <= k.
class CompatibilityIndex {
 public:
  CompatibilityIndex(Universe u, int t);

  const Universe& universe() const { return u_; }
  int t() const { return t_; }
  std::uint64_t size() const { return u_.size(); }
  const Bitmask& partner_mask(std::uint64_t r) const { return masks_[r]; }

  /// Members compatible with everything in the given set; the full universe
  /// for an empty input.
  Bitmask partners(const Bitmask& members) const;
  /// partners(partners(x)): a closure operator (extensive, monotone,
  /// idempotent) whose fixed points are the candidate optimal families.
  Bitmask closure(const Bitmask& members) const;

 private:
  Universe u_;
  int t_;
  std::vector<Bitmask> masks_;
};

/// Free-standing forms of the two operators above.
Family common_partners(const Family& a, int t);
Family closure_family(const Family& a, int t);

struct EngineResult {
  std::uint64_t optimum = 0;
  /// Optimal pairs normalised as (closure(F), partners(F)), deduplicated
  /// and sorted; both masks are non-empty.
  std::vector<std::pair<Bitmask, Bitmask>> optimal_pairs;
  /// Raw optimal F sets as enumerated, kept only on request.
  std::vector<Bitmask> raw_witnesses;
  std::uint64_t nodes = 0;
};

/// Exhaustive DFS over families in rank order, pruned by partner-mask
/// emptiness and by |F| + remaining + |partners| against the incumbent.
EngineResult max_sum_bruteforce_engine(const CompatibilityIndex& idx, int threads = 0,
                                       bool collect_raw = false,
                                       const Budgets& budgets = Budgets::from_env());

/// Enumerates the Moore family of partner-mask intersections (every
/// closure image lies there) and maximises |X| + |partners(X)| over it.
EngineResult max_sum_closure_engine(const CompatibilityIndex& idx,
                                    const Budgets& budgets = Budgets::from_env());

/// Branch-and-bound maximum clique on the compatibility graph, collecting
/// every maximum clique: the maximum t-intersecting families.
EngineResult max_t_intersecting_engine(const CompatibilityIndex& idx,
                                       const Budgets& budgets = Budgets::from_env());

struct VerdictDetail {
  std::string status;               // "match" | "discrepancy" | "not_applicable"
  std::vector<std::string> notes;   // mismatch descriptions / applicability note
  std::string str() const;          // status, with notes folded in after ": "
};

/// Compare observed optimal classes and optimum against a prediction and a
/// closed-form bound.  Surfaces extras and misses without suppressing
/// either side; "not_applicable" only when neither the bound hypothesis
/// nor the classification applies.
VerdictDetail classify_and_verify(const BigInt& optimum,
                                  const std::vector<PairCanonicalForm>& observed,
                                  const PredictedOptima& predicted,
                                  const BoundValue& bound);

struct SearchOptions {
  std::string engine = "both";  // "brute" | "closure" | "both"
  int threads = 0;              // 0 = all hardware threads
  bool collect_raw = false;
  std::uint64_t seed = 0;       // echoed into the report
  Budgets budgets = Budgets::from_env();
};

struct SearchReport {
  int m = 0, k = 0, t = 0;
  std::string engine;
  std::uint64_t optimum = 0;
  BigInt bound;
  bool bound_applicable = false;
  std::string bound_hypothesis;
  std::vector<PairCanonicalForm> classes;
  VerdictDetail verdict;
  std::vector<std::vector<std::uint64_t>> raw_families;  // only with collect_raw
  double elapsed_ms = 0;
  std::uint64_t seed = 0;
};

/// Maximum of |F| + |G| over non-empty cross-t-intersecting pairs, with
/// isomorphism classification and verdict against predicted_optima and
/// cross_sum_bound.  engine "both" runs the two engines and cross-checks.
SearchReport max_sum_search(int m, int k, int t, const SearchOptions& opts = {});

/// Maximum size of a t-intersecting family (reported as optimum = |F|),
/// classified and checked against t_intersecting_bound; classes hold the
/// family on both sides.
SearchReport max_t_intersecting_search(int m, int k, int t, const SearchOptions& opts = {});

struct PipelineFailure {
  int sample = 0;
  std::uint64_t sample_seed = 0;
  std::string reason;
};

struct PipelineReport {
  int m = 0, k = 0, t = 0, samples = 0;
  std::uint64_t seed = 0;
  int passed = 0;
  std::vector<PipelineFailure> failures;
  double elapsed_ms = 0;
};

/// Run kernel_reduce on `samples` generated cross-t-intersecting pairs
/// (sample 0 is the extremal pair, the rest come from a seeded generator)
/// and check its postconditions: sizes preserved, cross-t preserved, final
/// kernel all-ones, supports of every cross pair sharing >= t elements,
/// and the recorded trace replaying to the same result.
PipelineReport verify_kernel_pipeline(int m, int k, int t, int samples,
                                      std::uint64_t seed = 0,
                                      const Budgets& budgets = Budgets::from_env());

}  // namespace mekr
