#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "mekr/bounds.hpp"
#include "mekr/search.hpp"
#include "oracles.hpp"

using namespace mekr;

namespace {

Bitmask mask_of(std::uint64_t width, const std::vector<int>& indices) {
  Bitmask m(width);
  for (int i : indices) m.set(i);
  return m;
}

Budgets unlimited() {
  Budgets b;
  b.brute_universe = 1ull << 40;
  b.closure_sets = 1ull << 40;
  b.clique_universe = 1ull << 40;
  return b;
}

}  // namespace

TEST_CASE("compatibility masks agree with pairwise intersection sizes") {
  for (auto [m, k, t] : {std::tuple{3, 2, 1}, {4, 2, 2}, {2, 3, 2}, {4, 3, 3}}) {
    const CompatibilityIndex idx(Universe(m, k), t);
    const auto all = oracle::enumerate_multisets(m, k);
    for (std::uint64_t a = 0; a < idx.size(); ++a)
      for (std::uint64_t b = 0; b < idx.size(); ++b)
        CHECK(idx.partner_mask(a).test(b) == (oracle::meet_size(all[a], all[b]) >= t));
  }
}

TEST_CASE("partner sets at hand-checked points") {
  const CompatibilityIndex idx(Universe(3, 2), 1);
  // Partners of {[1,1]}: everything holding a 1.
  CHECK(idx.partners(mask_of(6, {0})) == mask_of(6, {0, 1, 2}));
  // Partners of {[1,2]}: everything except the disjoint [3,3].
  CHECK(idx.partners(mask_of(6, {1})) == mask_of(6, {0, 1, 2, 3, 4}));
  // Nothing intersects the full universe at once.
  CHECK(idx.partners(mask_of(6, {0, 1, 2, 3, 4, 5})).none());
  // Empty input: vacuously everything.
  CHECK(idx.partners(Bitmask(6)).count() == 6);
}

TEST_CASE("closure is extensive, monotone, idempotent") {
  const CompatibilityIndex idx(Universe(4, 2), 1);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> bits(0, (1ull << idx.size()) - 1);
  for (int trial = 0; trial < 200; ++trial) {
    Bitmask x(idx.size()), y(idx.size());
    std::uint64_t bx = bits(rng), by = bits(rng);
    for (std::uint64_t i = 0; i < idx.size(); ++i) {
      if (bx >> i & 1) x.set(i);
      if (by >> i & 1) y.set(i);
    }
    const Bitmask cx = idx.closure(x);
    CHECK(x.is_subset_of(cx));
    CHECK(idx.closure(cx) == cx);
    if (x.is_subset_of(y)) CHECK(idx.closure(x).is_subset_of(idx.closure(y)));
    // Antitone partner map: more members, fewer partners.
    Bitmask xy = x;
    xy |= y;
    CHECK(idx.partners(xy).is_subset_of(idx.partners(x)));
    // Three applications collapse to one.
    CHECK(idx.partners(idx.closure(x)) == idx.partners(x));
  }
}

TEST_CASE("closure at hand-checked points") {
  const CompatibilityIndex idx(Universe(3, 2), 1);
  CHECK(idx.closure(mask_of(6, {1})) == mask_of(6, {1}));
  // The star at 1 is closed.
  CHECK(idx.closure(mask_of(6, {0, 1, 2})) == mask_of(6, {0, 1, 2}));
  // Two stars' worth of members close to the whole universe's core.
  CHECK(idx.closure(mask_of(6, {0, 5})) == idx.partners(idx.partners(mask_of(6, {0, 5}))));
}

TEST_CASE("a pair is valid exactly when one side sits inside the other's partners") {
  const Universe u(3, 2);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::uint64_t> bits(0, 63);
  for (int t = 1; t <= 2; ++t) {
    const CompatibilityIndex idx(u, t);
    for (int trial = 0; trial < 300; ++trial) {
      Family a(u), b(u);
      std::uint64_t ba = bits(rng), bb = bits(rng);
      for (int i = 0; i < 6; ++i) {
        if (ba >> i & 1) a.insert_rank(i);
        if (bb >> i & 1) b.insert_rank(i);
      }
      CHECK(is_cross_t_intersecting(a, b, t) ==
            b.mask().is_subset_of(idx.partners(a.mask())));
    }
  }
}

TEST_CASE("free-standing partner and closure helpers match the index") {
  const Universe u(4, 3);
  const CompatibilityIndex idx(u, 2);
  Family a(u);
  a.insert(Multiset::from_elements(4, {1, 1, 2}));
  CHECK(common_partners(a, 2).mask() == idx.partners(a.mask()));
  CHECK(closure_family(a, 2).mask() == idx.closure(a.mask()));
}

TEST_CASE("both engines reproduce the subset-sweep optimum and pair list") {
  for (int m = 1; m <= 6; ++m)
    for (int k = 1; k <= 6; ++k) {
      const Universe u(m, k);
      if (u.size() > 12) continue;
      for (int t = 1; t <= k; ++t) {
        CAPTURE(m);
        CAPTURE(k);
        CAPTURE(t);
        const oracle::NaiveOptimum naive = oracle::naive_max_sum(m, k, t);
        const CompatibilityIndex idx(u, t);
        const EngineResult brute = max_sum_bruteforce_engine(idx, 2, false, unlimited());
        const EngineResult closure = max_sum_closure_engine(idx, unlimited());

        CHECK(brute.optimum == naive.optimum);
        CHECK(closure.optimum == naive.optimum);

        std::vector<std::pair<Bitmask, Bitmask>> expect;
        for (const auto& [x, p] : naive.pairs)
          expect.emplace_back(mask_of(u.size(), x), mask_of(u.size(), p));
        std::sort(expect.begin(), expect.end());
        CHECK(brute.optimal_pairs == expect);
        CHECK(closure.optimal_pairs == expect);
      }
    }
}

TEST_CASE("single-thread and multi-thread sweeps agree") {
  const CompatibilityIndex idx(Universe(4, 2), 1);
  const EngineResult one = max_sum_bruteforce_engine(idx, 1);
  const EngineResult many = max_sum_bruteforce_engine(idx, 8);
  CHECK(one.optimum == many.optimum);
  CHECK(one.optimal_pairs == many.optimal_pairs);
}

TEST_CASE("clique engine finds every maximum intersecting family") {
  for (auto [m, k] : {std::pair{3, 2}, {4, 2}, {2, 3}, {4, 3}, {2, 4}}) {
    const Universe u(m, k);
    if (u.size() > 14) continue;
    for (int t = 1; t <= k; ++t) {
      CAPTURE(m);
      CAPTURE(k);
      CAPTURE(t);
      const oracle::NaiveCliques naive = oracle::naive_max_t_intersecting(m, k, t);
      const EngineResult res = max_t_intersecting_engine(CompatibilityIndex(u, t));
      CHECK(res.optimum == naive.optimum);
      std::vector<std::pair<Bitmask, Bitmask>> expect;
      for (const auto& fam : naive.families) {
        Bitmask mm = mask_of(u.size(), fam);
        expect.emplace_back(mm, mm);
      }
      std::sort(expect.begin(), expect.end());
      CHECK(res.optimal_pairs == expect);
    }
  }
}

TEST_CASE("engines refuse work beyond their budgets") {
  Budgets tiny;
  tiny.brute_universe = 5;
  tiny.closure_sets = 2;
  tiny.clique_universe = 5;
  const CompatibilityIndex idx(Universe(3, 2), 1);  // universe size 6
  CHECK_THROWS_AS(max_sum_bruteforce_engine(idx, 1, false, tiny), BudgetError);
  CHECK_THROWS_AS(max_sum_closure_engine(idx, tiny), BudgetError);
  CHECK_THROWS_AS(max_t_intersecting_engine(idx, tiny), BudgetError);
}

TEST_CASE("pair search report at the smallest interesting point") {
  SearchOptions opts;
  opts.seed = 42;
  const SearchReport rep = max_sum_search(3, 2, 1, opts);
  CHECK(rep.optimum == 6);
  CHECK(rep.bound == 6);
  CHECK(rep.bound_applicable);
  CHECK(rep.classes.size() == 4);
  CHECK(rep.engine == "both");
  CHECK(rep.seed == 42);
  // Three predicted shapes plus one more the sweep actually finds.
  CHECK(rep.verdict.status == "discrepancy");
  REQUIRE(rep.verdict.notes.size() == 1);
  CHECK(rep.verdict.notes[0].find("extra optimal class") != std::string::npos);
  CHECK(rep.verdict.notes[0].find("G={[1,2],[1,3]}") != std::string::npos);
}

TEST_CASE("pair search matches predictions where the classification is complete") {
  const SearchReport r42 = max_sum_search(4, 2, 1);
  CHECK(r42.optimum == 8);
  CHECK(r42.classes.size() == 2);
  CHECK(r42.verdict.status == "match");
  CHECK(r42.verdict.str() == "match");

  const SearchReport r521 = max_sum_search(5, 2, 1);
  CHECK(r521.optimum == 10);
  CHECK(r521.classes.size() == 2);
  CHECK(r521.verdict.status == "match");

  const SearchReport r432 = max_sum_search(4, 3, 2);
  CHECK(r432.optimum == 11);
  REQUIRE(r432.classes.size() == 1);
  CHECK(r432.verdict.status == "match");
  const auto [hf, hg] = hilton_milner_pair(4, 3, 2);
  CHECK(r432.classes[0] == canonicalize_pair(hf, hg));
}

TEST_CASE("closure engine alone handles a universe the sweep refuses") {
  SearchOptions opts;
  opts.engine = "closure";
  const SearchReport rep = max_sum_search(5, 3, 2, opts);
  CHECK(rep.optimum == 14);
  CHECK(rep.bound == 14);
  CHECK(rep.classes.size() == 1);
  CHECK(rep.verdict.status == "match");

  SearchOptions brute;
  brute.engine = "brute";
  CHECK_THROWS_AS(max_sum_search(5, 3, 2, brute), BudgetError);
}

TEST_CASE("raw witnesses are reported only on request") {
  SearchOptions opts;
  opts.engine = "brute";
  CHECK(max_sum_search(3, 2, 1, opts).raw_families.empty());
  opts.collect_raw = true;
  const SearchReport rep = max_sum_search(3, 2, 1, opts);
  CHECK(!rep.raw_families.empty());
  for (const auto& fam : rep.raw_families) CHECK(!fam.empty());
}

TEST_CASE("intersecting-family search report") {
  const SearchReport r = max_t_intersecting_search(4, 2, 1);
  CHECK(r.optimum == 4);
  CHECK(r.bound == 4);
  CHECK(r.engine == "clique");
  REQUIRE(r.classes.size() == 1);
  const Universe u(4, 2);
  CHECK(r.classes[0] == canonicalize_pair(star_family(u, 1), star_family(u, 1)));
  CHECK(r.verdict.status == "match");

  CHECK(max_t_intersecting_search(3, 2, 1).optimum == 3);
  const SearchReport r432 = max_t_intersecting_search(4, 3, 2);
  CHECK(r432.optimum == 4);
  CHECK(r432.bound == 4);
}

TEST_CASE("search argument validation") {
  CHECK_THROWS_AS(max_sum_search(0, 2, 1), std::domain_error);
  CHECK_THROWS_AS(max_sum_search(3, 2, 0), std::domain_error);
  CHECK_THROWS_AS(max_sum_search(3, 2, 3), std::domain_error);
  SearchOptions opts;
  opts.engine = "quantum";
  CHECK_THROWS_AS(max_sum_search(3, 2, 1, opts), std::invalid_argument);
}

TEST_CASE("kernel pipeline passes on classified parameter points") {
  const PipelineReport rep = verify_kernel_pipeline(4, 3, 2, 25, 7);
  CHECK(rep.passed == 25);
  CHECK(rep.failures.empty());
  CHECK(rep.samples == 25);
  CHECK(rep.seed == 7);

  const PipelineReport rep2 = verify_kernel_pipeline(5, 2, 1, 10);
  CHECK(rep2.passed == 10);
}

TEST_CASE("kernel pipeline is deterministic in its seed") {
  const PipelineReport a = verify_kernel_pipeline(4, 3, 2, 5, 123);
  const PipelineReport b = verify_kernel_pipeline(4, 3, 2, 5, 123);
  CHECK(a.passed == b.passed);
  CHECK(a.failures.size() == b.failures.size());
}

TEST_CASE("kernel pipeline validates parameters and budget") {
  CHECK_THROWS_AS(verify_kernel_pipeline(3, 3, 2, 5), std::domain_error);   // m < 2k-t
  CHECK_THROWS_AS(verify_kernel_pipeline(4, 3, 2, 0), std::invalid_argument);
  Budgets tiny;
  tiny.clique_universe = 5;
  CHECK_THROWS_AS(verify_kernel_pipeline(4, 3, 2, 5, 0, tiny), BudgetError);
}

TEST_CASE("verdict strings fold notes after the status") {
  VerdictDetail v;
  v.status = "discrepancy";
  v.notes = {"alpha", "beta"};
  CHECK(v.str() == "discrepancy: alpha; beta");
  v.notes.clear();
  CHECK(v.str() == "discrepancy");
}
