#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mekr/bijection.hpp"
#include "mekr/bigint.hpp"
#include "oracles.hpp"

using namespace mekr;

TEST_CASE("set universe ranks subsets in colexicographic order") {
  const SetUniverse su(4, 2);
  CHECK(su.size() == 6);
  const std::vector<std::vector<int>> expect = {{1, 2}, {1, 3}, {2, 3},
                                                {1, 4}, {2, 4}, {3, 4}};
  for (std::uint64_t r = 0; r < su.size(); ++r) {
    CHECK(su.unrank(r) == expect[r]);
    CHECK(su.rank(expect[r]) == r);
  }
}

TEST_CASE("set universe round-trips across a parameter grid") {
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      const SetUniverse su(n, k);
      for (std::uint64_t r = 0; r < su.size(); ++r) {
        const auto s = su.unrank(r);
        CHECK(static_cast<int>(s.size()) == k);
        CHECK(std::is_sorted(s.begin(), s.end()));
        CHECK(su.rank(s) == r);
      }
    }
}

TEST_CASE("set universe validates subsets") {
  const SetUniverse su(4, 2);
  CHECK_THROWS_AS(su.rank({1}), std::invalid_argument);
  CHECK_THROWS_AS(su.rank({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(su.rank({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(su.rank({1, 5}), std::invalid_argument);
  CHECK_THROWS_AS(su.unrank(6), std::out_of_range);
}

TEST_CASE("hand-checked subset-to-multiset mappings") {
  CHECK(subset_to_multiset(3, 3, {1, 2, 4}) == Multiset::from_elements(3, {1, 2, 2}));
  CHECK(subset_to_multiset(3, 2, {1, 4}) == Multiset::from_elements(3, {1, 1}));
  CHECK(subset_to_multiset(3, 2, {3, 4}) == Multiset::from_elements(3, {3, 3}));
  CHECK(subset_to_multiset(1, 3, {1, 2, 3}) == Multiset::from_elements(1, {1, 1, 1}));
  CHECK(multiset_to_subset(Multiset::from_elements(3, {1, 2, 2})) ==
        std::vector<int>{1, 2, 4});
  CHECK(multiset_to_subset(Multiset::from_elements(3, {1, 1})) == std::vector<int>{1, 4});
}

TEST_CASE("subsets of the low ground segment map to themselves") {
  // A subset of [m] has no tail, so it becomes the plain multiset of itself.
  CHECK(subset_to_multiset(5, 3, {1, 3, 4}) == Multiset::from_elements(5, {1, 3, 4}));
  CHECK(multiset_to_subset(Multiset::from_elements(5, {1, 3, 4})) ==
        std::vector<int>{1, 3, 4});
}

TEST_CASE("bijection is a support-preserving involutive pairing on a grid") {
  for (int m = 1; m <= 10; ++m)
    for (int k = 1; k <= 10; ++k) {
      if (multichoose(m, k) > 400) continue;
      const SetUniverse su(m + k - 1, k);
      const Universe mu(m, k);
      std::vector<bool> hit(mu.size(), false);
      for (std::uint64_t r = 0; r < su.size(); ++r) {
        const std::vector<int> subset = su.unrank(r);
        const Multiset f = subset_to_multiset(m, k, subset);
        CHECK(f.cardinality() == k);
        CHECK(multiset_to_subset(f) == subset);

        // Support = the subset's low part; in particular it is never empty.
        std::vector<int> low;
        for (int e : subset)
          if (e <= m) low.push_back(e);
        CHECK(f.support() == low);
        CHECK(!f.support().empty());

        const std::uint64_t fr = mu.rank(f);
        CHECK(!hit[fr]);  // injective, hence bijective by counting
        hit[fr] = true;
      }
      CHECK(su.size() == mu.size());
    }
}

TEST_CASE("intersecting multiset images come from intersecting subsets") {
  for (auto [m, k] : {std::pair{3, 2}, {4, 2}, {2, 3}, {3, 3}}) {
    const SetUniverse su(m + k - 1, k);
    for (std::uint64_t ra = 0; ra < su.size(); ++ra)
      for (std::uint64_t rb = 0; rb < su.size(); ++rb) {
        const auto sa = su.unrank(ra), sb = su.unrank(rb);
        const Multiset fa = subset_to_multiset(m, k, sa);
        const Multiset fb = subset_to_multiset(m, k, sb);
        if (intersection_size(fa, fb) >= 1) {
          // Shared support elements lie in both subsets.
          std::vector<int> common;
          std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                std::back_inserter(common));
          CHECK(!common.empty());
        }
      }
  }
}

TEST_CASE("bijection tables are memoised and internally consistent") {
  const auto t1 = BijectionTable::get(4, 3);
  const auto t2 = BijectionTable::get(4, 3);
  CHECK(t1.get() == t2.get());
  CHECK(t1->n() == 6);
  for (std::uint64_t r = 0; r < t1->set_universe().size(); ++r)
    CHECK(t1->inverse(t1->forward(r)) == r);
}

TEST_CASE("family mapping preserves size and membership") {
  const auto table = BijectionTable::get(3, 2);
  SetFamily sf(table->set_universe());
  sf.insert({1, 4});
  sf.insert({1, 2});
  const Family mf = table->map_family(sf);
  CHECK(mf.size() == 2);
  CHECK(mf.contains(Multiset::from_elements(3, {1, 1})));
  CHECK(mf.contains(Multiset::from_elements(3, {1, 2})));
  CHECK(table->unmap_family(mf) == sf);
}

TEST_CASE("zero-cardinality multisets have no subset image") {
  CHECK_THROWS_AS(subset_to_multiset(3, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(multiset_to_subset(Multiset::empty(3)), std::invalid_argument);
}
