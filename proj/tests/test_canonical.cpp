#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "mekr/bounds.hpp"
#include "mekr/canonical.hpp"
#include "oracles.hpp"

using namespace mekr;

namespace {

Family from_ranks(const Universe& u, const std::vector<std::uint64_t>& rs) {
  Family f(u);
  for (std::uint64_t r : rs) f.insert_rank(r);
  return f;
}

// Relabel a family through a permutation of [m] (index p[e-1] is the image).
Family relabeled(const Family& fam, const std::vector<int>& p) {
  const int m = fam.universe().ground_size();
  Family out(fam.universe());
  for (const Multiset& f : fam.members()) {
    std::vector<int> mult(m, 0);
    for (int e = 1; e <= m; ++e) mult[p[e - 1] - 1] = f.multiplicity(e);
    out.insert(Multiset(mult));
  }
  return out;
}

}  // namespace

TEST_CASE("pair canonical form matches a full permutation sweep") {
  std::mt19937_64 rng(7);
  for (auto [m, k] : {std::pair{3, 2}, {4, 2}, {3, 3}, {4, 3}}) {
    const Universe u(m, k);
    std::uniform_int_distribution<std::uint64_t> pick(0, u.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      Family a(u), b(u);
      const int na = 1 + static_cast<int>(pick(rng) % 3);
      const int nb = 1 + static_cast<int>(pick(rng) % 3);
      for (int i = 0; i < na; ++i) a.insert_rank(pick(rng));
      for (int i = 0; i < nb; ++i) b.insert_rank(pick(rng));
      CHECK(canonicalize_pair(a, b) == oracle::permutation_canonical(a, b));
    }
  }
}

TEST_CASE("canonical form is invariant under relabelling and swapping") {
  const Universe u(4, 2);
  const Family a = from_ranks(u, {0, 1, 4});   // [1,1],[1,2],[2,2]
  const Family b = from_ranks(u, {1, 7});      // [1,2],[2,4]
  const PairCanonicalForm base = canonicalize_pair(a, b);

  CHECK(canonicalize_pair(b, a) == base);

  std::vector<int> perm = {1, 2, 3, 4};
  do {
    CHECK(canonicalize_pair(relabeled(a, perm), relabeled(b, perm)) == base);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("non-isomorphic pairs get distinct canonical forms") {
  const Universe u(3, 2);
  const Family star = star_family(u, 2);
  Family triangle(u);
  for (auto e : {std::vector<int>{1, 2}, {1, 3}, {2, 3}})
    triangle.insert(Multiset::from_elements(3, e));
  CHECK(canonicalize_pair(star, star) != canonicalize_pair(triangle, triangle));
  CHECK(canonicalize_family(star) != canonicalize_family(triangle));
  // Same sizes on both sides but different structure.
  CHECK(canonicalize_pair(star, triangle) != canonicalize_pair(star, star));
}

TEST_CASE("distinct stars collapse to one class") {
  const Universe u(4, 3);
  std::set<std::vector<std::uint64_t>> forms;
  for (int e = 1; e <= 4; ++e) forms.insert(canonicalize_family(star_family(u, e)));
  CHECK(forms.size() == 1);
}

TEST_CASE("realize_pair rebuilds a pair with the same canonical form") {
  const Universe u(4, 3);
  const auto [f, g] = hilton_milner_pair(4, 3, 2);
  const PairCanonicalForm form = canonicalize_pair(f, g);
  const auto [rf, rg] = realize_pair(form);
  CHECK(rf.universe() == u);
  CHECK(rf.size() + rg.size() == f.size() + g.size());
  CHECK(canonicalize_pair(rf, rg) == form);
}

TEST_CASE("canonicalization refuses an oversized injection search") {
  // A single member touching 11 elements forces 11! ~ 4e7 injections,
  // beyond the default allowance.
  const Universe u(11, 11);
  Family a(u);
  a.insert(Multiset::from_elements(11, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}));
  CHECK_THROWS_AS(canonicalize_pair(a, a), BudgetError);

  // The knob itself: an artificially tiny allowance rejects even m = 4.
  Budgets tight;
  tight.canonical_injections = 3;
  const Universe u4(4, 2);
  Family b(u4);
  b.insert(Multiset::from_elements(4, {1, 2}));
  b.insert(Multiset::from_elements(4, {3, 4}));
  CHECK_THROWS_AS(canonicalize_pair(b, b, tight), BudgetError);
  CHECK_NOTHROW(canonicalize_pair(b, b));
}
