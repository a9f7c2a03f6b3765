#include "mekr/canonical.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

namespace mekr {

PairCanonicalForm canonicalize_pair(const Family& a, const Family& b,
                                    const Budgets& budgets) {
  if (!(a.universe() == b.universe()))
    throw std::invalid_argument("canonicalize_pair: universe mismatch");
  const Universe& u = a.universe();
  const int m = u.ground_size();

  // Labels that actually occur in some member's support.  A permutation of
  // [m] only changes the rank lists through its action on these, so we
  // enumerate injections of this set into [m] rather than all of S_m.
  std::vector<char> in_union(m + 1, 0);
  for (const Family* fam : {&a, &b})
    for (const Multiset& f : fam->members())
      for (int e : f.support()) in_union[e] = 1;
  std::vector<int> labels;
  for (int e = 1; e <= m; ++e)
    if (in_union[e]) labels.push_back(e);
  const int s = static_cast<int>(labels.size());

  unsigned long long injections = 1;
  for (int i = 0; i < s; ++i) {
    injections *= static_cast<unsigned long long>(m - i);
    if (injections > budgets.canonical_injections)
      throw BudgetError("canonicalize_pair: injection count exceeds budget");
  }

  std::vector<std::vector<int>> am, bm;
  for (const Multiset& f : a.members()) am.push_back(f.multiplicities());
  for (const Multiset& f : b.members()) bm.push_back(f.multiplicities());

  using RankList = std::vector<std::uint64_t>;
  std::optional<std::pair<RankList, RankList>> best;

  std::vector<int> image(s, 0);  // image[j] = relabelled value of labels[j]
  std::vector<char> used(m + 1, 0);
  std::vector<int> mult(m);

  auto ranks_under_image = [&](const std::vector<std::vector<int>>& mems) {
    RankList rs;
    rs.reserve(mems.size());
    for (const auto& src : mems) {
      std::fill(mult.begin(), mult.end(), 0);
      for (int j = 0; j < s; ++j) mult[image[j] - 1] = src[labels[j] - 1];
      rs.push_back(u.rank(Multiset(mult)));
    }
    std::sort(rs.begin(), rs.end());
    return rs;
  };

  std::function<void(int)> rec = [&](int pos) {
    if (pos == s) {
      RankList ra = ranks_under_image(am), rb = ranks_under_image(bm);
      std::pair<RankList, RankList> cand{ra, rb};
      std::pair<RankList, RankList> swapped{std::move(rb), std::move(ra)};
      if (swapped < cand) cand = std::move(swapped);
      if (!best || cand < *best) best = std::move(cand);
      return;
    }
    for (int target = 1; target <= m; ++target) {
      if (used[target]) continue;
      used[target] = 1;
      image[pos] = target;
      rec(pos + 1);
      used[target] = 0;
    }
  };
  rec(0);

  PairCanonicalForm form;
  form.m = m;
  form.k = u.cardinality();
  form.first = std::move(best->first);
  form.second = std::move(best->second);
  return form;
}

std::vector<std::uint64_t> canonicalize_family(const Family& a, const Budgets& budgets) {
  return canonicalize_pair(a, a, budgets).first;
}

std::pair<Family, Family> realize_pair(const PairCanonicalForm& form) {
  Universe u(form.m, form.k);
  Family a(u), b(u);
  for (std::uint64_t r : form.first) a.insert_rank(r);
  for (std::uint64_t r : form.second) b.insert_rank(r);
  return {std::move(a), std::move(b)};
}

}  // namespace mekr
