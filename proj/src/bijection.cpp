#include "mekr/bijection.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "mekr/bigint.hpp"

namespace mekr {
namespace {

// Colex rank of a sorted subset (1-based elements): sum of C(e_i - 1, i).
std::uint64_t colex_rank(const std::vector<int>& elems) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < elems.size(); ++i)
    r += binomial_u64(elems[i] - 1, static_cast<long long>(i) + 1);
  return r;
}

// Inverse of colex_rank for subsets of size j.
std::vector<int> colex_unrank(int j, std::uint64_t r) {
  std::vector<int> out(j);
  for (int i = j; i >= 1; --i) {
    long long c = i - 1;
    while (binomial_u64(c + 1, i) <= r) ++c;
    out[i - 1] = static_cast<int>(c) + 1;
    r -= binomial_u64(c, i);
  }
  return out;
}

// Number of weak compositions of w into q ordered parts.
std::uint64_t count_comp(int w, int q) {
  if (q == 0) return w == 0 ? 1 : 0;
  return binomial_u64(w + q - 1, q - 1);
}

// Lex rank of a weak composition (first part most significant).
std::uint64_t composition_rank(const std::vector<int>& x) {
  const int a = static_cast<int>(x.size());
  int rem = 0;
  for (int v : x) rem += v;
  std::uint64_t r = 0;
  for (int p = 0; p + 1 < a; ++p) {
    for (int v = 0; v < x[p]; ++v) r += count_comp(rem - v, a - p - 1);
    rem -= x[p];
  }
  return r;
}

std::vector<int> composition_unrank(int w, int a, std::uint64_t r) {
  std::vector<int> x(a, 0);
  for (int p = 0; p < a; ++p) {
    if (p + 1 == a) {
      x[p] = w;
      break;
    }
    for (int v = 0; v <= w; ++v) {
      const std::uint64_t c = count_comp(w - v, a - p - 1);
      if (r < c) {
        x[p] = v;
        w -= v;
        break;
      }
      r -= c;
    }
  }
  return x;
}

void validate_subset(int n, int k, const std::vector<int>& subset) {
  if (static_cast<int>(subset.size()) != k)
    throw std::invalid_argument("subset size mismatch");
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 1 || subset[i] > n)
      throw std::invalid_argument("subset element out of range");
    if (i > 0 && subset[i] <= subset[i - 1])
      throw std::invalid_argument("subset must be strictly increasing");
  }
}

}  // namespace

SetUniverse::SetUniverse(int n, int k) : n_(n), k_(k) {
  if (n < 1) throw std::invalid_argument("SetUniverse: n must be >= 1");
  if (k < 0 || k > n) throw std::invalid_argument("SetUniverse: need 0 <= k <= n");
  size_ = to_u64(binomial(n, k), "SetUniverse size");
}

std::uint64_t SetUniverse::rank(const std::vector<int>& subset) const {
  validate_subset(n_, k_, subset);
  return colex_rank(subset);
}

std::vector<int> SetUniverse::unrank(std::uint64_t r) const {
  if (r >= size_) throw std::out_of_range("SetUniverse::unrank: rank out of range");
  return colex_unrank(k_, r);
}

SetFamily::SetFamily(SetUniverse u) : u_(u), members_(u_.size()) {}

SetFamily::SetFamily(SetUniverse u, Bitmask members)
    : u_(u), members_(std::move(members)) {
  if (members_.width() != u_.size())
    throw std::invalid_argument("SetFamily: mask width must equal universe size");
}

Multiset subset_to_multiset(int m, int k, const std::vector<int>& subset) {
  if (m < 1 || k < 1) throw std::invalid_argument("subset_to_multiset: need m >= 1, k >= 1");
  const int n = m + k - 1;
  validate_subset(n, k, subset);

  std::vector<int> support, tail;
  for (int b : subset) {
    if (b <= m) support.push_back(b);
    else tail.push_back(b - m);  // a subset of [k-1]
  }
  // |tail| <= k-1 forces the support part to be nonempty.
  const int a = static_cast<int>(support.size());
  const std::uint64_t r = colex_rank(tail);
  const std::vector<int> extra = composition_unrank(k - a, a, r);

  std::vector<int> mult(m, 0);
  for (int i = 0; i < a; ++i) mult[support[i] - 1] = 1 + extra[i];
  return Multiset(std::move(mult));
}

std::vector<int> multiset_to_subset(const Multiset& f) {
  const int m = f.ground_size();
  const int k = f.cardinality();
  if (k < 1) throw std::invalid_argument("multiset_to_subset: cardinality must be >= 1");

  const std::vector<int> support = f.support();
  const int a = static_cast<int>(support.size());
  std::vector<int> extra(a);
  for (int i = 0; i < a; ++i) extra[i] = f.multiplicity(support[i]) - 1;

  const std::uint64_t r = composition_rank(extra);
  const std::vector<int> tail = colex_unrank(k - a, r);

  std::vector<int> subset = support;
  for (int e : tail) subset.push_back(m + e);
  return subset;
}

BijectionTable::BijectionTable(int m, int k)
    : m_(m), k_(k), n_(m + k - 1), mu_(m, k), su_(n_, k) {
  if (k < 1) throw std::invalid_argument("BijectionTable: cardinality must be >= 1");
  const std::uint64_t size = su_.size();
  fwd_.assign(size, 0);
  inv_.assign(size, 0);
  for (std::uint64_t s = 0; s < size; ++s) {
    const std::uint64_t t = mu_.rank(subset_to_multiset(m, k, su_.unrank(s)));
    fwd_[s] = t;
    inv_[t] = s;
  }
}

std::shared_ptr<const BijectionTable> BijectionTable::get(int m, int k) {
  static std::map<std::pair<int, int>, std::shared_ptr<const BijectionTable>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{m, k}];
  if (!slot) slot = std::shared_ptr<const BijectionTable>(new BijectionTable(m, k));
  return slot;
}

Family BijectionTable::map_family(const SetFamily& fam) const {
  if (!(fam.universe() == su_))
    throw std::invalid_argument("map_family: universe mismatch");
  Family out{mu_};
  fam.mask().for_each([&](std::uint64_t s) { out.insert_rank(fwd_[s]); });
  return out;
}

SetFamily BijectionTable::unmap_family(const Family& fam) const {
  if (!(fam.universe() == mu_))
    throw std::invalid_argument("unmap_family: universe mismatch");
  SetFamily out{su_};
  fam.mask().for_each([&](std::uint64_t t) { out.insert_rank(inv_[t]); });
  return out;
}

}  // namespace mekr
