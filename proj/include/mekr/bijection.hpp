#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mekr/bitmask.hpp"
#include "mekr/universe.hpp"

namespace mekr {

/// k-subsets of [n] in colexicographic order (rank of {b1<...<bk} is
/// sum of C(b_i - 1, i)).  Rank/unrank are mutually inverse.
class SetUniverse {
 public:
  SetUniverse(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::uint64_t size() const { return size_; }

  /// subset must be strictly increasing, elements in [1, n], length k.
  std::uint64_t rank(const std::vector<int>& subset) const;
  std::vector<int> unrank(std::uint64_t r) const;

  bool operator==(const SetUniverse& o) const { return n_ == o.n_ && k_ == o.k_; }

 private:
  int n_ = 0, k_ = 0;
  std::uint64_t size_ = 0;
};

/// Subset of a SetUniverse, stored as a membership bitmask over ranks.
class SetFamily {
 public:
  explicit SetFamily(SetUniverse u);
  SetFamily(SetUniverse u, Bitmask members);

  const SetUniverse& universe() const { return u_; }
  std::uint64_t size() const { return members_.count(); }
  bool empty() const { return members_.none(); }

  bool contains_rank(std::uint64_t r) const { return members_.test(r); }
  void insert_rank(std::uint64_t r) { members_.set(r); }
  void insert(const std::vector<int>& subset) { members_.set(u_.rank(subset)); }

  std::vector<std::uint64_t> ranks() const { return members_.to_indices(); }
  const Bitmask& mask() const { return members_; }

  bool operator==(const SetFamily& o) const {
    return u_ == o.u_ && members_ == o.members_;
  }

 private:
  SetUniverse u_;
  Bitmask members_;
};

/// Support-preserving bijection between k-subsets of [m+k-1] and k-multisets
/// over [m].  A subset B splits into A = B /\ [m] (the support, never empty)
/// and a tail above m; the tail, shifted down to a subset of [k-1] and read
/// through its colex rank, selects a weak composition of k - |A| over the
/// support positions, which supplies the extra multiplicities.
Multiset subset_to_multiset(int m, int k, const std::vector<int>& subset);
std::vector<int> multiset_to_subset(const Multiset& f);

/// Fully materialised rank <-> rank tables for one (m, k), memoised globally.
class BijectionTable {
 public:
  static std::shared_ptr<const BijectionTable> get(int m, int k);

  int m() const { return m_; }
  int k() const { return k_; }
  int n() const { return n_; }
  const Universe& multiset_universe() const { return mu_; }
  const SetUniverse& set_universe() const { return su_; }

  std::uint64_t forward(std::uint64_t subset_rank) const { return fwd_.at(subset_rank); }
  std::uint64_t inverse(std::uint64_t multiset_rank) const { return inv_.at(multiset_rank); }

  Family map_family(const SetFamily& fam) const;
  SetFamily unmap_family(const Family& fam) const;

 private:
  BijectionTable(int m, int k);

  int m_, k_, n_;
  Universe mu_;
  SetUniverse su_;
  std::vector<std::uint64_t> fwd_, inv_;
};

}  // namespace mekr
