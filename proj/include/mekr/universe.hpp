#pragma once

#include <cstdint>
#include <vector>

#include "mekr/bitmask.hpp"
#include "mekr/multiset.hpp"

namespace mekr {

/// All k-multisets over [m], ordered lexicographically by sorted element
/// list: [1,1] < [1,2] < [1,3] < [2,2] < ...  Rank/unrank are mutually
/// inverse and run in O(k*m) using a cached multichoose table.
///
/// Construction fails with std::overflow_error if the universe size does
/// not fit in 64 bits; everything here is meant for exhaustive treatment.
class Universe {
 public:
  Universe(int m, int k);

  int ground_size() const { return m_; }
  int cardinality() const { return k_; }
  std::uint64_t size() const { return size_; }

  std::uint64_t rank(const Multiset& f) const;
  Multiset unrank(std::uint64_t r) const;

  bool operator==(const Universe& o) const { return m_ == o.m_ && k_ == o.k_; }

 private:
  std::uint64_t mc(int m, int k) const { return table_[m * (k_ + 1) + k]; }

  int m_ = 0, k_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> table_;  // multichoose(a,b), a<=m, b<=k
};

/// Subset of a Universe, stored as a membership bitmask over ranks.
class Family {
 public:
  explicit Family(Universe u);
  Family(Universe u, Bitmask members);
  static Family full(const Universe& u);

  const Universe& universe() const { return u_; }
  std::uint64_t size() const { return members_.count(); }
  bool empty() const { return members_.none(); }

  bool contains_rank(std::uint64_t r) const { return members_.test(r); }
  bool contains(const Multiset& f) const { return members_.test(u_.rank(f)); }
  void insert_rank(std::uint64_t r) { members_.set(r); }
  void insert(const Multiset& f) { members_.set(u_.rank(f)); }
  void erase_rank(std::uint64_t r) { members_.reset(r); }

  std::vector<std::uint64_t> ranks() const { return members_.to_indices(); }
  std::vector<Multiset> members() const;
  const Bitmask& mask() const { return members_; }

  bool operator==(const Family& o) const {
    return u_ == o.u_ && members_ == o.members_;
  }

 private:
  Universe u_;
  Bitmask members_;
};

/// Every F in a and G in b satisfy |F /\ G| >= t (vacuously true when either
/// family is empty).  Throws if the families live in different universes.
bool is_cross_t_intersecting(const Family& a, const Family& b, int t);

/// Every pair F, G in a (including F == G) satisfies |F /\ G| >= t.
bool is_t_intersecting(const Family& a, int t);

}  // namespace mekr
