#pragma once

#include <compare>
#include <string>
#include <vector>

namespace mekr {

/// A multiset over the ground set [m] = {1, ..., m}, stored as a vector of
/// multiplicities: multiplicity(i) is how many copies of element i it holds.
/// Cardinality counts copies, so [1,1,3] has cardinality 3 and support {1,3}.
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(std::vector<int> multiplicities);

  static Multiset empty(int m);
  /// Build from an element list, e.g. {1,1,3} over ground size m.
  static Multiset from_elements(int m, const std::vector<int>& elements);

  int ground_size() const { return static_cast<int>(mult_.size()); }
  int cardinality() const;
  int multiplicity(int element) const;
  const std::vector<int>& multiplicities() const { return mult_; }

  /// Elements with multiplicity >= 1, ascending.
  std::vector<int> support() const;
  int support_size() const;
  /// Sorted element list with repetition, e.g. [1,1,3] -> {1,1,3}.
  std::vector<int> to_elements() const;
  /// Render as "[1,1,3]".
  std::string str() const;

  bool operator==(const Multiset&) const = default;
  auto operator<=>(const Multiset&) const = default;

 private:
  std::vector<int> mult_;
};

/// Multiset intersection: elementwise minimum of multiplicities.
Multiset intersection(const Multiset& a, const Multiset& b);

/// Cardinality of the intersection without materialising it.
int intersection_size(const Multiset& a, const Multiset& b);

struct Cell {
  int row = 0;  // element of [m]
  int col = 0;  // copy index, 1-based
  auto operator<=>(const Cell&) const = default;
};

/// Cell-set view of a multiset: row i holds cells (i,1)..(i,multiplicity(i)).
/// Any cell set that is downward closed in each row converts back losslessly.
class Staircase {
 public:
  Staircase(int rows, std::vector<Cell> cells);
  static Staircase from_multiset(const Multiset& f);

  Multiset to_multiset() const;
  int rows() const { return rows_; }
  const std::vector<Cell>& cells() const { return cells_; }

  bool operator==(const Staircase&) const = default;

 private:
  int rows_ = 0;
  std::vector<Cell> cells_;  // sorted
};

}  // namespace mekr
