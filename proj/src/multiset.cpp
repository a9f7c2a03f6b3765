#include "mekr/multiset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mekr {

Multiset::Multiset(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
  for (int v : mult_)
    if (v < 0) throw std::invalid_argument("Multiset: negative multiplicity");
}

Multiset Multiset::empty(int m) {
  if (m < 1) throw std::invalid_argument("Multiset: ground size must be >= 1");
  return Multiset(std::vector<int>(m, 0));
}

Multiset Multiset::from_elements(int m, const std::vector<int>& elements) {
  if (m < 1) throw std::invalid_argument("Multiset: ground size must be >= 1");
  std::vector<int> mult(m, 0);
  for (int e : elements) {
    if (e < 1 || e > m) throw std::invalid_argument("Multiset: element out of range");
    ++mult[e - 1];
  }
  return Multiset(std::move(mult));
}

int Multiset::cardinality() const {
  return std::accumulate(mult_.begin(), mult_.end(), 0);
}

int Multiset::multiplicity(int element) const {
  if (element < 1 || element > ground_size())
    throw std::out_of_range("Multiset: element out of range");
  return mult_[element - 1];
}

std::vector<int> Multiset::support() const {
  std::vector<int> out;
  for (int i = 0; i < ground_size(); ++i)
    if (mult_[i] > 0) out.push_back(i + 1);
  return out;
}

int Multiset::support_size() const {
  return static_cast<int>(std::count_if(mult_.begin(), mult_.end(),
                                        [](int v) { return v > 0; }));
}

std::vector<int> Multiset::to_elements() const {
  std::vector<int> out;
  out.reserve(cardinality());
  for (int i = 0; i < ground_size(); ++i)
    out.insert(out.end(), mult_[i], i + 1);
  return out;
}

std::string Multiset::str() const {
  std::string s = "[";
  bool first = true;
  for (int e : to_elements()) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "]";
}

Multiset intersection(const Multiset& a, const Multiset& b) {
  if (a.ground_size() != b.ground_size())
    throw std::invalid_argument("intersection: ground size mismatch");
  std::vector<int> mult(a.ground_size());
  for (int i = 0; i < a.ground_size(); ++i)
    mult[i] = std::min(a.multiplicities()[i], b.multiplicities()[i]);
  return Multiset(std::move(mult));
}

int intersection_size(const Multiset& a, const Multiset& b) {
  if (a.ground_size() != b.ground_size())
    throw std::invalid_argument("intersection_size: ground size mismatch");
  int total = 0;
  for (int i = 0; i < a.ground_size(); ++i)
    total += std::min(a.multiplicities()[i], b.multiplicities()[i]);
  return total;
}

Staircase::Staircase(int rows, std::vector<Cell> cells) : rows_(rows), cells_(std::move(cells)) {
  if (rows_ < 1) throw std::invalid_argument("Staircase: rows must be >= 1");
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  std::vector<int> height(rows_, 0);
  for (const Cell& c : cells_) {
    if (c.row < 1 || c.row > rows_ || c.col < 1)
      throw std::invalid_argument("Staircase: cell out of range");
    ++height[c.row - 1];
  }
  // Downward closure per row: cells (i,1)..(i,h) exactly.
  for (const Cell& c : cells_)
    if (c.col > height[c.row - 1])
      throw std::invalid_argument("Staircase: row has a gap below cell (" +
                                  std::to_string(c.row) + "," + std::to_string(c.col) + ")");
}

Staircase Staircase::from_multiset(const Multiset& f) {
  std::vector<Cell> cells;
  for (int i = 1; i <= f.ground_size(); ++i)
    for (int c = 1; c <= f.multiplicity(i); ++c)
      cells.push_back({i, c});
  return Staircase(f.ground_size(), std::move(cells));
}

Multiset Staircase::to_multiset() const {
  std::vector<int> mult(rows_, 0);
  for (const Cell& c : cells_) ++mult[c.row - 1];
  return Multiset(std::move(mult));
}

}  // namespace mekr
