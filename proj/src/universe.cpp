#include "mekr/universe.hpp"

#include <stdexcept>

namespace mekr {

Universe::Universe(int m, int k) : m_(m), k_(k) {
  if (m < 1) throw std::invalid_argument("Universe: ground size must be >= 1");
  if (k < 0) throw std::invalid_argument("Universe: cardinality must be >= 0");
  // table_[a][b] = multichoose(a, b) via the split on whether element a is
  // used: mc(a,b) = mc(a-1,b) + mc(a,b-1).  Overflow anywhere implies the
  // top-right entry overflows too (mc is monotone in both arguments).
  table_.assign(static_cast<std::size_t>(m + 1) * (k + 1), 0);
  for (int a = 0; a <= m; ++a) table_[a * (k + 1)] = 1;  // mc(a, 0) = 1
  for (int b = 1; b <= k; ++b) table_[b] = 0;            // mc(0, b) = 0
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= k; ++b) {
      std::uint64_t sum = 0;
      if (__builtin_add_overflow(table_[(a - 1) * (k + 1) + b],
                                 table_[a * (k + 1) + b - 1], &sum))
        throw std::overflow_error("Universe: size does not fit in 64 bits");
      table_[a * (k + 1) + b] = sum;
    }
  size_ = mc(m, k);
}

std::uint64_t Universe::rank(const Multiset& f) const {
  if (f.ground_size() != m_)
    throw std::invalid_argument("Universe::rank: ground size mismatch");
  if (f.cardinality() != k_)
    throw std::invalid_argument("Universe::rank: cardinality mismatch");
  // Count multisets preceding f in lex order on sorted element lists: for
  // each position, smaller values there admit mc(m - v + 1, remaining)
  // completions (remaining entries drawn from {v, ..., m}).
  std::uint64_t r = 0;
  int prev = 1;
  const std::vector<int> elems = f.to_elements();
  for (int i = 0; i < k_; ++i) {
    for (int v = prev; v < elems[i]; ++v) r += mc(m_ - v + 1, k_ - i - 1);
    prev = elems[i];
  }
  return r;
}

Multiset Universe::unrank(std::uint64_t r) const {
  if (r >= size_) throw std::out_of_range("Universe::unrank: rank out of range");
  std::vector<int> mult(m_, 0);
  int prev = 1;
  for (int i = 0; i < k_; ++i) {
    for (int v = prev;; ++v) {
      const std::uint64_t c = mc(m_ - v + 1, k_ - i - 1);
      if (r < c) {
        ++mult[v - 1];
        prev = v;
        break;
      }
      r -= c;
    }
  }
  return Multiset(std::move(mult));
}

Family::Family(Universe u) : u_(std::move(u)), members_(u_.size()) {}

Family::Family(Universe u, Bitmask members) : u_(std::move(u)), members_(std::move(members)) {
  if (members_.width() != u_.size())
    throw std::invalid_argument("Family: mask width must equal universe size");
}

Family Family::full(const Universe& u) {
  return Family(u, Bitmask(u.size(), /*fill=*/true));
}

std::vector<Multiset> Family::members() const {
  std::vector<Multiset> out;
  out.reserve(size());
  members_.for_each([&](std::uint64_t r) { out.push_back(u_.unrank(r)); });
  return out;
}

bool is_cross_t_intersecting(const Family& a, const Family& b, int t) {
  if (!(a.universe() == b.universe()))
    throw std::invalid_argument("is_cross_t_intersecting: universe mismatch");
  if (t < 0) throw std::invalid_argument("is_cross_t_intersecting: t must be >= 0");
  const std::vector<Multiset> as = a.members(), bs = b.members();
  for (const Multiset& f : as)
    for (const Multiset& g : bs)
      if (intersection_size(f, g) < t) return false;
  return true;
}

bool is_t_intersecting(const Family& a, int t) {
  if (t < 0) throw std::invalid_argument("is_t_intersecting: t must be >= 0");
  const std::vector<Multiset> as = a.members();
  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t j = i; j < as.size(); ++j)
      if (intersection_size(as[i], as[j]) < t) return false;
  return true;
}

}  // namespace mekr
