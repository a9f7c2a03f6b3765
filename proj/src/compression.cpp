#include "mekr/compression.hpp"

#include <algorithm>
#include <stdexcept>

namespace mekr {
namespace {

void validate_shift_args(const Multiset& f, int i, int s, int j) {
  const int m = f.ground_size();
  if (i < 1 || i > m || j < 1 || j > m)
    throw std::invalid_argument("shift: row indices must lie in [1, m]");
  if (s < 1) throw std::invalid_argument("shift: s must be >= 1");
}

int min3(int a, int b, int c) { return std::min(a, std::min(b, c)); }

// |F /\ G /\ kernel| computed from raw multiplicity vectors.
int triple_intersection(const std::vector<int>& f, const std::vector<int>& g,
                        const std::vector<int>& kernel) {
  int total = 0;
  for (std::size_t i = 0; i < kernel.size(); ++i)
    total += min3(f[i], g[i], kernel[i]);
  return total;
}

bool kernel_certifies(const std::vector<int>& kernel,
                      const std::vector<std::vector<int>>& as,
                      const std::vector<std::vector<int>>& bs, int t) {
  for (const auto& f : as)
    for (const auto& g : bs)
      if (triple_intersection(f, g, kernel) < t) return false;
  return true;
}

std::vector<std::vector<int>> member_vectors(const Family& fam) {
  std::vector<std::vector<int>> out;
  out.reserve(fam.size());
  for (const Multiset& f : fam.members()) out.push_back(f.multiplicities());
  return out;
}

// Shrink kernel rows (never below height 1) while it still certifies the
// pair; scans rows round-robin until a full pass removes nothing.
void greedy_prune(std::vector<int>& kernel,
                  const std::vector<std::vector<int>>& as,
                  const std::vector<std::vector<int>>& bs, int t) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < kernel.size(); ++i) {
      while (kernel[i] >= 2) {
        --kernel[i];
        if (kernel_certifies(kernel, as, bs, t)) {
          changed = true;
        } else {
          ++kernel[i];
          break;
        }
      }
    }
  }
}

// Shared stage driver; appends ShiftRecords to trace when provided.
void run_stage(Family& a, Family& b, std::vector<int>& kernel, int i, int t,
               CompressionTrace* trace) {
  const int m = a.universe().ground_size();
  const int s = kernel[i - 1];
  for (int j = 1; j <= m; ++j) {
    if (j == i) continue;
    ShiftRecord rec;
    rec.i = i;
    rec.s = s;
    rec.j = j;
    rec.before_checksum = pair_checksum(a, b);
    Family a2 = shift_family(a, i, s, j);
    Family b2 = shift_family(b, i, s, j);
    rec.changed = a2.mask().minus(a.mask()).count() + b2.mask().minus(b.mask()).count();
    a = std::move(a2);
    b = std::move(b2);
    rec.after_checksum = pair_checksum(a, b);
    rec.kernel_cells = 0;
    for (int h : kernel) rec.kernel_cells += static_cast<std::uint64_t>(h);
    if (trace) trace->shifts.push_back(rec);
  }
  --kernel[i - 1];
  if (!kernel_certifies(kernel, member_vectors(a), member_vectors(b), t))
    throw std::logic_error("composite shift lost the kernel property");
}

}  // namespace

Multiset shift_multiset(const Multiset& f, int i, int s, int j) {
  validate_shift_args(f, i, s, j);
  if (i == j) return f;
  const int mi = f.multiplicity(i);
  if (mi < s || f.multiplicity(j) > 0) return f;
  std::vector<int> mult = f.multiplicities();
  mult[i - 1] = s - 1;
  mult[j - 1] = mi - s + 1;
  return Multiset(std::move(mult));
}

Family shift_family(const Family& fam, int i, int s, int j) {
  Family out(fam.universe());
  for (std::uint64_t r : fam.ranks()) {
    const Multiset f = fam.universe().unrank(r);
    const Multiset f2 = shift_multiset(f, i, s, j);
    // The image replaces f unless it collides with an existing member (the
    // image map is injective on members it moves, so sizes are preserved).
    if (f2 == f || fam.contains(f2))
      out.insert_rank(r);
    else
      out.insert(f2);
  }
  return out;
}

Multiset full_kernel(int m, int k) {
  if (m < 1 || k < 1) throw std::invalid_argument("full_kernel: need m >= 1, k >= 1");
  return Multiset(std::vector<int>(m, k));
}

bool is_t_kernel(const Multiset& kernel, const Family& a, const Family& b, int t) {
  if (!(a.universe() == b.universe()))
    throw std::invalid_argument("is_t_kernel: universe mismatch");
  if (kernel.ground_size() != a.universe().ground_size())
    throw std::invalid_argument("is_t_kernel: kernel ground size mismatch");
  if (t < 0) throw std::invalid_argument("is_t_kernel: t must be >= 0");
  // A kernel must dominate one copy of every element.
  for (int v : kernel.multiplicities())
    if (v < 1) return false;
  return kernel_certifies(kernel.multiplicities(), member_vectors(a), member_vectors(b), t);
}

Family blocked_partners(const Multiset& f, const Universe& u) {
  if (f.ground_size() != u.ground_size())
    throw std::invalid_argument("blocked_partners: ground size mismatch");
  const std::vector<int>& mult = f.multiplicities();
  Family out(u);
  for (std::uint64_t r = 0; r < u.size(); ++r) {
    const Multiset g = u.unrank(r);
    bool touches = false;
    for (int e : g.support())
      if (mult[e - 1] > 0) {
        touches = true;
        break;
      }
    if (!touches) out.insert_rank(r);
  }
  return out;
}

std::uint64_t pair_checksum(const Family& a, const Family& b) {
  std::uint64_t h = a.mask().hash();
  h ^= b.mask().hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

CompositeResult composite_shift(const Family& a, const Family& b,
                                const Multiset& kernel, int i, int t) {
  const Universe& u = a.universe();
  const int m = u.ground_size();
  const int k = u.cardinality();
  if (t < 1 || t > k) throw std::invalid_argument("composite_shift: need 1 <= t <= k");
  if (m < 2 * k - t)
    throw std::invalid_argument("composite_shift: requires m >= 2k - t");
  if (i < 1 || i > m) throw std::invalid_argument("composite_shift: row out of range");
  if (kernel.ground_size() != m)
    throw std::invalid_argument("composite_shift: kernel ground size mismatch");
  if (kernel.multiplicity(i) < 2)
    throw std::invalid_argument("composite_shift: row height must be >= 2");
  if (!is_cross_t_intersecting(a, b, t))
    throw std::invalid_argument("composite_shift: families are not cross-t-intersecting");
  if (!is_t_kernel(kernel, a, b, t))
    throw std::invalid_argument("composite_shift: kernel does not certify the pair");

  Family fa = a, fb = b;
  std::vector<int> kv = kernel.multiplicities();
  run_stage(fa, fb, kv, i, t, nullptr);
  return {std::move(fa), std::move(fb), Multiset(std::move(kv))};
}

ReduceResult kernel_reduce(const Family& a, const Family& b, int t) {
  const Universe& u = a.universe();
  if (!(u == b.universe()))
    throw std::invalid_argument("kernel_reduce: universe mismatch");
  const int m = u.ground_size();
  const int k = u.cardinality();
  if (t < 1 || t > k) throw std::invalid_argument("kernel_reduce: need 1 <= t <= k");
  if (m < 2 * k - t)
    throw std::invalid_argument("kernel_reduce: requires m >= 2k - t");
  if (!is_cross_t_intersecting(a, b, t))
    throw std::invalid_argument("kernel_reduce: families are not cross-t-intersecting");

  ReduceResult out{a, b, {}};
  std::vector<int> kernel(m, k);
  greedy_prune(kernel, member_vectors(out.f), member_vectors(out.g), t);
  out.trace.initial_kernel = kernel;

  // Each stage strictly shrinks the kernel, which stays above one copy of
  // each element, so this terminates after at most m*(k-1) stages.
  while (std::any_of(kernel.begin(), kernel.end(), [](int h) { return h >= 2; })) {
    int row = 0;
    for (int i = 1; i <= m; ++i)
      if (kernel[i - 1] >= 2) {
        row = i;
        break;
      }
    run_stage(out.f, out.g, kernel, row, t, &out.trace);
    greedy_prune(kernel, member_vectors(out.f), member_vectors(out.g), t);
    out.trace.stages.push_back({row, kernel});
  }
  out.trace.final_kernel = kernel;
  return out;
}

}  // namespace mekr
