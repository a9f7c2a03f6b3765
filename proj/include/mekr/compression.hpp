#pragma once

#include <cstdint>
#include <vector>

#include "mekr/universe.hpp"

namespace mekr {

/// Down-shift of a single multiset.  When F has at least s copies of i and
/// no copy of j, the copies of i from position s upward move onto j:
/// multiplicity of i becomes s-1 and j receives the rest.  Otherwise F is
/// returned unchanged.  i == j degenerates to the identity.
Multiset shift_multiset(const Multiset& f, int i, int s, int j);

/// Apply the shift memberwise, keeping a member unchanged whenever its
/// image already lies in the family (so the result has the same size).
Family shift_family(const Family& fam, int i, int s, int j);

/// The multiset holding k copies of every element of [m]; every cross pair
/// trivially meets inside it.
Multiset full_kernel(int m, int k);

/// True when |F /\ G /\ kernel| >= t for every F in a, G in b.
bool is_t_kernel(const Multiset& kernel, const Family& a, const Family& b, int t);

/// Members of the ambient universe whose support misses supp(f) entirely —
/// exactly the candidates no 1-intersecting partner family of {f} may touch.
Family blocked_partners(const Multiset& f, const Universe& u);

/// Order-insensitive digest of a family pair, used to audit trace replays.
std::uint64_t pair_checksum(const Family& a, const Family& b);

struct ShiftRecord {
  int i = 0, s = 0, j = 0;
  std::uint64_t changed = 0;       // members rewritten across both families
  std::uint64_t kernel_cells = 0;  // cells of the kernel certified when applied
  std::uint64_t before_checksum = 0;
  std::uint64_t after_checksum = 0;
};

struct StageRecord {
  int row = 0;                // row whose top cell the stage removed
  std::vector<int> kernel;    // kernel multiplicities after the stage + pruning
};

struct CompressionTrace {
  std::vector<int> initial_kernel;  // after the opening pruning pass
  std::vector<int> final_kernel;
  std::vector<ShiftRecord> shifts;
  std::vector<StageRecord> stages;
};

struct CompositeResult {
  Family f, g;
  Multiset kernel;
};

/// One full stage: with s the kernel height of row i, apply S((i,s),j) to
/// both families for every j != i, then drop the top cell of row i.  The
/// families must be cross-t-intersecting with m >= 2k - t, the kernel must
/// certify them, and row i must have height >= 2.
CompositeResult composite_shift(const Family& a, const Family& b,
                                const Multiset& kernel, int i, int t);

struct ReduceResult {
  Family f, g;
  CompressionTrace trace;
};

/// Drive composite shifts until the kernel collapses to one copy of every
/// element, greedily pruning unneeded kernel cells between stages.  The
/// result is a same-sized cross-t-intersecting pair whose members pairwise
/// meet in at least t distinct shared support elements.
ReduceResult kernel_reduce(const Family& a, const Family& b, int t);

}  // namespace mekr
