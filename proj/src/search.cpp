#include "mekr/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "mekr/bounds.hpp"
#include "mekr/compression.hpp"

namespace mekr {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

CompatibilityIndex::CompatibilityIndex(Universe u, int t) : u_(std::move(u)), t_(t) {
  if (t < 0) throw std::invalid_argument("CompatibilityIndex: t must be >= 0");
  const std::uint64_t n = u_.size();
  std::vector<std::vector<int>> mult;
  mult.reserve(n);
  for (std::uint64_t r = 0; r < n; ++r) mult.push_back(u_.unrank(r).multiplicities());
  masks_.assign(n, Bitmask(n));
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = i; j < n; ++j) {
      int inter = 0;
      for (std::size_t e = 0; e < mult[i].size(); ++e)
        inter += std::min(mult[i][e], mult[j][e]);
      if (inter >= t_) {
        masks_[i].set(j);
        masks_[j].set(i);
      }
    }
}

Bitmask CompatibilityIndex::partners(const Bitmask& members) const {
  Bitmask out(size(), /*fill=*/true);
  members.for_each([&](std::uint64_t r) { out &= masks_[r]; });
  return out;
}

Bitmask CompatibilityIndex::closure(const Bitmask& members) const {
  return partners(partners(members));
}

Family common_partners(const Family& a, int t) {
  CompatibilityIndex idx(a.universe(), t);
  return Family(a.universe(), idx.partners(a.mask()));
}

Family closure_family(const Family& a, int t) {
  CompatibilityIndex idx(a.universe(), t);
  return Family(a.universe(), idx.closure(a.mask()));
}

namespace {

// One DFS node: `chosen` has cnt members, `partners` is non-empty and holds
// everything compatible with all of them.  In the sizing phase (collect ==
// nullptr) the node improves the shared incumbent; in the collection phase
// it records normalised pairs hitting the known optimum.
void brute_dfs(const CompatibilityIndex& idx, std::uint64_t from, std::uint64_t cnt,
               const Bitmask& partners, std::atomic<std::uint64_t>& incumbent,
               std::uint64_t target,
               std::vector<std::pair<Bitmask, Bitmask>>* collect,
               std::vector<Bitmask>* raw, Bitmask& chosen, std::uint64_t& nodes) {
  ++nodes;
  const std::uint64_t n = idx.size();
  const std::uint64_t sum = cnt + partners.count();
  if (collect) {
    if (sum == target) {
      collect->emplace_back(idx.partners(partners), partners);
      if (raw) raw->push_back(chosen);
    }
  } else {
    std::uint64_t cur = incumbent.load(std::memory_order_relaxed);
    while (sum > cur &&
           !incumbent.compare_exchange_weak(cur, sum, std::memory_order_relaxed)) {
    }
  }
  for (std::uint64_t x = from; x < n; ++x) {
    Bitmask p2 = partners & idx.partner_mask(x);
    if (p2.none()) continue;  // partner mask would empty: no valid pair below
    const std::uint64_t ub = cnt + 1 + (n - x - 1) + p2.count();
    const std::uint64_t floor_ =
        collect ? target : incumbent.load(std::memory_order_relaxed);
    if (ub < floor_) continue;
    chosen.set(x);
    brute_dfs(idx, x + 1, cnt + 1, p2, incumbent, target, collect, raw, chosen, nodes);
    chosen.reset(x);
  }
}

void sort_unique(std::vector<std::pair<Bitmask, Bitmask>>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

void sort_unique(std::vector<Bitmask>& masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
}

}  // namespace

EngineResult max_sum_bruteforce_engine(const CompatibilityIndex& idx, int threads,
                                       bool collect_raw, const Budgets& budgets) {
  const std::uint64_t n = idx.size();
  if (n > budgets.brute_universe)
    throw BudgetError("brute-force engine: universe size " + std::to_string(n) +
                      " exceeds budget " + std::to_string(budgets.brute_universe) +
                      "; use the closure engine");
  EngineResult result;
  if (n == 0) return result;

  const unsigned hw = threads > 0 ? static_cast<unsigned>(threads)
                                  : std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::uint64_t> incumbent{0};
  std::atomic<std::uint64_t> node_total{0};
  std::vector<std::pair<Bitmask, Bitmask>> pairs;
  std::vector<Bitmask> raw;
  std::mutex merge_mu;

  // Workers claim root elements; branches below different roots are
  // disjoint, and the incumbent only ever grows, so stale reads merely
  // weaken pruning.
  auto run_phase = [&](bool collecting, std::uint64_t target) {
    std::atomic<std::uint64_t> root{0};
    auto worker = [&]() {
      std::uint64_t nodes = 0;
      std::vector<std::pair<Bitmask, Bitmask>> local_pairs;
      std::vector<Bitmask> local_raw;
      Bitmask chosen(n);
      for (;;) {
        const std::uint64_t x0 = root.fetch_add(1, std::memory_order_relaxed);
        if (x0 >= n) break;
        const Bitmask& p0 = idx.partner_mask(x0);
        if (p0.none()) continue;
        const std::uint64_t ub = 1 + (n - x0 - 1) + p0.count();
        const std::uint64_t floor_ =
            collecting ? target : incumbent.load(std::memory_order_relaxed);
        if (ub < floor_) continue;
        chosen.set(x0);
        brute_dfs(idx, x0 + 1, 1, p0, incumbent, target,
                  collecting ? &local_pairs : nullptr,
                  collecting && collect_raw ? &local_raw : nullptr, chosen, nodes);
        chosen.reset(x0);
      }
      std::lock_guard<std::mutex> lock(merge_mu);
      node_total.fetch_add(nodes, std::memory_order_relaxed);
      for (auto& p : local_pairs) pairs.push_back(std::move(p));
      for (auto& w : local_raw) raw.push_back(std::move(w));
    };
    std::vector<std::thread> pool;
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(hw, n));
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  };

  run_phase(false, 0);
  const std::uint64_t optimum = incumbent.load();
  if (optimum > 0) run_phase(true, optimum);

  result.optimum = optimum;
  sort_unique(pairs);
  result.optimal_pairs = std::move(pairs);
  sort_unique(raw);
  result.raw_witnesses = std::move(raw);
  result.nodes = node_total.load();
  return result;
}

EngineResult max_sum_closure_engine(const CompatibilityIndex& idx, const Budgets& budgets) {
  const std::uint64_t n = idx.size();
  EngineResult result;
  if (n == 0) return result;

  // Every closure image is an intersection of partner masks, so the Moore
  // family generated by them (seeded with the full universe) contains every
  // candidate optimal F.  Sets appended while processing mask a need no
  // second pass against a: intersecting with a mask is idempotent.
  std::vector<Bitmask> closed;
  std::unordered_set<Bitmask, BitmaskHash> seen;
  Bitmask full(n, /*fill=*/true);
  closed.push_back(full);
  seen.insert(full);
  for (std::uint64_t a = 0; a < n; ++a) {
    const Bitmask& na = idx.partner_mask(a);
    const std::size_t snapshot = closed.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      Bitmask x = closed[i] & na;
      if (seen.insert(x).second) {
        if (closed.size() >= budgets.closure_sets)
          throw BudgetError("closure engine: closed-set count exceeds budget");
        closed.push_back(std::move(x));
      }
    }
  }
  result.nodes = closed.size();

  std::uint64_t optimum = 0;
  std::vector<std::pair<Bitmask, Bitmask>> pairs;
  for (const Bitmask& x : closed) {
    if (x.none()) continue;
    Bitmask g = idx.partners(x);
    if (g.none()) continue;
    const std::uint64_t sum = x.count() + g.count();
    if (sum > optimum) {
      optimum = sum;
      pairs.clear();
    }
    if (sum == optimum) pairs.emplace_back(x, std::move(g));
  }
  result.optimum = optimum;
  sort_unique(pairs);
  result.optimal_pairs = std::move(pairs);
  return result;
}

namespace {

void clique_dfs(const std::vector<Bitmask>& adj, std::uint64_t cnt, const Bitmask& cand,
                std::uint64_t& best, std::uint64_t target, std::vector<Bitmask>* collect,
                Bitmask& chosen, std::uint64_t& nodes) {
  ++nodes;
  if (collect) {
    if (cnt == target) collect->push_back(chosen);
  } else if (cnt > best) {
    best = cnt;
  }
  const std::uint64_t reachable = cnt + cand.count();
  if (collect ? reachable < target : reachable <= best) return;
  cand.for_each([&](std::uint64_t x) {
    Bitmask c2 = cand & adj[x];
    c2.reset_prefix(x + 1);
    chosen.set(x);
    clique_dfs(adj, cnt + 1, c2, best, target, collect, chosen, nodes);
    chosen.reset(x);
  });
}

}  // namespace

EngineResult max_t_intersecting_engine(const CompatibilityIndex& idx, const Budgets& budgets) {
  const std::uint64_t n = idx.size();
  if (n > budgets.clique_universe)
    throw BudgetError("clique engine: universe size " + std::to_string(n) +
                      " exceeds budget " + std::to_string(budgets.clique_universe));
  EngineResult result;
  if (n == 0) return result;

  Bitmask verts(n);
  std::vector<Bitmask> adj(n, Bitmask(n));
  for (std::uint64_t i = 0; i < n; ++i) {
    if (idx.partner_mask(i).test(i)) verts.set(i);  // self-compatible (t <= k)
    adj[i] = idx.partner_mask(i);
    adj[i].reset(i);
  }

  std::uint64_t best = 0, nodes = 0;
  Bitmask chosen(n);
  clique_dfs(adj, 0, verts, best, 0, nullptr, chosen, nodes);
  std::vector<Bitmask> cliques;
  if (best > 0) clique_dfs(adj, 0, verts, best, best, &cliques, chosen, nodes);

  result.optimum = best;
  sort_unique(cliques);
  result.optimal_pairs.reserve(cliques.size());
  for (const Bitmask& c : cliques) result.optimal_pairs.emplace_back(c, c);
  result.raw_witnesses = std::move(cliques);
  result.nodes = nodes;
  return result;
}

std::string VerdictDetail::str() const {
  if (notes.empty()) return status;
  std::string s = status + ": ";
  for (std::size_t i = 0; i < notes.size(); ++i) {
    if (i) s += "; ";
    s += notes[i];
  }
  return s;
}

namespace {

std::string describe_form(const PairCanonicalForm& form) {
  auto [f, g] = realize_pair(form);
  auto fam_str = [](const Family& fam) {
    std::string s = "{";
    bool first = true;
    for (const Multiset& x : fam.members()) {
      if (!first) s += ",";
      s += x.str();
      first = false;
    }
    return s + "}";
  };
  return "F=" + fam_str(f) + " G=" + fam_str(g);
}

}  // namespace

VerdictDetail classify_and_verify(const BigInt& optimum,
                                  const std::vector<PairCanonicalForm>& observed,
                                  const PredictedOptima& predicted,
                                  const BoundValue& bound) {
  VerdictDetail v;
  if (!predicted.applicable && !bound.hypothesis_ok) {
    v.status = "not_applicable";
    if (!predicted.note.empty()) v.notes.push_back(predicted.note);
    return v;
  }
  if (bound.hypothesis_ok && optimum != bound.value)
    v.notes.push_back("optimum " + optimum.str() + " != bound " + bound.value.str() +
                      " (" + bound.hypothesis + ")");
  if (predicted.applicable) {
    std::set<PairCanonicalForm> pred;
    for (const auto& [f, g] : predicted.classes) pred.insert(canonicalize_pair(f, g));
    std::set<PairCanonicalForm> obs(observed.begin(), observed.end());
    for (const auto& form : obs)
      if (!pred.count(form))
        v.notes.push_back("extra optimal class beyond prediction: " + describe_form(form));
    for (const auto& form : pred)
      if (!obs.count(form))
        v.notes.push_back("predicted class not observed optimal: " + describe_form(form));
  }
  v.status = v.notes.empty() ? "match" : "discrepancy";
  return v;
}

namespace {

void validate_mkt_search(int m, int k, int t) {
  if (m < 1 || k < 1) throw std::domain_error("search: need m >= 1, k >= 1");
  if (t < 1) throw std::domain_error("search: need t >= 1");
  if (t > k) throw std::domain_error("search: t > k admits no valid families");
}

std::vector<PairCanonicalForm> canonical_classes(
    const Universe& u, const std::vector<std::pair<Bitmask, Bitmask>>& pairs,
    const Budgets& budgets) {
  std::set<PairCanonicalForm> forms;
  for (const auto& [fm, gm] : pairs)
    forms.insert(canonicalize_pair(Family(u, fm), Family(u, gm), budgets));
  return {forms.begin(), forms.end()};
}

}  // namespace

SearchReport max_sum_search(int m, int k, int t, const SearchOptions& opts) {
  const auto start = Clock::now();
  validate_mkt_search(m, k, t);
  if (opts.engine != "brute" && opts.engine != "closure" && opts.engine != "both")
    throw std::invalid_argument("max_sum_search: unknown engine '" + opts.engine + "'");

  Universe u(m, k);
  CompatibilityIndex idx(u, t);

  EngineResult res;
  std::vector<std::string> engine_notes;
  if (opts.engine == "brute") {
    res = max_sum_bruteforce_engine(idx, opts.threads, opts.collect_raw, opts.budgets);
  } else if (opts.engine == "closure") {
    res = max_sum_closure_engine(idx, opts.budgets);
  } else {
    EngineResult brute =
        max_sum_bruteforce_engine(idx, opts.threads, opts.collect_raw, opts.budgets);
    EngineResult closure = max_sum_closure_engine(idx, opts.budgets);
    if (brute.optimum != closure.optimum || brute.optimal_pairs != closure.optimal_pairs)
      engine_notes.push_back("engines disagree: brute optimum " +
                             std::to_string(brute.optimum) + " with " +
                             std::to_string(brute.optimal_pairs.size()) +
                             " pairs vs closure optimum " +
                             std::to_string(closure.optimum) + " with " +
                             std::to_string(closure.optimal_pairs.size()) + " pairs");
    closure.nodes += brute.nodes;
    closure.raw_witnesses = std::move(brute.raw_witnesses);
    res = std::move(closure);
  }

  SearchReport rep;
  rep.m = m;
  rep.k = k;
  rep.t = t;
  rep.engine = opts.engine;
  rep.optimum = res.optimum;
  const BoundValue bound = cross_sum_bound(m, k, t);
  rep.bound = bound.value;
  rep.bound_applicable = bound.hypothesis_ok;
  rep.bound_hypothesis = bound.hypothesis;
  rep.classes = canonical_classes(u, res.optimal_pairs, opts.budgets);
  rep.verdict = classify_and_verify(BigInt(res.optimum), rep.classes,
                                    predicted_optima(m, k, t), bound);
  if (!engine_notes.empty()) {
    rep.verdict.status = "discrepancy";
    for (auto& note : engine_notes) rep.verdict.notes.push_back(std::move(note));
  }
  if (opts.collect_raw)
    for (const Bitmask& w : res.raw_witnesses) rep.raw_families.push_back(w.to_indices());
  rep.seed = opts.seed;
  rep.elapsed_ms = ms_since(start);
  return rep;
}

SearchReport max_t_intersecting_search(int m, int k, int t, const SearchOptions& opts) {
  const auto start = Clock::now();
  validate_mkt_search(m, k, t);

  Universe u(m, k);
  CompatibilityIndex idx(u, t);
  EngineResult res = max_t_intersecting_engine(idx, opts.budgets);

  SearchReport rep;
  rep.m = m;
  rep.k = k;
  rep.t = t;
  rep.engine = "clique";
  rep.optimum = res.optimum;
  const BoundValue bound = t_intersecting_bound(m, k, t);
  rep.bound = bound.value;
  rep.bound_applicable = bound.hypothesis_ok;
  rep.bound_hypothesis = bound.hypothesis;
  rep.classes = canonical_classes(u, res.optimal_pairs, opts.budgets);

  PredictedOptima predicted;
  if (t == 1 && m > k + 1) {
    // Unique extremal family: a star (uniqueness claimed only for m > k+1).
    predicted.applicable = true;
    Family star = star_family(u, 1);
    predicted.classes.emplace_back(star, star);
  } else if (t == 1) {
    predicted.note = "extremal uniqueness not claimed at m <= k+1";
  } else {
    predicted.note = "extremal uniqueness not checked for t >= 2";
  }
  rep.verdict = classify_and_verify(BigInt(res.optimum), rep.classes, predicted, bound);
  if (opts.collect_raw)
    for (const Bitmask& w : res.raw_witnesses) rep.raw_families.push_back(w.to_indices());
  rep.seed = opts.seed;
  rep.elapsed_ms = ms_since(start);
  return rep;
}

namespace {

bool supports_cross_meet(const Family& a, const Family& b, int t) {
  const std::vector<Multiset> as = a.members(), bs = b.members();
  for (const Multiset& f : as)
    for (const Multiset& g : bs) {
      int common = 0;
      for (int e = 1; e <= f.ground_size(); ++e)
        if (f.multiplicity(e) > 0 && g.multiplicity(e) > 0) ++common;
      if (common < t) return false;
    }
  return true;
}

bool replay_matches(const Family& a0, const Family& b0, const ReduceResult& red,
                    std::string* why) {
  Family a = a0, b = b0;
  for (const ShiftRecord& rec : red.trace.shifts) {
    if (pair_checksum(a, b) != rec.before_checksum) {
      *why = "trace replay: checksum mismatch before a shift";
      return false;
    }
    a = shift_family(a, rec.i, rec.s, rec.j);
    b = shift_family(b, rec.i, rec.s, rec.j);
    if (pair_checksum(a, b) != rec.after_checksum) {
      *why = "trace replay: checksum mismatch after a shift";
      return false;
    }
  }
  if (!(a == red.f && b == red.g)) {
    *why = "trace replay: end state differs from reported result";
    return false;
  }
  return true;
}

}  // namespace

PipelineReport verify_kernel_pipeline(int m, int k, int t, int samples,
                                      std::uint64_t seed, const Budgets& budgets) {
  const auto start = Clock::now();
  validate_mkt_search(m, k, t);
  if (m < 2 * k - t)
    throw std::domain_error("verify_kernel_pipeline: requires m >= 2k-t");
  if (samples < 1)
    throw std::invalid_argument("verify_kernel_pipeline: samples must be >= 1");
  if (multichoose(m, k) > BigInt(budgets.clique_universe))
    throw BudgetError("verify_kernel_pipeline: universe size exceeds budget");

  PipelineReport rep;
  rep.m = m;
  rep.k = k;
  rep.t = t;
  rep.samples = samples;
  rep.seed = seed;

  Universe u(m, k);
  CompatibilityIndex idx(u, t);
  const Multiset all_ones(std::vector<int>(m, 1));

  auto check_sample = [&](int index, std::uint64_t sample_seed, const Family& a,
                          const Family& b, bool expect_identity) {
    std::string reason;
    bool ok = true;
    try {
      const ReduceResult red = kernel_reduce(a, b, t);
      if (red.f.size() != a.size() || red.g.size() != b.size()) {
        ok = false;
        reason = "family sizes not preserved";
      } else if (!is_cross_t_intersecting(red.f, red.g, t)) {
        ok = false;
        reason = "cross-t-intersecting property lost";
      } else if (!is_t_kernel(all_ones, red.f, red.g, t)) {
        ok = false;
        reason = "all-ones kernel does not certify the result";
      } else if (!supports_cross_meet(red.f, red.g, t)) {
        ok = false;
        reason = "some cross pair shares fewer than t support elements";
      } else if (!replay_matches(a, b, red, &reason)) {
        ok = false;
      } else if (expect_identity &&
                 !(red.trace.shifts.empty() && red.f == a && red.g == b)) {
        ok = false;
        reason = "expected an identity reduction for the extremal pair";
      }
    } catch (const std::exception& e) {
      ok = false;
      reason = std::string("exception: ") + e.what();
    }
    if (ok)
      ++rep.passed;
    else
      rep.failures.push_back({index, sample_seed, reason});
  };

  {
    const auto [hf, hg] = hilton_milner_pair(m, k, t);
    check_sample(0, seed, hf, hg, /*expect_identity=*/true);
  }
  for (int i = 1; i < samples; ++i) {
    const std::uint64_t sample_seed =
        splitmix64(seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(i)));
    std::mt19937_64 rng(sample_seed);
    // Seed a small random set, take its partner family, then the partner of
    // that: a closed pair, cross-t-intersecting by construction.
    Family b0(u);
    for (int tries = 0; tries < 64 && b0.empty(); ++tries) {
      Bitmask seeds(u.size());
      const int picks = 1 + static_cast<int>(rng() % 3);
      for (int p = 0; p < picks; ++p) seeds.set(rng() % u.size());
      Bitmask g = idx.partners(seeds);
      if (g.any()) b0 = Family(u, std::move(g));
    }
    if (b0.empty()) {
      Bitmask single(u.size());
      single.set(rng() % u.size());
      b0 = Family(u, idx.partners(single));  // contains the seed itself
    }
    Family a0(u, idx.partners(b0.mask()));
    check_sample(i, sample_seed, a0, b0, /*expect_identity=*/false);
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

}  // namespace mekr
