#ifndef BRAID_CONTRIBUTION_HPP
#define BRAID_CONTRIBUTION_HPP

#include <string>
#include <vector>

#include "braid/arrangement.hpp"
#include "braid/boxed.hpp"
#include "braid/plane_tree.hpp"

namespace braid {

// f and g over the positions of one cadet sequence (0-based):
//   f[i] = smallest j > i with sum_{p=i+1..j} lsib(v_p) in S^-_{v_i, v_j},
//          or k if no such j exists;
//   g[i] = min over l in [i, f[i]-1] of (f[l] - 1): the end of the longest
//          S-cadet sequence starting at position i.
struct ExtensionTables {
  std::vector<int> f;
  std::vector<int> g;
};

inline ExtensionTables longest_extension_table(const ArrangementSpec& spec,
                                               const PlaneTree& tree,
                                               const std::vector<int>& chain) {
  int k = static_cast<int>(chain.size());
  ExtensionTables t;
  t.f.assign(k, k);
  t.g.assign(k, k - 1);
  for (int i = 0; i < k; ++i) {
    long long sum = 0;
    for (int j = i + 1; j < k; ++j) {
      sum += tree.lsib(chain[j]);
      if (spec.in_s_minus(chain[i], chain[j], sum)) {
        t.f[i] = j;
        break;
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    int g = k - 1;
    for (int l = i; l < t.f[i]; ++l) g = std::min(g, t.f[l] - 1);
    t.g[i] = g;
  }
  return t;
}

// A contiguous run of chain positions, inclusive on both ends.
struct Run {
  int begin;
  int end;
  bool operator==(const Run&) const = default;
};

// The maximal S-cadet sequences of one maximal cadet sequence, as position
// runs ordered by last node. The candidates are [i, g(i)]; a left-to-right
// sweep keeps a run exactly when its end exceeds every earlier end, which
// deletes precisely the runs extendable downwards.
inline std::vector<Run> maximal_s_cadet_runs(const ArrangementSpec& spec,
                                             const PlaneTree& tree,
                                             const std::vector<int>& chain) {
  ExtensionTables t = longest_extension_table(spec, tree, chain);
  std::vector<Run> runs;
  int best_end = -1;
  for (int i = 0; i < static_cast<int>(chain.size()); ++i) {
    if (t.g[i] > best_end) {
      runs.push_back({i, t.g[i]});
      best_end = t.g[i];
    }
  }
  return runs;
}

inline std::vector<std::vector<int>> maximal_s_cadet_sequences(const ArrangementSpec& spec,
                                                               const PlaneTree& tree,
                                                               const std::vector<int>& chain) {
  std::vector<std::vector<int>> out;
  for (const Run& r : maximal_s_cadet_runs(spec, tree, chain))
    out.emplace_back(chain.begin() + r.begin, chain.begin() + r.end + 1);
  return out;
}

// An S-connected cadet sequence: a minimal union of overlapping maximal
// S-cadet sequences, carried with those runs rebased to local positions.
// Sentinel boxes X_0 and X_{k'+1} are implicit; parent(v_1) and cadet(v_k)
// are the synthetic node 0, consulted through the same code path in
// reaches().
struct ConnectedContext {
  std::vector<int> nodes;  // labels, in chain order
  std::vector<Run> runs;   // local positions, ordered by last node

  int length() const { return static_cast<int>(nodes.size()); }
  int box_count() const { return static_cast<int>(runs.size()); }
};

inline std::vector<ConnectedContext> s_connected_components(const ArrangementSpec& spec,
                                                            const PlaneTree& tree,
                                                            const std::vector<int>& chain) {
  std::vector<Run> runs = maximal_s_cadet_runs(spec, tree, chain);
  std::vector<ConnectedContext> out;
  std::size_t i = 0;
  while (i < runs.size()) {
    std::size_t j = i;
    int end = runs[i].end;
    while (j + 1 < runs.size() && runs[j + 1].begin <= end) {
      ++j;
      end = runs[j].end;
    }
    ConnectedContext ctx;
    int base = runs[i].begin;
    ctx.nodes.assign(chain.begin() + base, chain.begin() + end + 1);
    for (std::size_t r = i; r <= j; ++r)
      ctx.runs.push_back({runs[r].begin - base, runs[r].end - base});
    out.push_back(std::move(ctx));
    i = j + 1;
  }
  return out;
}

// X_i reaches X_j (0 <= i < j <= k'): the parent of the largest-indexed node
// in X_j \ X_{j+1} lies in X_i. X_{k'+1} = {0} makes X_{k'} \ X_{k'+1} the
// whole last box; parent(v_1) = 0 lies in X_0 = {0} only.
inline bool reaches(const ConnectedContext& ctx, int i, int j) {
  int kp = ctx.box_count();
  if (i < 0 || j <= i || j > kp) throw UsageError("reaches: need 0 <= i < j <= k'");
  const Run& rj = ctx.runs[j - 1];
  int last;
  if (j == kp) {
    last = rj.end;
  } else {
    last = std::min(rj.end, ctx.runs[j].begin - 1);
  }
  if (last == 0) return i == 0;     // parent is the synthetic node 0
  if (i == 0) return false;
  int parent_pos = last - 1;
  const Run& ri = ctx.runs[i - 1];
  return ri.begin <= parent_pos && parent_pos <= ri.end;
}

// Trace of the greedy chain algorithm: the picked box indices i_0 = 0,
// i_1, ..., and whether it reached X_{k'}.
struct ChainTrace {
  std::vector<int> picks;  // starts with 0
  bool success = false;
};

inline ChainTrace run_chain_algorithm(const ConnectedContext& ctx) {
  int kp = ctx.box_count();
  ChainTrace trace;
  trace.picks.push_back(0);
  std::vector<char> excluded(kp + 1, 0);  // reached by some X_{i_l}, l < j
  while (true) {
    int current = trace.picks.back();
    if (current == kp) {
      trace.success = true;
      return trace;
    }
    int next = -1;
    for (int r = 1; r <= kp; ++r) {
      if (excluded[r]) continue;
      if (reaches(ctx, current, r)) {
        next = r;
        break;
      }
    }
    if (next == -1) return trace;  // failure: contribution 0
    // Everything the current box reaches becomes excluded for later steps.
    for (int r = current + 1; r <= kp; ++r)
      if (reaches(ctx, current, r)) excluded[r] = 1;
    trace.picks.push_back(next);
  }
}

// Contribution of one S-connected cadet sequence: 0 on algorithm failure,
// otherwise (-1)^(k - t) with t the number of steps taken.
inline int contribution_connected(const ConnectedContext& ctx) {
  ChainTrace trace = run_chain_algorithm(ctx);
  if (!trace.success) return 0;
  int t = static_cast<int>(trace.picks.size()) - 1;
  int k = ctx.length();
  return ((k - t) % 2 == 0) ? 1 : -1;
}

// Product over the S-connected components of all maximal cadet sequences.
inline int tree_contribution_fast(const ArrangementSpec& spec, const PlaneTree& tree) {
  require_arity(spec, tree);
  int product = 1;
  for (const std::vector<int>& chain : maximal_cadet_sequences(tree)) {
    for (const ConnectedContext& ctx : s_connected_components(spec, tree, chain)) {
      int c = contribution_connected(ctx);
      if (c == 0) return 0;
      product *= c;
    }
  }
  return product;
}

inline BigInt count_regions_fast(const ArrangementSpec& spec,
                                 const BigInt& guard = BigInt(100000000)) {
  int n = spec.dimension();
  int m = spec.max_offset();
  check_tree_guard(n, m, guard);
  BigInt total = 0;
  for_each_tree(n, m, [&](const PlaneTree& tree) {
    total += tree_contribution_fast(spec, tree);
  });
  return total;
}

}  // namespace braid

#endif  // BRAID_CONTRIBUTION_HPP
