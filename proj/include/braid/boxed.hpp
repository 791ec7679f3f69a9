#ifndef BRAID_BOXED_HPP
#define BRAID_BOXED_HPP

#include <string>
#include <vector>

#include "braid/arrangement.hpp"
#include "braid/plane_tree.hpp"

namespace braid {

// A partition of the tree's nodes into cadet sequences. Blocks keep cadet
// order; the block list follows the maximal-cadet-sequence order.
struct Boxing {
  std::vector<std::vector<int>> boxes;
  std::size_t size() const { return boxes.size(); }
};

inline void require_arity(const ArrangementSpec& spec, const PlaneTree& tree) {
  auto arity = tree.uniform_arity();
  if (!arity)
    throw UsageError("tree does not have uniform arity");
  if (*arity < spec.max_offset())
    throw UsageError("tree arity m = " + std::to_string(*arity) +
                     " is below the arrangement's m = " + std::to_string(spec.max_offset()));
}

// S-cadet test straight from the definition: seq must chain by cadets, and
// for every i < j the partial sum of lsib over positions i+1..j must avoid
// S^-_{v_i, v_j}.
inline bool is_s_cadet_sequence(const ArrangementSpec& spec, const PlaneTree& tree,
                                const std::vector<int>& seq) {
  if (seq.empty()) throw UsageError("empty cadet sequence");
  int k = static_cast<int>(seq.size());
  for (int p = 1; p < k; ++p)
    if (tree.cadet(seq[p - 1]) != seq[p])
      throw UsageError("not a cadet sequence of the tree");
  for (int i = 0; i < k; ++i) {
    long long sum = 0;
    for (int j = i + 1; j < k; ++j) {
      sum += tree.lsib(seq[j]);
      if (spec.in_s_minus(seq[i], seq[j], sum)) return false;
    }
  }
  return true;
}

namespace detail {

// All compositions of one maximal cadet sequence into S-cadet blocks,
// encoded as split masks (bit p set = cut between positions p and p+1).
inline std::vector<std::uint64_t> valid_split_masks(const ArrangementSpec& spec,
                                                    const PlaneTree& tree,
                                                    const std::vector<int>& chain) {
  int k = static_cast<int>(chain.size());
  if (k > 60) throw GuardError("cadet sequence too long for boxing enumeration");
  std::vector<std::uint64_t> masks;
  std::uint64_t total = k == 1 ? 1 : (1ull << (k - 1));
  std::vector<int> block;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool ok = true;
    int start = 0;
    for (int p = 0; p < k && ok; ++p) {
      bool cut = p == k - 1 || (mask >> p) & 1;
      if (cut) {
        block.assign(chain.begin() + start, chain.begin() + p + 1);
        ok = is_s_cadet_sequence(spec, tree, block);
        start = p + 1;
      }
    }
    if (ok) masks.push_back(mask);
  }
  return masks;
}

inline void append_blocks(const std::vector<int>& chain, std::uint64_t mask, Boxing& out) {
  int k = static_cast<int>(chain.size());
  int start = 0;
  for (int p = 0; p < k; ++p) {
    if (p == k - 1 || ((mask >> p) & 1)) {
      out.boxes.emplace_back(chain.begin() + start, chain.begin() + p + 1);
      start = p + 1;
    }
  }
}

}  // namespace detail

// Streams every S-boxing of the tree exactly once: per maximal cadet
// sequence all valid compositions, combined by an odometer so the cartesian
// product is never materialized.
template <typename Fn>
void for_each_s_boxing(const ArrangementSpec& spec, const PlaneTree& tree, Fn&& fn) {
  require_arity(spec, tree);
  std::vector<std::vector<int>> chains = maximal_cadet_sequences(tree);
  std::vector<std::vector<std::uint64_t>> options;
  options.reserve(chains.size());
  for (const std::vector<int>& chain : chains) {
    options.push_back(detail::valid_split_masks(spec, tree, chain));
    if (options.back().empty())
      throw std::logic_error("a chain lost its all-singleton boxing");
  }
  std::vector<std::size_t> pick(chains.size(), 0);
  while (true) {
    Boxing boxing;
    for (std::size_t c = 0; c < chains.size(); ++c)
      detail::append_blocks(chains[c], options[c][pick[c]], boxing);
    fn(boxing);
    std::size_t c = 0;
    while (c < chains.size() && ++pick[c] == options[c].size()) {
      pick[c] = 0;
      ++c;
    }
    if (c == chains.size()) break;
  }
}

inline std::vector<Boxing> enumerate_s_boxings(const ArrangementSpec& spec,
                                               const PlaneTree& tree) {
  std::vector<Boxing> out;
  for_each_s_boxing(spec, tree, [&](const Boxing& b) { out.push_back(b); });
  return out;
}

// Sum of (-1)^(n - |B|) over all S-boxings B of the tree.
inline long long tree_contribution_brute(const ArrangementSpec& spec, const PlaneTree& tree) {
  long long acc = 0;
  int n = tree.node_count();
  for_each_s_boxing(spec, tree, [&](const Boxing& b) {
    acc += ((n - static_cast<int>(b.size())) % 2 == 0) ? 1 : -1;
  });
  return acc;
}

// The signed boxed-tree sum over all of T^(m)(n) with m = max_offset.
// Exponential by nature; guarded.
inline BigInt count_regions_brute(const ArrangementSpec& spec,
                                  const BigInt& guard = BigInt(100000000)) {
  int n = spec.dimension();
  int m = spec.max_offset();
  check_tree_guard(n, m, guard);
  BigInt total = 0;
  for_each_tree(n, m, [&](const PlaneTree& tree) {
    total += tree_contribution_brute(spec, tree);
  });
  return total;
}

}  // namespace braid

#endif  // BRAID_BOXED_HPP
