#ifndef BRAID_ISH_HPP
#define BRAID_ISH_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braid/arrangement.hpp"
#include "braid/contribution.hpp"
#include "braid/plane_tree.hpp"

namespace braid {

// The quadruple classifying a nonzero-contribution tree of an almost
// transitive arrangement around the node 1.
struct IshClassification {
  int e_l;  // lower inefficiency
  int l_l;  // lower 1-length
  int e_u;  // upper inefficiency
  int l_u;  // upper 1-length
  auto operator<=>(const IshClassification&) const = default;
};

inline std::string to_string(const IshClassification& c) {
  return "(" + std::to_string(c.e_l) + "," + std::to_string(c.l_l) + "," +
         std::to_string(c.e_u) + "," + std::to_string(c.l_u) + ")";
}

// Nodes w that are left siblings of 1 with lsib(w) not in S^-_{w,1},
// left to right.
inline std::vector<int> lower_inefficient_nodes(const ArrangementSpec& spec,
                                                const PlaneTree& tree) {
  std::vector<int> out;
  if (tree.is_root(1)) return out;
  const std::vector<int>& row = tree.children(tree.parent(1));
  for (int p = 0; p < tree.lsib(1); ++p) {
    int w = row[p];
    if (w != PlaneTree::kLeaf && !spec.in_s_minus(w, 1, p)) out.push_back(w);
  }
  return out;
}

// Node children w of 1, other than its cadet, with lsib(w) not in S^-_{1,w},
// left to right.
inline std::vector<int> upper_inefficient_nodes(const ArrangementSpec& spec,
                                                const PlaneTree& tree) {
  std::vector<int> out;
  auto cadet = tree.cadet(1);
  const std::vector<int>& row = tree.children(1);
  for (int p = 0; p < static_cast<int>(row.size()); ++p) {
    int w = row[p];
    if (w == PlaneTree::kLeaf || (cadet && *cadet == w)) continue;
    if (!spec.in_s_minus(1, w, p)) out.push_back(w);
  }
  return out;
}

// Absent exactly when the tree's contribution is 0; otherwise the 1-lengths
// come from the unique maximal S-cadet sequence containing the node 1 and
// the inefficiencies from the definitions above. The sign consistency
// contribution = (-1)^(l_l + l_u) is enforced.
inline std::optional<IshClassification> classify_tree(const ArrangementSpec& spec,
                                                      const PlaneTree& tree) {
  if (!is_almost_transitive(spec))
    throw UsageError("classification requires an almost transitive arrangement");
  int contribution = tree_contribution_fast(spec, tree);
  if (contribution == 0) return std::nullopt;
  std::vector<int> chain = chain_through(tree, 1);
  int pos1 = static_cast<int>(std::find(chain.begin(), chain.end(), 1) - chain.begin());
  std::vector<Run> runs = maximal_s_cadet_runs(spec, tree, chain);
  const Run* home = nullptr;
  for (const Run& r : runs) {
    if (r.begin <= pos1 && pos1 <= r.end) {
      if (home != nullptr)
        throw std::logic_error("nonzero tree with two maximal S-cadet sequences through 1");
      home = &r;
    }
  }
  if (home == nullptr) throw std::logic_error("node 1 not covered by any maximal run");
  IshClassification cls;
  cls.l_l = pos1 - home->begin;
  cls.l_u = home->end - pos1;
  cls.e_l = static_cast<int>(lower_inefficient_nodes(spec, tree).size());
  cls.e_u = static_cast<int>(upper_inefficient_nodes(spec, tree).size());
  int expected = ((cls.l_l + cls.l_u) % 2 == 0) ? 1 : -1;
  if (expected != contribution)
    throw std::logic_error("classification sign disagrees with the computed contribution");
  return cls;
}

namespace detail {

inline std::vector<int> normalize_row(std::vector<int> row, int width, const char* who) {
  while (!row.empty() && row.back() == PlaneTree::kLeaf) row.pop_back();
  if (static_cast<int>(row.size()) > width)
    throw std::logic_error(std::string(who) + ": row exceeds arity after surgery");
  row.resize(width, PlaneTree::kLeaf);
  return row;
}

struct ChainAroundOne {
  std::vector<int> chain;
  int pos1;
};

inline ChainAroundOne chain_around_one(const PlaneTree& tree) {
  ChainAroundOne c;
  c.chain = chain_through(tree, 1);
  c.pos1 = static_cast<int>(std::find(c.chain.begin(), c.chain.end(), 1) - c.chain.begin());
  return c;
}

inline void require_only_leaves(const std::vector<int>& row, int from, const char* who) {
  for (int p = from; p < static_cast<int>(row.size()); ++p)
    if (row[p] != PlaneTree::kLeaf)
      throw UsageError(std::string(who) + ": unexpected node where leaves are required");
}

}  // namespace detail

// phi_l: moves the chain predecessor of 1 out of 1's maximal S-cadet
// sequence, turning it into a lower inefficient node. Decrements the lower
// 1-length, strictly increases the lower inefficiency.
inline PlaneTree phi_l(const ArrangementSpec& spec, const PlaneTree& tree) {
  auto cls = classify_tree(spec, tree);
  if (!cls) throw UsageError("phi_l: tree has zero contribution");
  if (cls->l_l == 0) throw UsageError("phi_l: lower 1-length is zero");
  int arity = *tree.uniform_arity();
  auto [chain, pos1] = detail::chain_around_one(tree);
  if (pos1 < 2) throw std::logic_error("phi_l: chain predecessor structure violated");
  int a = chain[pos1 - 1];
  int b = chain[pos1 - 2];

  std::vector<std::vector<int>> kids = tree.all_children();
  int sa = tree.lsib(a);
  int s1 = tree.lsib(1);
  detail::require_only_leaves(kids[b], sa + 1, "phi_l");
  detail::require_only_leaves(kids[a], s1 + 1, "phi_l");

  std::vector<int> moved(kids[a].begin(), kids[a].begin() + s1);  // left siblings of 1
  std::vector<int> mid(kids[b].begin() + 1, kids[b].begin() + sa);
  int c0 = kids[b][0];

  std::vector<int> row_b = moved;
  row_b.push_back(a);  // the relabeled fresh node; keeps a's label
  row_b.insert(row_b.end(), mid.begin(), mid.end());
  row_b.push_back(1);
  kids[b] = detail::normalize_row(std::move(row_b), arity + 1, "phi_l");
  kids[a] = detail::normalize_row({c0}, arity + 1, "phi_l");
  return PlaneTree(tree.root(), std::move(kids));
}

// psi_l^e: inverse direction; reinstates the (e+1)-th lower inefficient node
// (from the left) into 1's maximal S-cadet sequence.
inline PlaneTree psi_l(const ArrangementSpec& spec, const PlaneTree& tree, int e) {
  auto cls = classify_tree(spec, tree);
  if (!cls) throw UsageError("psi_l: tree has zero contribution");
  std::vector<int> lows = lower_inefficient_nodes(spec, tree);
  if (e < 0 || e >= static_cast<int>(lows.size()))
    throw UsageError("psi_l: fewer than e+1 lower inefficient nodes");
  int arity = *tree.uniform_arity();
  int w = lows[e];
  int p = tree.parent(1);

  std::vector<std::vector<int>> kids = tree.all_children();
  int sw = tree.lsib(w);
  int s1 = tree.lsib(1);
  detail::require_only_leaves(kids[p], s1 + 1, "psi_l");
  detail::require_only_leaves(kids[w], 1, "psi_l");

  std::vector<int> moved(kids[p].begin(), kids[p].begin() + sw);  // left siblings of w
  std::vector<int> mid(kids[p].begin() + sw + 1, kids[p].begin() + s1);
  int c0 = kids[w][0];

  std::vector<int> row_p = {c0};
  row_p.insert(row_p.end(), mid.begin(), mid.end());
  row_p.push_back(w);
  kids[p] = detail::normalize_row(std::move(row_p), arity + 1, "psi_l");
  std::vector<int> row_w = moved;
  row_w.push_back(1);
  kids[w] = detail::normalize_row(std::move(row_w), arity + 1, "psi_l");
  return PlaneTree(tree.root(), std::move(kids));
}

// phi_u: moves the cadet of 1 out of 1's maximal S-cadet sequence, turning
// it into an upper inefficient node; its former children above the leftmost
// slide up to 1.
inline PlaneTree phi_u(const ArrangementSpec& spec, const PlaneTree& tree) {
  auto cls = classify_tree(spec, tree);
  if (!cls) throw UsageError("phi_u: tree has zero contribution");
  if (cls->l_u == 0) throw UsageError("phi_u: upper 1-length is zero");
  int arity = *tree.uniform_arity();
  auto [chain, pos1] = detail::chain_around_one(tree);
  if (pos1 + 2 >= static_cast<int>(chain.size()))
    throw std::logic_error("phi_u: chain successor structure violated");
  int u1 = chain[pos1 + 1];
  int u2 = chain[pos1 + 2];

  std::vector<std::vector<int>> kids = tree.all_children();
  int q1 = tree.lsib(u1);
  int q2 = tree.lsib(u2);
  detail::require_only_leaves(kids[1], q1 + 1, "phi_u");
  detail::require_only_leaves(kids[u1], q2 + 1, "phi_u");

  std::vector<int> row_1(kids[1].begin(), kids[1].begin() + q1 + 1);
  row_1.insert(row_1.end(), kids[u1].begin() + 1, kids[u1].begin() + q2);
  row_1.push_back(u2);
  std::vector<int> row_u1 = {kids[u1][0]};
  kids[1] = detail::normalize_row(std::move(row_1), arity + 1, "phi_u");
  kids[u1] = detail::normalize_row(std::move(row_u1), arity + 1, "phi_u");
  return PlaneTree(tree.root(), std::move(kids));
}

// psi_u^e: inverse direction; reinstates the (e+1)-th upper inefficient node
// counted from the left (see ledger: the construction text says "from the
// right" but its own lemma and the involution identities force the mirror
// of psi_l).
inline PlaneTree psi_u(const ArrangementSpec& spec, const PlaneTree& tree, int e) {
  auto cls = classify_tree(spec, tree);
  if (!cls) throw UsageError("psi_u: tree has zero contribution");
  std::vector<int> ups = upper_inefficient_nodes(spec, tree);
  if (e < 0 || e >= static_cast<int>(ups.size()))
    throw UsageError("psi_u: fewer than e+1 upper inefficient nodes");
  int arity = *tree.uniform_arity();
  int w = ups[e];
  auto cadet = tree.cadet(1);
  if (!cadet) throw std::logic_error("psi_u: node 1 lost its cadet");
  int u1 = *cadet;

  std::vector<std::vector<int>> kids = tree.all_children();
  int qw = tree.lsib(w);
  int q1 = tree.lsib(u1);
  detail::require_only_leaves(kids[1], q1 + 1, "psi_u");
  detail::require_only_leaves(kids[w], 1, "psi_u");

  std::vector<int> row_w = {kids[w][0]};
  row_w.insert(row_w.end(), kids[1].begin() + qw + 1, kids[1].begin() + q1);
  row_w.push_back(u1);
  std::vector<int> row_1(kids[1].begin(), kids[1].begin() + qw + 1);
  kids[w] = detail::normalize_row(std::move(row_w), arity + 1, "psi_u");
  kids[1] = detail::normalize_row(std::move(row_1), arity + 1, "psi_u");
  return PlaneTree(tree.root(), std::move(kids));
}

// The sign-reversing involution on classes with e_l + l_l != 0.
inline PlaneTree omega_l(const ArrangementSpec& spec, const PlaneTree& tree) {
  auto cls = classify_tree(spec, tree);
  if (!cls) throw UsageError("omega_l: tree has zero contribution");
  if (cls->e_l + cls->l_l == 0) throw UsageError("omega_l: outside its domain");
  return cls->e_l == 0 ? phi_l(spec, tree) : psi_l(spec, tree, 0);
}

// The sign-reversing involution on classes with e_l = l_l = 0 and
// e_u + l_u != 0.
inline PlaneTree omega_u(const ArrangementSpec& spec, const PlaneTree& tree) {
  auto cls = classify_tree(spec, tree);
  if (!cls) throw UsageError("omega_u: tree has zero contribution");
  if (cls->e_l != 0 || cls->l_l != 0 || cls->e_u + cls->l_u == 0)
    throw UsageError("omega_u: outside its domain");
  return cls->e_u == 0 ? phi_u(spec, tree) : psi_u(spec, tree, 0);
}

// ---------------------------------------------------------------------------
// Class enumeration and the involution-reduced count.
// ---------------------------------------------------------------------------

template <typename Fn>
void enumerate_class(const ArrangementSpec& spec, const IshClassification& cls, Fn&& fn,
                     const BigInt& guard = BigInt(100000000)) {
  if (!is_ish_type(spec)) throw UsageError("class enumeration requires an Ish-type arrangement");
  int n = spec.dimension();
  int m = spec.max_offset();
  check_tree_guard(n, m, guard);
  for_each_tree(n, m, [&](const PlaneTree& tree) {
    auto c = classify_tree(spec, tree);
    if (c && *c == cls) fn(tree);
  });
}

struct ClassHistogram {
  BigInt total_trees = 0;
  BigInt nonzero_trees = 0;
  std::map<IshClassification, BigInt> classes;
};

inline ClassHistogram class_histogram(const ArrangementSpec& spec,
                                      const BigInt& guard = BigInt(100000000)) {
  if (!is_ish_type(spec)) throw UsageError("class histogram requires an Ish-type arrangement");
  int n = spec.dimension();
  int m = spec.max_offset();
  check_tree_guard(n, m, guard);
  ClassHistogram h;
  for_each_tree(n, m, [&](const PlaneTree& tree) {
    ++h.total_trees;
    auto c = classify_tree(spec, tree);
    if (c) {
      ++h.nonzero_trees;
      ++h.classes[*c];
    }
  });
  return h;
}

// |S(0,0,0,0)|: the region count after cancelling everything the omega
// involutions pair up.
inline BigInt count_regions_involution(const ArrangementSpec& spec,
                                       const BigInt& guard = BigInt(100000000)) {
  if (!is_ish_type(spec))
    throw UsageError("method involution requires an Ish-type arrangement");
  BigInt count = 0;
  enumerate_class(spec, {0, 0, 0, 0}, [&](const PlaneTree&) { ++count; }, guard);
  return count;
}

// Closed product formula for nested Ish arrangements.
inline BigInt count_regions_formula(const ArrangementSpec& spec) {
  if (!is_nested_ish(spec))
    throw UsageError("method formula requires a nested Ish arrangement");
  int n = spec.dimension();
  BigInt product = 1;
  for (int k = 2; k <= n; ++k)
    product *= n + 1 + static_cast<int>(spec.offsets_of(1, k).size()) - k;
  return product;
}

// ---------------------------------------------------------------------------
// Broom trees: root 1 with 2m+2 ordered children, every other node with
// exactly one child, and every node k != 1 satisfying lsib(k) in S^-_{1,k}
// or rsib(k) in S^-_{k,1}. Their count equals the closed formula; they
// biject with S(0,0,0,0) and with the code sequences below.
// ---------------------------------------------------------------------------

inline bool is_broom_tree(const ArrangementSpec& spec, const PlaneTree& tree) {
  if (!is_nested_ish(spec)) throw UsageError("broom trees need a nested Ish arrangement");
  int n = tree.node_count();
  if (n != spec.dimension()) return false;
  int m = spec.max_offset();
  if (tree.root() != 1) return false;
  if (static_cast<int>(tree.children(1).size()) != 2 * m + 2) return false;
  for (int v = 2; v <= n; ++v)
    if (tree.children(v).size() != 1) return false;
  for (int v = 2; v <= n; ++v) {
    if (tree.parent(v) != 1) continue;  // single-child nodes have lsib = rsib = 0,
                                        // and 0 is in S^-_{1,v} for Ish-type
    if (!spec.in_s_minus(1, v, tree.lsib(v)) && !spec.in_s_minus(v, 1, tree.rsib(v)))
      return false;
  }
  for (int v = 2; v <= n; ++v) {
    if (tree.parent(v) == 1) continue;
    if (!spec.in_s_minus(1, v, 0) && !spec.in_s_minus(v, 1, 0)) return false;
  }
  return true;
}

// Direct enumeration: parent maps {2..n} -> {1..n} forming chains hanging
// off 1 (in-degree at most one away from the root, no cycles), then
// injective legal slot assignments for 1's children. Kept independent of
// the sequence decoding on purpose.
template <typename Fn>
void enumerate_broom_trees(const ArrangementSpec& spec, Fn&& fn) {
  if (!is_nested_ish(spec)) throw UsageError("broom trees need a nested Ish arrangement");
  int n = spec.dimension();
  int m = spec.max_offset();
  int width = 2 * m + 2;

  std::vector<int> parent(n + 1, 0);
  std::vector<char> has_child(n + 1, 0);
  std::vector<int> slot_of(n + 1, -1);
  std::vector<char> slot_used(width, 0);
  std::vector<int> top;  // children of 1

  auto emit = [&]() {
    std::vector<std::vector<int>> kids(n + 1);
    kids[1].assign(width, PlaneTree::kLeaf);
    for (int v = 2; v <= n; ++v) kids[v] = {PlaneTree::kLeaf};
    for (int v = 2; v <= n; ++v) {
      if (parent[v] == 1)
        kids[1][slot_of[v]] = v;
      else
        kids[parent[v]][0] = v;
    }
    fn(PlaneTree(1, std::move(kids)));
  };

  std::function<void(std::size_t)> place = [&](std::size_t idx) {
    if (idx == top.size()) {
      emit();
      return;
    }
    int v = top[idx];
    for (int s = 0; s < width; ++s) {
      if (slot_used[s]) continue;
      if (!spec.in_s_minus(1, v, s) && !spec.in_s_minus(v, 1, width - 1 - s)) continue;
      slot_used[s] = 1;
      slot_of[v] = s;
      place(idx + 1);
      slot_used[s] = 0;
    }
  };

  std::function<void(int)> choose = [&](int k) {
    if (k > n) {
      for (int v = 2; v <= n; ++v) {
        int cur = v, steps = 0;
        while (cur != 1 && steps <= n) {
          cur = parent[cur];
          ++steps;
        }
        if (cur != 1) return;  // a cycle among non-root nodes
      }
      top.clear();
      for (int v = 2; v <= n; ++v)
        if (parent[v] == 1) top.push_back(v);
      place(0);
      return;
    }
    for (int p = 1; p <= n; ++p) {
      if (p == k) continue;
      if (p != 1 && has_child[p]) continue;
      parent[k] = p;
      if (p != 1) has_child[p] = 1;
      choose(k + 1);
      parent[k] = 0;
      if (p != 1) has_child[p] = 0;
    }
  };

  if (n == 1) {
    emit();
    return;
  }
  choose(2);
}

inline BigInt count_broom_trees(const ArrangementSpec& spec) {
  BigInt count = 0;
  enumerate_broom_trees(spec, [&](const PlaneTree&) { ++count; });
  return count;
}

inline BigInt count_regions_bijection(const ArrangementSpec& spec) {
  return count_broom_trees(spec);
}

// ---------------------------------------------------------------------------
// Code sequences: entry k (k = 2..n) is one of
//   ( 0, i) with k < i <= n        "k sits on the edge above node i"
//   ( 1, s) with s in S^-_{1,k}    "k is a child of 1 with s left siblings"
//   (-1, t) with t in S^-_{k,1}    "k is a child of 1 with t right siblings"
// ---------------------------------------------------------------------------

struct IshSequenceEntry {
  int tag;    // 0, 1 or -1
  int value;
  bool operator==(const IshSequenceEntry&) const = default;
};

using IshSequence = std::vector<IshSequenceEntry>;

inline void validate_sequence(const ArrangementSpec& spec, const IshSequence& seq) {
  int n = spec.dimension();
  if (static_cast<int>(seq.size()) != n - 1)
    throw UsageError("code sequence needs n-1 entries");
  for (int k = 2; k <= n; ++k) {
    const IshSequenceEntry& a = seq[k - 2];
    bool ok = false;
    if (a.tag == 0)
      ok = a.value > k && a.value <= n;
    else if (a.tag == 1)
      ok = spec.in_s_minus(1, k, a.value);
    else if (a.tag == -1)
      ok = spec.in_s_minus(k, 1, a.value);
    if (!ok)
      throw UsageError("sequence entry for k=" + std::to_string(k) + " outside its alphabet");
  }
}

inline IshSequence encode_sequence(const ArrangementSpec& spec, const PlaneTree& tree) {
  if (!is_broom_tree(spec, tree)) throw UsageError("encode_sequence: tree is not a broom tree");
  int n = tree.node_count();
  int m = spec.max_offset();
  std::vector<std::vector<int>> kids = tree.all_children();
  std::vector<int> parent(n + 1, 0);
  std::vector<int> slot(n + 1, -1);
  for (int v = 1; v <= n; ++v)
    for (int p = 0; p < static_cast<int>(kids[v].size()); ++p)
      if (kids[v][p] != PlaneTree::kLeaf) {
        parent[kids[v][p]] = v;
        slot[kids[v][p]] = p;
      }
  IshSequence seq;
  for (int k = 2; k <= n; ++k) {
    int par = parent[k];
    IshSequenceEntry entry;
    if (par != 1) {
      entry = {0, par};
    } else {
      int ls = slot[k];
      int rs = 2 * m + 1 - ls;
      if (rs > m)
        entry = {1, ls};
      else
        entry = {-1, rs};
    }
    seq.push_back(entry);
    // Extract k: its single child takes its place.
    int c = kids[k][0];
    kids[par][slot[k]] = c;
    if (c != PlaneTree::kLeaf) {
      parent[c] = par;
      slot[c] = slot[k];
    }
  }
  validate_sequence(spec, seq);
  return seq;
}

inline PlaneTree decode_sequence(const ArrangementSpec& spec, const IshSequence& seq) {
  if (!is_nested_ish(spec)) throw UsageError("decode_sequence needs a nested Ish arrangement");
  validate_sequence(spec, seq);
  int n = spec.dimension();
  int m = spec.max_offset();
  int width = 2 * m + 2;
  std::vector<std::vector<int>> kids(n + 1);
  kids[1].assign(width, PlaneTree::kLeaf);
  for (int v = 2; v <= n; ++v) kids[v] = {PlaneTree::kLeaf};
  std::vector<int> parent(n + 1, 0);
  std::vector<int> slot(n + 1, -1);
  auto insert_at = [&](int par, int s, int k) {
    int c = kids[par][s];
    kids[par][s] = k;
    kids[k][0] = c;
    if (c != PlaneTree::kLeaf) {
      parent[c] = k;
      slot[c] = 0;
    }
    parent[k] = par;
    slot[k] = s;
  };
  for (int k = n; k >= 2; --k) {
    const IshSequenceEntry& a = seq[k - 2];
    if (a.tag == 0) {
      insert_at(a.value, 0, k);
    } else if (a.tag == 1) {
      insert_at(1, a.value, k);
    } else {
      insert_at(1, width - 1 - a.value, k);
    }
  }
  PlaneTree tree(1, std::move(kids));
  if (!is_broom_tree(spec, tree))
    throw std::logic_error("decode_sequence produced a non-broom tree");
  return tree;
}

// ---------------------------------------------------------------------------
// The bijection between S(0,0,0,0) and the broom trees: hoist 1 to the root,
// mirroring its former parent's child list into the new right half.
// ---------------------------------------------------------------------------

inline PlaneTree bijection_f(const ArrangementSpec& spec, const PlaneTree& tree) {
  if (!is_nested_ish(spec)) throw UsageError("bijection f needs a nested Ish arrangement");
  auto cls = classify_tree(spec, tree);
  if (!cls || *cls != IshClassification{0, 0, 0, 0})
    throw UsageError("bijection f: tree is not in S(0,0,0,0)");
  int m = spec.max_offset();
  if (*tree.uniform_arity() != m)
    throw UsageError("bijection f: tree arity does not match the arrangement");
  int n = tree.node_count();
  std::vector<std::vector<int>> kids(n + 1);
  auto chain_only = [&](int v) {
    auto c = tree.cadet(v);
    kids[v] = {c ? *c : PlaneTree::kLeaf};
  };
  if (tree.root() == 1) {
    kids[1] = tree.children(1);
    kids[1].resize(2 * m + 2, PlaneTree::kLeaf);
    for (int v = 2; v <= n; ++v) kids[v] = {tree.children(v)[0]};
    return PlaneTree(1, std::move(kids));
  }
  std::vector<int> ancestors;  // v_k = parent(1) first, root last
  for (int v = tree.parent(1); v != 0; v = tree.parent(v)) ancestors.push_back(v);
  int vk = ancestors.front();
  kids[1] = tree.children(1);
  const std::vector<int>& row_vk = tree.children(vk);
  for (int p = static_cast<int>(row_vk.size()) - 1; p >= 0; --p)
    kids[1].push_back(row_vk[p] == 1 ? vk : row_vk[p]);
  for (std::size_t i = 0; i + 1 < ancestors.size(); ++i) kids[ancestors[i]] = {ancestors[i + 1]};
  kids[ancestors.back()] = {PlaneTree::kLeaf};
  for (int v = 2; v <= n; ++v)
    if (kids[v].empty()) chain_only(v);
  PlaneTree out(1, std::move(kids));
  if (!is_broom_tree(spec, out))
    throw std::logic_error("bijection f produced a non-broom tree");
  return out;
}

inline PlaneTree bijection_g(const ArrangementSpec& spec, const PlaneTree& tree) {
  if (!is_broom_tree(spec, tree)) throw UsageError("bijection g: tree is not a broom tree");
  int m = spec.max_offset();
  int n = tree.node_count();
  const std::vector<int>& row1 = tree.children(1);
  std::vector<int> left(row1.begin(), row1.begin() + m + 1);
  std::vector<int> right(row1.begin() + m + 1, row1.end());

  std::vector<std::vector<int>> kids(n + 1);
  auto pad1 = [&](int v, int entry) {
    kids[v].assign(m + 1, PlaneTree::kLeaf);
    kids[v][0] = entry;
  };
  int sk = 0;
  for (int e : right)
    if (e != PlaneTree::kLeaf) {
      sk = e;
      break;
    }
  if (sk == 0) {
    kids[1] = left;
    for (int v = 2; v <= n; ++v) pad1(v, tree.children(v)[0]);
    return PlaneTree(1, std::move(kids));
  }
  // Chain descending from sk becomes the new trunk, inverted.
  std::vector<int> trunk;
  for (int v = tree.children(sk)[0]; v != PlaneTree::kLeaf; v = tree.children(v)[0])
    trunk.push_back(v);
  int new_root = trunk.empty() ? sk : trunk.back();
  for (std::size_t i = trunk.size(); i-- > 1;) pad1(trunk[i], trunk[i - 1]);
  if (!trunk.empty()) pad1(trunk[0], sk);
  // sk's children: the mirrored right half with sk's own position holding 1.
  std::vector<int> row_sk(right.rbegin(), right.rend());
  for (int& e : row_sk)
    if (e == sk) e = 1;
  kids[sk] = row_sk;
  kids[1] = left;
  for (int v = 2; v <= n; ++v)
    if (kids[v].empty()) pad1(v, tree.children(v)[0]);
  PlaneTree out(new_root, std::move(kids));
  auto cls = classify_tree(spec, out);
  if (!cls || *cls != IshClassification{0, 0, 0, 0})
    throw std::logic_error("bijection g left S(0,0,0,0)");
  return out;
}

}  // namespace braid

#endif  // BRAID_ISH_HPP
