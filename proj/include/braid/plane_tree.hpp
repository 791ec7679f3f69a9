#ifndef BRAID_PLANE_TREE_HPP
#define BRAID_PLANE_TREE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "braid/common.hpp"

namespace braid {

// A rooted labeled plane tree. Nodes carry the labels 1..n; leaves are
// unlabeled and appear as 0 entries in a node's ordered child list. Child
// lists may have different lengths per node (the root-heavy trees of the
// bijection module use that); membership of T^(m)(n) additionally means
// every node has exactly m+1 children.
//
// lsib(v) counts ALL entries (nodes and leaves) left of v in its parent's
// list; the cadet of v is its rightmost child that is a node.
class PlaneTree {
 public:
  static constexpr int kLeaf = 0;

  PlaneTree(int root, std::vector<std::vector<int>> kids)
      : root_(root), kids_(std::move(kids)) {
    n_ = static_cast<int>(kids_.size()) - 1;
    if (n_ < 1) throw UsageError("tree needs at least one node");
    if (root_ < 1 || root_ > n_) throw UsageError("root label out of range");
    parent_.assign(n_ + 1, 0);
    slot_.assign(n_ + 1, -1);
    cadet_.assign(n_ + 1, 0);
    std::vector<char> seen(n_ + 1, 0);
    for (int v = 1; v <= n_; ++v) {
      const std::vector<int>& row = kids_[v];
      for (int p = 0; p < static_cast<int>(row.size()); ++p) {
        int c = row[p];
        if (c == kLeaf) continue;
        if (c < 1 || c > n_) throw UsageError("child label out of range");
        if (seen[c]) throw UsageError("node " + std::to_string(c) + " appears twice");
        seen[c] = 1;
        parent_[c] = v;
        slot_[c] = p;
        cadet_[v] = c;  // rightmost node child wins
      }
    }
    if (seen[root_]) throw UsageError("root cannot be someone's child");
    // Connectivity: every non-root node must be reachable from the root.
    int reached = 0;
    std::vector<int> stack = {root_};
    std::vector<char> visited(n_ + 1, 0);
    visited[root_] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++reached;
      for (int c : kids_[v])
        if (c != kLeaf) {
          if (visited[c]) throw UsageError("cycle in tree structure");
          visited[c] = 1;
          stack.push_back(c);
        }
    }
    if (reached != n_) throw UsageError("tree structure is not connected");
  }

  int node_count() const { return n_; }
  int root() const { return root_; }
  const std::vector<int>& children(int v) const { return kids_.at(v); }
  const std::vector<std::vector<int>>& all_children() const { return kids_; }

  bool is_root(int v) const { return v == root_; }
  int parent(int v) const { return parent_.at(v); }  // 0 for the root

  // Count of children of parent(v) strictly left of v (nodes and leaves).
  int lsib(int v) const {
    if (v == root_) throw UsageError("the root has no siblings");
    return slot_.at(v);
  }

  int rsib(int v) const {
    if (v == root_) throw UsageError("the root has no siblings");
    return static_cast<int>(kids_[parent_[v]].size()) - 1 - slot_[v];
  }

  std::optional<int> cadet(int v) const {
    int c = cadet_.at(v);
    return c == kLeaf ? std::nullopt : std::optional<int>(c);
  }

  // m such that every node has exactly m+1 children, if uniform.
  std::optional<int> uniform_arity() const {
    std::size_t len = kids_[root_].size();
    for (int v = 1; v <= n_; ++v)
      if (kids_[v].size() != len) return std::nullopt;
    return static_cast<int>(len) - 1;
  }

  bool operator==(const PlaneTree& other) const {
    return root_ == other.root_ && kids_ == other.kids_;
  }

 private:
  int n_;
  int root_;
  std::vector<std::vector<int>> kids_;
  std::vector<int> parent_;
  std::vector<int> slot_;
  std::vector<int> cadet_;
};

// The maximal cadet sequence through v, completed in both directions.
inline std::vector<int> chain_through(const PlaneTree& tree, int v) {
  int head = v;
  while (true) {
    int p = tree.parent(head);
    if (p == 0 || tree.cadet(p) != head) break;
    head = p;
  }
  std::vector<int> chain = {head};
  while (auto c = tree.cadet(chain.back())) chain.push_back(*c);
  return chain;
}

// The unique partition of the nodes into maximal cadet sequences, listed in
// order of first appearance of each sequence head in a preorder walk.
inline std::vector<std::vector<int>> maximal_cadet_sequences(const PlaneTree& tree) {
  std::vector<std::vector<int>> out;
  std::vector<char> placed(tree.node_count() + 1, 0);
  std::vector<int> stack = {tree.root()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (!placed[v]) {
      std::vector<int> chain = chain_through(tree, v);
      for (int u : chain) placed[u] = 1;
      out.push_back(std::move(chain));
    }
    const std::vector<int>& row = tree.children(v);
    for (auto it = row.rbegin(); it != row.rend(); ++it)
      if (*it != PlaneTree::kLeaf) stack.push_back(*it);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical text format: LABEL '(' child* ')' with '*' for a leaf, children
// concatenated left to right. Example: 1(2(*)) is the 2-chain with m = 0.
// ---------------------------------------------------------------------------

inline void encode_tree_rec(const PlaneTree& tree, int v, std::string& out) {
  out += std::to_string(v);
  out += '(';
  for (int c : tree.children(v)) {
    if (c == PlaneTree::kLeaf)
      out += '*';
    else
      encode_tree_rec(tree, c, out);
  }
  out += ')';
}

inline std::string encode_tree(const PlaneTree& tree) {
  std::string out;
  encode_tree_rec(tree, tree.root(), out);
  return out;
}

inline PlaneTree decode_tree(const std::string& text) {
  std::size_t pos = 0;
  std::vector<std::pair<int, std::vector<int>>> nodes;  // (label, children)
  std::function<int()> parse_node = [&]() -> int {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw UsageError("tree text: expected a node label at offset " +
                                       std::to_string(pos));
    if (text[start] == '0') throw UsageError("tree text: labels are 1-based without zeros");
    if (pos - start > 7) throw UsageError("tree text: label out of range");
    int label = std::stoi(text.substr(start, pos - start));
    if (pos >= text.size() || text[pos] != '(')
      throw UsageError("tree text: expected '(' after label");
    ++pos;
    std::vector<int> kids;
    while (pos < text.size() && text[pos] != ')') {
      if (text[pos] == '*') {
        kids.push_back(PlaneTree::kLeaf);
        ++pos;
      } else {
        kids.push_back(parse_node());
      }
    }
    if (pos >= text.size()) throw UsageError("tree text: missing ')'");
    ++pos;
    if (kids.empty()) throw UsageError("tree text: a node needs at least one child");
    nodes.push_back({label, kids});
    return label;
  };
  int root = parse_node();
  if (pos != text.size()) throw UsageError("tree text: trailing characters");
  int n = static_cast<int>(nodes.size());
  std::vector<std::vector<int>> kids(n + 1);
  for (auto& [label, row] : nodes) {
    if (label < 1 || label > n)
      throw UsageError("tree text: labels must be a permutation of 1..n");
    if (!kids[label].empty()) throw UsageError("tree text: repeated label");
    kids[label] = std::move(row);
  }
  for (int v = 1; v <= n; ++v)
    if (kids[v].empty()) throw UsageError("tree text: labels must be a permutation of 1..n");
  return PlaneTree(root, std::move(kids));
}

// ---------------------------------------------------------------------------
// Enumeration of T^(m)(n): every element exactly once, in a canonical order.
// Shapes (unlabeled full (m+1)-ary trees with n internal vertices) are
// generated by a preorder backtracking walk trying "node" before "leaf";
// for each shape the labels run through all permutations in lexicographic
// order, assigned to internal vertices in preorder. Two runs yield the same
// stream; sub-ranges of shapes can be enumerated independently.
// ---------------------------------------------------------------------------

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

// Number of full (m+1)-ary tree shapes with n internal vertices.
inline BigInt fuss_catalan_count(int n, int m) {
  if (n == 0) return 1;
  return binomial(static_cast<long long>(m + 1) * n, n) / (static_cast<long long>(m) * n + 1);
}

// |T^(m)(n)| = n! * fuss_catalan_count(n, m).
inline BigInt tree_family_size(int n, int m) {
  return factorial(n) * fuss_catalan_count(n, m);
}

namespace detail {

// Shapes as preorder node/leaf strings (1 = node). Materialized; shape counts
// stay small for the sizes any caller survives.
inline std::vector<std::vector<std::uint8_t>> enumerate_shapes(int n, int m) {
  std::vector<std::vector<std::uint8_t>> shapes;
  std::vector<std::uint8_t> current;
  std::function<void(int, int)> rec = [&](int open_slots, int nodes_left) {
    if (open_slots == 0) {
      if (nodes_left == 0) shapes.push_back(current);
      return;
    }
    if (nodes_left > 0) {
      current.push_back(1);
      rec(open_slots - 1 + m + 1, nodes_left - 1);
      current.pop_back();
    }
    // A leaf is viable unless it would close the last open slot with
    // nodes still unplaced.
    if (nodes_left == 0 || open_slots >= 2) {
      current.push_back(0);
      rec(open_slots - 1, nodes_left);
      current.pop_back();
    }
  };
  rec(1, n);
  return shapes;
}

inline PlaneTree tree_from_shape(const std::vector<std::uint8_t>& shape, int m,
                                 const std::vector<int>& labels) {
  int n = static_cast<int>(labels.size());
  std::vector<std::vector<int>> kids(n + 1);
  std::size_t pos = 0;
  int next_label = 0;
  std::function<int()> build = [&]() -> int {
    int label = labels[next_label++];
    ++pos;
    kids[label].resize(m + 1, PlaneTree::kLeaf);
    for (int c = 0; c <= m; ++c) {
      if (shape[pos] == 1) {
        kids[label][c] = build();
      } else {
        ++pos;
      }
    }
    return label;
  };
  int root = build();
  return PlaneTree(root, std::move(kids));
}

}  // namespace detail

// Caller-pulled stream over T^(m)(n), optionally restricted to a sub-range
// of shape indices so independent workers can cover disjoint pieces.
class TreeEnumerator {
 public:
  TreeEnumerator(int n, int m)
      : TreeEnumerator(n, m, 0, -1) {}

  TreeEnumerator(int n, int m, std::size_t shape_begin, std::ptrdiff_t shape_end)
      : n_(n), m_(m), shapes_(detail::enumerate_shapes(n, m)) {
    if (n_ < 0 || m_ < 0) throw UsageError("enumeration needs n >= 0 and m >= 0");
    shape_index_ = shape_begin;
    shape_end_ = shape_end < 0 ? shapes_.size()
                               : std::min(static_cast<std::size_t>(shape_end), shapes_.size());
    labels_.resize(n_);
    std::iota(labels_.begin(), labels_.end(), 1);
    fresh_shape_ = true;
  }

  std::size_t shape_count() const { return shapes_.size(); }

  std::optional<PlaneTree> next() {
    if (n_ == 0) return std::nullopt;
    while (shape_index_ < shape_end_) {
      if (!fresh_shape_) {
        if (!std::next_permutation(labels_.begin(), labels_.end())) {
          ++shape_index_;
          fresh_shape_ = true;
          continue;
        }
      } else {
        fresh_shape_ = false;
      }
      return detail::tree_from_shape(shapes_[shape_index_], m_, labels_);
    }
    return std::nullopt;
  }

 private:
  int n_, m_;
  std::vector<std::vector<std::uint8_t>> shapes_;
  std::size_t shape_index_, shape_end_;
  std::vector<int> labels_;
  bool fresh_shape_;
};

template <typename Fn>
void for_each_tree(int n, int m, Fn&& fn) {
  TreeEnumerator stream(n, m);
  while (auto tree = stream.next()) fn(*tree);
}

// Refuses enumeration-backed work whose tree count exceeds the guard.
inline void check_tree_guard(int n, int m, const BigInt& guard) {
  BigInt size = tree_family_size(n, m);
  if (size > guard)
    throw GuardError("|T^(" + std::to_string(m) + ")(" + std::to_string(n) + ")| = " +
                     size.str() + " exceeds the size guard " + guard.str());
}

}  // namespace braid

#endif  // BRAID_PLANE_TREE_HPP
