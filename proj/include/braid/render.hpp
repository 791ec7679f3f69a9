#ifndef BRAID_RENDER_HPP
#define BRAID_RENDER_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "braid/arrangement.hpp"
#include "braid/contribution.hpp"
#include "braid/ish.hpp"
#include "braid/plane_tree.hpp"

namespace braid {

enum class RenderWhat { kBoxes, kConnected, kClassification };

inline RenderWhat parse_render_what(const std::string& text) {
  if (text == "boxes") return RenderWhat::kBoxes;
  if (text == "connected") return RenderWhat::kConnected;
  if (text == "classification") return RenderWhat::kClassification;
  throw UsageError("render target must be boxes, connected or classification");
}

// DOT drawing of the tree: clusters for the maximal S-cadet sequences (a
// node shared by two boxes is drawn double-bordered and assigned to the
// earlier cluster), node fill colored per S-connected component, and the
// classification quadruple as graph label when requested.
inline std::string to_dot(const ArrangementSpec& spec, const PlaneTree& tree, RenderWhat what) {
  static const char* kPalette[] = {"#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f",
                                   "#cab2d6", "#ffff99", "#1f78b4", "#33a02c"};
  int n = tree.node_count();
  std::map<int, int> box_of;        // node -> first box id
  std::map<int, int> box_overlap;   // node -> number of boxes containing it
  std::map<int, int> component_of;  // node -> component id
  int box_id = 0, comp_id = 0;
  std::vector<std::vector<int>> clusters;  // node labels per box
  for (const std::vector<int>& chain : maximal_cadet_sequences(tree)) {
    for (const ConnectedContext& ctx : s_connected_components(spec, tree, chain)) {
      for (int v : ctx.nodes) component_of[v] = comp_id;
      for (const Run& r : ctx.runs) {
        std::vector<int> members(ctx.nodes.begin() + r.begin, ctx.nodes.begin() + r.end + 1);
        for (int v : members) {
          ++box_overlap[v];
          if (!box_of.count(v)) box_of[v] = box_id;
        }
        clusters.push_back(std::move(members));
        ++box_id;
      }
      ++comp_id;
    }
  }

  std::ostringstream out;
  out << "digraph tree {\n";
  out << "  rankdir=BT;\n";  // roots drawn at the bottom
  out << "  node [shape=circle style=filled fillcolor=white];\n";
  if (what == RenderWhat::kClassification) {
    auto cls = classify_tree(spec, tree);
    out << "  label=\"" << (cls ? to_string(*cls) : std::string("zero-contribution"))
        << "\";\n";
  }
  // Node declarations, grouped into clusters box by box.
  std::vector<char> declared(n + 1, 0);
  for (int b = 0; b < box_id; ++b) {
    out << "  subgraph cluster_" << b << " {\n    style=dashed;\n";
    for (int v : clusters[b]) {
      if (box_of[v] != b || declared[v]) continue;
      declared[v] = 1;
      out << "    n" << v << " [label=\"" << v << "\"";
      if (what != RenderWhat::kBoxes && component_of.count(v))
        out << " fillcolor=\"" << kPalette[component_of[v] % 8] << "\"";
      if (box_overlap[v] > 1) out << " peripheries=2";
      out << "];\n";
    }
    out << "  }\n";
  }
  for (int v = 1; v <= n; ++v)
    if (!declared[v]) out << "  n" << v << " [label=\"" << v << "\"];\n";
  // Leaves as small points so sibling order stays readable.
  int leaf_id = 0;
  for (int v = 1; v <= n; ++v) {
    for (int c : tree.children(v)) {
      if (c == PlaneTree::kLeaf) {
        out << "  l" << leaf_id << " [shape=point label=\"\"];\n";
        out << "  n" << v << " -> l" << leaf_id << ";\n";
        ++leaf_id;
      } else {
        out << "  n" << v << " -> n" << c << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

// Text walk-through of the fast contribution computation for one tree.
inline std::string explain_text(const ArrangementSpec& spec, const PlaneTree& tree) {
  std::ostringstream out;
  auto seq_str = [](const std::vector<int>& nodes) {
    std::string s = "(";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(nodes[i]);
    }
    return s + ")";
  };
  out << "tree " << encode_tree(tree) << "\n";
  int total = 1;
  for (const std::vector<int>& chain : maximal_cadet_sequences(tree)) {
    out << "maximal cadet sequence " << seq_str(chain) << "\n";
    std::vector<Run> runs = maximal_s_cadet_runs(spec, tree, chain);
    out << "  maximal S-cadet sequences:";
    for (const Run& r : runs)
      out << " " << seq_str({chain.begin() + r.begin, chain.begin() + r.end + 1});
    out << "\n";
    for (const ConnectedContext& ctx : s_connected_components(spec, tree, chain)) {
      out << "  S-connected component " << seq_str(ctx.nodes) << "\n";
      int kp = ctx.box_count();
      out << "    reaches:";
      bool any = false;
      for (int i = 0; i <= kp; ++i)
        for (int j = i + 1; j <= kp; ++j)
          if (reaches(ctx, i, j)) {
            out << " X" << i << "->X" << j;
            any = true;
          }
      if (!any) out << " none";
      out << "\n";
      ChainTrace trace = run_chain_algorithm(ctx);
      out << "    algorithm:";
      for (int pick : trace.picks) out << " X" << pick;
      int c = contribution_connected(ctx);
      if (trace.success)
        out << " -> success, t=" << trace.picks.size() - 1 << ", contribution " << c << "\n";
      else
        out << " -> fails at step j=" << trace.picks.size() - 1 << ", contribution 0\n";
      total *= c;
    }
  }
  out << "tree contribution: " << total << "\n";
  return out.str();
}

}  // namespace braid

#endif  // BRAID_RENDER_HPP
