#pragma once

#include <algorithm>
#include <set>

#include "ccr/core.hpp"
#include "ccr/graph.hpp"

namespace ccr {

/// A tree-decomposition: `tree[i]` lists the node's tree neighbours,
/// `bags[i]` the vertices of node i's bag.
struct TreeDecomposition {
  std::vector<std::vector<int>> tree;
  std::vector<std::vector<Vertex>> bags;

  int node_count() const { return static_cast<int>(bags.size()); }

  int width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
  }
};

/// Checks all three tree-decomposition axioms plus tree-ness of the node
/// graph. Returns an explanation for the first failure, empty on success.
inline std::string check_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int t = td.node_count();
  if (t == 0) return "decomposition has no nodes";
  if (static_cast<int>(td.tree.size()) != t) return "tree/bags size mismatch";

  // Node graph must be a connected tree.
  long edges = 0;
  std::vector<int> seen(t, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b : td.tree[a]) {
      edges++;
      if (!seen[b]) {
        seen[b] = 1;
        stack.push_back(b);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return "decomposition tree not connected";
  if (edges / 2 != t - 1) return "decomposition node graph is not a tree";

  // Every vertex covered, and its nodes induce a connected subtree.
  for (Vertex v = 0; v < g.size(); ++v) {
    std::vector<int> holders;
    for (int i = 0; i < t; ++i) {
      if (std::find(td.bags[i].begin(), td.bags[i].end(), v) != td.bags[i].end()) holders.push_back(i);
    }
    if (holders.empty()) return cat("vertex ", v, " in no bag");
    std::set<int> h(holders.begin(), holders.end());
    std::vector<int> comp{holders[0]};
    std::set<int> reached{holders[0]};
    while (!comp.empty()) {
      int a = comp.back();
      comp.pop_back();
      for (int b : td.tree[a]) {
        if (h.count(b) && !reached.count(b)) {
          reached.insert(b);
          comp.push_back(b);
        }
      }
    }
    if (reached.size() != h.size()) return cat("bags of vertex ", v, " not connected in the tree");
  }

  // Every edge inside some bag.
  for (Vertex v = 0; v < g.size(); ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (u < v) continue;
      bool found = false;
      for (int i = 0; i < t && !found; ++i) {
        const auto& b = td.bags[i];
        found = std::find(b.begin(), b.end(), v) != b.end() &&
                std::find(b.begin(), b.end(), u) != b.end();
      }
      if (!found) return cat("edge ", v, "-", u, " in no bag");
    }
  }
  return {};
}

/// Width-1 decomposition of a tree graph: one bag per edge, chained along
/// the tree. For a single vertex, one singleton bag.
inline TreeDecomposition tree_decomposition_of_tree(const Graph& g) {
  TreeDecomposition td;
  if (g.size() == 1) {
    td.bags = {{0}};
    td.tree = {{}};
    return td;
  }
  // BFS orientation; bag i covers edge (parent[v], v).
  std::vector<int> dist;
  std::vector<Vertex> parent;
  g.bfs_capped(0, -1, dist, parent);
  std::vector<int> bag_of(g.size(), -1);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (parent[v] == kNoVertex) continue;
    bag_of[v] = td.node_count();
    td.bags.push_back({parent[v], v});
    td.tree.emplace_back();
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    if (parent[v] == kNoVertex || parent[parent[v]] == kNoVertex) continue;
    int a = bag_of[v], b = bag_of[parent[v]];
    td.tree[a].push_back(b);
    td.tree[b].push_back(a);
  }
  // Children of the root all share the root vertex; chain them to the first.
  std::vector<int> root_bags;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (parent[v] == 0) root_bags.push_back(bag_of[v]);
  }
  for (size_t i = 1; i < root_bags.size(); ++i) {
    td.tree[root_bags[0]].push_back(root_bags[i]);
    td.tree[root_bags[i]].push_back(root_bags[0]);
  }
  if (auto err = check_tree_decomposition(g, td); !err.empty()) throw ConfigError("tree decomposition: " + err);
  return td;
}

}  // namespace ccr
