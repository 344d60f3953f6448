#pragma once

#include "ccr/treedecomp.hpp"

namespace ccr {

struct TreewidthResult {
  int width = -1;
  std::vector<Vertex> elimination_order;
  TreeDecomposition decomp;
};

namespace tw_detail {

// Vertices reachable from v through W only, as a bitmask (v excluded).
inline unsigned reach_through(const std::vector<unsigned>& adj, int n, unsigned W, int v) {
  unsigned seen = 1u << v;
  unsigned frontier = 1u << v;
  while (frontier) {
    unsigned next = 0;
    for (int a = 0; a < n; ++a) {
      if (!(frontier & (1u << a))) continue;
      next |= adj[a] & ~seen;
    }
    seen |= next;
    frontier = next & W;  // only walk onward through W
  }
  return seen & ~(1u << v);
}

}  // namespace tw_detail

/// Exact treewidth by dynamic programming over vertex subsets in the
/// elimination-ordering formulation, |V| <= 12. Also returns an optimal
/// order and the induced (validated) tree-decomposition.
inline TreewidthResult treewidth_exact(const Graph& h) {
  const int n = h.size();
  if (n > 12) throw BudgetError("treewidth_exact is limited to 12 vertices");
  std::vector<unsigned> adj(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : h.neighbors(v)) adj[v] |= 1u << u;

  const unsigned full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<std::int8_t> tw(full + 1, 0);
  std::vector<std::int8_t> pick(full + 1, -1);
  // tw[S]: width needed to eliminate exactly the vertices of S first.
  for (unsigned S = 1; S <= full; ++S) {
    int best = n + 1;
    int best_v = -1;
    for (int v = 0; v < n; ++v) {
      if (!(S & (1u << v))) continue;
      unsigned W = S & ~(1u << v);
      unsigned r = tw_detail::reach_through(adj, n, W, v) & ~W;
      int q = __builtin_popcount(r);
      int val = std::max<int>(tw[W], q);
      if (val < best || (val == best && v < best_v)) {
        best = val;
        best_v = v;
      }
    }
    tw[S] = static_cast<std::int8_t>(best);
    pick[S] = static_cast<std::int8_t>(best_v);
  }

  TreewidthResult res;
  res.width = tw[full];
  res.elimination_order.assign(n, 0);
  unsigned S = full;
  for (int i = n - 1; i >= 0; --i) {
    int v = pick[S];
    res.elimination_order[i] = static_cast<Vertex>(v);
    S &= ~(1u << v);
  }

  // Build the decomposition by simulated elimination with fill-in.
  std::vector<unsigned> cur = adj;
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[res.elimination_order[i]] = i;
  std::vector<unsigned> bag_mask(n, 0);
  for (int i = 0; i < n; ++i) {
    int v = res.elimination_order[i];
    bag_mask[i] = cur[v] | (1u << v);
    unsigned nb = cur[v];
    for (int a = 0; a < n; ++a) {
      if (!(nb & (1u << a))) continue;
      cur[a] |= nb & ~(1u << a);
      cur[a] &= ~(1u << v);
    }
  }
  TreeDecomposition td;
  td.bags.resize(n);
  td.tree.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int v = 0; v < n; ++v)
      if (bag_mask[i] & (1u << v)) td.bags[i].push_back(v);
    // parent: bag of the earliest-eliminated remaining neighbour
    unsigned others = bag_mask[i] & ~(1u << res.elimination_order[i]);
    int parent = -1;
    for (int v = 0; v < n; ++v) {
      if (!(others & (1u << v))) continue;
      if (parent < 0 || position[v] < position[parent]) parent = v;
    }
    if (parent >= 0) {
      td.tree[i].push_back(position[parent]);
      td.tree[position[parent]].push_back(i);
    }
  }
  if (auto err = check_tree_decomposition(h, td); !err.empty())
    throw std::logic_error("treewidth_exact produced an invalid decomposition: " + err);
  if (td.width() != res.width)
    throw std::logic_error("treewidth_exact: decomposition width disagrees with the DP");
  res.decomp = std::move(td);
  return res;
}

}  // namespace ccr
