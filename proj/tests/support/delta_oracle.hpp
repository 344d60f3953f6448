#pragma once

// Independent slim-triangle delta oracle. Instead of enumerating geodesics
// it maximizes per side over the shortest-path DAG:
//   g_ab(u) = max over a-b geodesics P of d(u, P)
// computed by a suffix DP, and per triple
//   delta = max over side roles of max_{u in DAG(side)} min(g_.(u), g_.(u)).
// The side choices are independent, so this equals the maximum slimness
// defect over all geodesic triangles of the triple.

#include <vector>

#include "ccr/graph.hpp"

namespace ccr::testing {

inline int delta_slim_dag_oracle(const Graph& g) {
  const int n = g.size();
  std::vector<std::vector<int>> dist(n);
  for (Vertex v = 0; v < n; ++v) dist[v] = g.multi_source_dist_capped({v}, n);

  auto on_dag = [&](Vertex a, Vertex b, Vertex w) {
    return dist[a][w] + dist[w][b] == dist[a][b];
  };

  // farthest_on_geodesic[u] for the pair (a,b), all u at once is overkill;
  // compute g_ab(u) for one u by the suffix DP over the DAG.
  auto g_ab = [&](Vertex a, Vertex b, Vertex u) {
    std::vector<int> value(n, -1);
    // process DAG vertices by decreasing dist[a][.], i.e. from b backwards
    std::vector<Vertex> order;
    for (Vertex w = 0; w < n; ++w)
      if (on_dag(a, b, w)) order.push_back(w);
    std::sort(order.begin(), order.end(),
              [&](Vertex p, Vertex q) { return dist[a][p] > dist[a][q]; });
    for (Vertex w : order) {
      if (w == b) {
        value[w] = dist[u][b];
        continue;
      }
      int best_succ = -1;
      for (Vertex s : g.neighbors(w)) {
        if (!on_dag(a, b, s)) continue;
        if (dist[a][s] != dist[a][w] + 1) continue;
        best_succ = std::max(best_succ, value[s]);
      }
      value[w] = std::min(dist[u][w], best_succ);
    }
    return value[a];
  };

  int delta = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      for (Vertex z = y + 1; z < n; ++z) {
        Vertex tri[3] = {x, y, z};
        for (int role = 0; role < 3; ++role) {
          Vertex a = tri[role], b = tri[(role + 1) % 3], c = tri[(role + 2) % 3];
          // side a-b against sides (b,c) and (a,c)
          for (Vertex u = 0; u < n; ++u) {
            if (!on_dag(a, b, u)) continue;
            int far1 = g_ab(b, c, u);
            int far2 = g_ab(a, c, u);
            delta = std::max(delta, std::min(far1, far2));
          }
        }
      }
    }
  }
  return delta;
}

}  // namespace ccr::testing
