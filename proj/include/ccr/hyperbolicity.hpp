#pragma once

#include "ccr/graph.hpp"

namespace ccr {

struct DeltaBudget {
  long per_pair_geodesics = 5000;
  long total_triangles = 2'000'000;
};

struct DeltaResult {
  int lower = 0;   // max slimness defect witnessed
  int upper = 0;   // == lower when enumeration completed
  long triangles = 0;
  long skipped_triples = 0;

  bool exact() const { return lower == upper; }
};

namespace delta_detail {

/// All geodesics between u and v, cut off at the budget (empty optional
/// when the count explodes).
inline std::optional<std::vector<Path>> enumerate_geodesics(const Graph& g,
                                                            const std::vector<std::vector<int>>& dist,
                                                            Vertex u, Vertex v, long budget) {
  std::vector<Path> out;
  Path cur{u};
  bool blown = false;
  std::function<void(Vertex)> dfs = [&](Vertex at) {
    if (blown) return;
    if (at == v) {
      out.push_back(cur);
      if (static_cast<long>(out.size()) > budget) blown = true;
      return;
    }
    for (Vertex b : g.neighbors(at)) {
      if (dist[u][b] == dist[u][at] + 1 && dist[b][v] == dist[at][v] - 1) {
        cur.push_back(b);
        dfs(b);
        cur.pop_back();
      }
    }
  };
  dfs(u);
  if (blown) return std::nullopt;
  return out;
}

inline int triangle_defect(const Graph& g, const std::vector<std::vector<int>>& dist,
                           const Path& p1, const Path& p2, const Path& p3) {
  std::vector<char> other(g.size(), 0);
  int defect = 0;
  auto side = [&](const Path& mine, const Path& a, const Path& b) {
    std::fill(other.begin(), other.end(), 0);
    for (Vertex v : a) other[v] = 1;
    for (Vertex v : b) other[v] = 1;
    for (Vertex u : mine) {
      if (other[u]) continue;  // on another side: defect 0
      int best = -1;
      for (Vertex w = 0; w < g.size(); ++w) {
        if (!other[w]) continue;
        if (best < 0 || dist[u][w] < best) best = dist[u][w];
      }
      defect = std::max(defect, best);
    }
  };
  side(p1, p2, p3);
  side(p2, p1, p3);
  side(p3, p1, p2);
  return defect;
}

}  // namespace delta_detail

/// Slim-triangle delta by exact enumeration of geodesic triangles. When a
/// pair's geodesic count or the triangle total exceeds the budget the
/// result degrades to a bracket [max defect seen, ceil(diam/2)] with the
/// shortfall reported, never to a silent sample.
inline DeltaResult delta_hyperbolicity_slim(const Graph& g, DeltaBudget budget = {}) {
  const int n = g.size();
  std::vector<std::vector<int>> dist(n);
  int diam = 0;
  for (Vertex v = 0; v < n; ++v) {
    dist[v] = g.multi_source_dist_capped({v}, n);
    for (int d : dist[v]) diam = std::max(diam, d);
  }
  // per-pair geodesic lists, shared across triples
  std::vector<std::vector<std::optional<std::vector<Path>>>> geo(n);
  for (Vertex u = 0; u < n; ++u) geo[u].resize(n);

  DeltaResult res;
  std::vector<std::vector<char>> computed(n, std::vector<char>(n, 0));
  std::vector<std::vector<char>> blown(n, std::vector<char>(n, 0));
  auto ensure_pair = [&](Vertex u, Vertex v) -> const std::optional<std::vector<Path>>& {
    Vertex a = std::min(u, v), b = std::max(u, v);
    if (!computed[a][b]) {
      computed[a][b] = 1;
      geo[a][b] = delta_detail::enumerate_geodesics(g, dist, a, b, budget.per_pair_geodesics);
      if (!geo[a][b].has_value()) blown[a][b] = 1;
    }
    return geo[a][b];
  };

  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      for (Vertex z = y + 1; z < n; ++z) {
        const auto& gxy = ensure_pair(x, y);
        const auto& gyz = ensure_pair(y, z);
        const auto& gxz = ensure_pair(x, z);
        if (!gxy || !gyz || !gxz) {
          ++res.skipped_triples;
          continue;
        }
        long combos = static_cast<long>(gxy->size()) * gyz->size() * gxz->size();
        if (res.triangles + combos > budget.total_triangles) {
          ++res.skipped_triples;
          continue;
        }
        for (const Path& p1 : *gxy) {
          for (const Path& p2 : *gyz) {
            for (const Path& p3 : *gxz) {
              ++res.triangles;
              res.lower = std::max(res.lower,
                                   delta_detail::triangle_defect(g, dist, p1, p2, p3));
            }
          }
        }
      }
    }
  }
  res.upper = res.skipped_triples == 0 ? res.lower : (diam + 1) / 2;
  if (res.upper < res.lower) res.upper = res.lower;
  return res;
}

}  // namespace ccr
