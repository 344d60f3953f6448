#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <utility>

#include "ccr/core.hpp"

namespace ccr {

enum class GraphKind {
  Explicit,
  GridWindow,
  Cycle,
  Tree,
  HubWindow,
  SubdividedClique,
  Composed,
};

inline const char* kind_name(GraphKind k) {
  switch (k) {
    case GraphKind::Explicit: return "explicit";
    case GraphKind::GridWindow: return "grid-window";
    case GraphKind::Cycle: return "cycle";
    case GraphKind::Tree: return "tree";
    case GraphKind::HubWindow: return "hub-window";
    case GraphKind::SubdividedClique: return "subdivided-clique";
    case GraphKind::Composed: return "composed";
  }
  return "?";
}

struct GridRect {
  int x_min = 0, x_max = -1, y_min = 0, y_max = -1;

  int width() const { return x_max - x_min + 1; }
  int height() const { return y_max - y_min + 1; }
  long cells() const { return static_cast<long>(width()) * height(); }
  bool contains(int x, int y) const {
    return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
  }
  bool on_rim(int x, int y) const {
    return x == x_min || x == x_max || y == y_min || y == y_max;
  }
};

struct GridCoord {
  int x = 0, y = 0;
};

/// An undirected simple graph, either fully explicit or the materialized
/// window of an infinite family. Immutable after construction; all queries
/// are pure and safe to share across threads.
///
/// Distances are always served through caps. Grid windows and cycles carry a
/// closed-form metric; everything else answers through capped BFS.
class Graph {
 public:
  Graph() = default;

  static Graph from_adjacency(GraphKind kind, std::vector<std::vector<Vertex>> adj,
                              std::vector<bool> boundary = {}, bool clamped = true) {
    Graph g;
    g.kind_ = kind;
    g.adj_ = std::move(adj);
    g.boundary_ = std::move(boundary);
    g.boundary_.resize(g.adj_.size(), false);
    g.clamped_ = clamped;
    g.normalize_and_check();
    return g;
  }

  static Graph grid_window(GridRect rect, bool clamped = true) {
    if (rect.width() <= 0 || rect.height() <= 0) throw ConfigError("grid window is empty");
    Graph g;
    g.kind_ = GraphKind::GridWindow;
    g.grid_ = rect;
    g.clamped_ = clamped;
    const int w = rect.width(), h = rect.height();
    g.adj_.assign(static_cast<size_t>(w) * h, {});
    g.boundary_.assign(static_cast<size_t>(w) * h, false);
    for (int y = rect.y_min; y <= rect.y_max; ++y) {
      for (int x = rect.x_min; x <= rect.x_max; ++x) {
        Vertex v = g.grid_vertex(x, y);
        g.boundary_[v] = rect.on_rim(x, y);
        auto add = [&](int xx, int yy) {
          if (rect.contains(xx, yy)) g.adj_[v].push_back(g.grid_vertex(xx, yy));
        };
        add(x - 1, y);
        add(x + 1, y);
        add(x, y - 1);
        add(x, y + 1);
      }
    }
    g.normalize_and_check();
    return g;
  }

  static Graph cycle(int n) {
    if (n < 3) throw ConfigError("cycle needs at least 3 vertices");
    Graph g;
    g.kind_ = GraphKind::Cycle;
    g.cycle_n_ = n;
    g.adj_.assign(n, {});
    for (Vertex v = 0; v < n; ++v) {
      g.adj_[v] = {static_cast<Vertex>((v + 1) % n), static_cast<Vertex>((v + n - 1) % n)};
    }
    g.boundary_.assign(n, false);
    g.normalize_and_check();
    return g;
  }

  GraphKind kind() const { return kind_; }
  int size() const { return static_cast<int>(adj_.size()); }
  bool clamped() const { return clamped_; }

  long edge_count() const {
    long m = 0;
    for (const auto& ns : adj_) m += static_cast<long>(ns.size());
    return m / 2;
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= size()) throw DomainError(cat("vertex ", v, " outside window"));
  }

  const std::vector<Vertex>& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& ns = neighbors(u);
    return std::binary_search(ns.begin(), ns.end(), v);
  }

  bool is_boundary(Vertex v) const {
    check_vertex(v);
    return boundary_[v];
  }

  // Grid codec (bijective between ids and coordinates).
  bool has_grid_codec() const { return grid_.has_value(); }
  const GridRect& grid_rect() const { return *grid_; }
  GridCoord coord(Vertex v) const {
    check_vertex(v);
    const auto& r = *grid_;
    return {r.x_min + static_cast<int>(v) % r.width(), r.y_min + static_cast<int>(v) / r.width()};
  }
  Vertex grid_vertex(int x, int y) const {
    const auto& r = *grid_;
    if (!r.contains(x, y)) throw DomainError(cat("coordinate (", x, ",", y, ") outside window"));
    return static_cast<Vertex>((y - r.y_min) * r.width() + (x - r.x_min));
  }

  bool is_cycle_graph() const { return kind_ == GraphKind::Cycle; }

  /// Exact distance if at most `cap`, otherwise empty ("beyond cap").
  std::optional<int> dist_capped(Vertex u, Vertex v, int cap) const {
    check_vertex(u);
    check_vertex(v);
    if (cap < 0) throw DomainError("negative distance cap");
    if (auto d = metric(u, v)) return *d <= cap ? d : std::nullopt;
    if (u == v) return 0;
    // Plain BFS from u, stopping at the cap.
    std::vector<int> dist(adj_.size(), -1);
    std::queue<Vertex> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
      Vertex a = q.front();
      q.pop();
      if (dist[a] == cap) break;
      for (Vertex b : adj_[a]) {
        if (dist[b] >= 0) continue;
        dist[b] = dist[a] + 1;
        if (b == v) return dist[b];
        q.push(b);
      }
    }
    if (dist[v] >= 0 && dist[v] <= cap) return dist[v];
    return std::nullopt;
  }

  /// Vertices at distance <= r from v. Errors if the true ball might be
  /// truncated by the window and the graph was built without clamping.
  std::vector<Vertex> ball(Vertex v, int r) const {
    check_vertex(v);
    auto dist = multi_source_dist_capped({v}, r);
    std::vector<Vertex> out;
    for (Vertex u = 0; u < size(); ++u) {
      if (dist[u] < 0) continue;
      if (!clamped_ && boundary_[u] && dist[u] < r)
        throw WindowError(cat("ball(", v, ",", r, ") spills past the window boundary"));
      out.push_back(u);
    }
    return out;
  }

  /// Min distance to any source, capped; -1 means "beyond cap".
  std::vector<int> multi_source_dist_capped(const std::vector<Vertex>& sources, int cap) const {
    if (sources.empty()) throw DomainError("multi_source_dist_capped: no sources");
    if (cap < 0) throw DomainError("negative distance cap");
    std::vector<int> dist(adj_.size(), -1);
    std::queue<Vertex> q;
    for (Vertex s : sources) {
      check_vertex(s);
      if (dist[s] != 0) {
        dist[s] = 0;
        q.push(s);
      }
    }
    while (!q.empty()) {
      Vertex a = q.front();
      q.pop();
      if (dist[a] == cap) continue;
      for (Vertex b : adj_[a]) {
        if (dist[b] >= 0) continue;
        dist[b] = dist[a] + 1;
        q.push(b);
      }
    }
    return dist;
  }

  /// BFS tree from `source`, capped; parents allow path extraction.
  void bfs_capped(Vertex source, int cap, std::vector<int>& dist, std::vector<Vertex>& parent) const {
    check_vertex(source);
    dist.assign(adj_.size(), -1);
    parent.assign(adj_.size(), kNoVertex);
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
      Vertex a = q.front();
      q.pop();
      if (cap >= 0 && dist[a] == cap) continue;
      for (Vertex b : adj_[a]) {
        if (dist[b] >= 0) continue;
        dist[b] = dist[a] + 1;
        parent[b] = a;
        q.push(b);
      }
    }
  }

  /// Shortest path u -> v (inclusive), empty if farther than cap.
  Path shortest_path_capped(Vertex u, Vertex v, int cap) const {
    std::vector<int> dist;
    std::vector<Vertex> parent;
    bfs_capped(u, cap, dist, parent);
    if (dist[v] < 0) return {};
    Path p;
    for (Vertex a = v; a != kNoVertex; a = parent[a]) p.push_back(a);
    std::reverse(p.begin(), p.end());
    return p;
  }

  bool is_path(const Path& p) const {
    if (p.empty()) return false;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] == p[i + 1]) continue;  // resting step
      if (!adjacent(p[i], p[i + 1])) return false;
    }
    return true;
  }

 private:
  std::optional<int> metric(Vertex u, Vertex v) const {
    if (grid_) {
      auto a = coord(u), b = coord(v);
      return std::abs(a.x - b.x) + std::abs(a.y - b.y);
    }
    if (cycle_n_ > 0) {
      int d = std::abs(u - v);
      return std::min(d, cycle_n_ - d);
    }
    return std::nullopt;
  }

  void normalize_and_check() {
    for (Vertex v = 0; v < size(); ++v) {
      auto& ns = adj_[v];
      std::sort(ns.begin(), ns.end());
      ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
      for (Vertex u : ns) {
        if (u == v) throw ConfigError(cat("self-loop at vertex ", v));
        if (u < 0 || u >= size()) throw ConfigError(cat("edge endpoint ", u, " out of range"));
      }
    }
    for (Vertex v = 0; v < size(); ++v) {
      for (Vertex u : adj_[v]) {
        if (!std::binary_search(adj_[u].begin(), adj_[u].end(), v))
          throw ConfigError(cat("edge ", v, "->", u, " is not symmetric"));
      }
    }
    if (size() > 0) {
      auto dist = multi_source_dist_capped({0}, size());
      for (Vertex v = 0; v < size(); ++v) {
        if (dist[v] < 0) throw ConfigError("graph is not connected within its window");
      }
    }
  }

  GraphKind kind_ = GraphKind::Explicit;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<bool> boundary_;
  bool clamped_ = true;
  std::optional<GridRect> grid_;
  int cycle_n_ = 0;
};

/// True iff every subpath of length at most `t` along the closed cycle is a
/// geodesic of g. Subpaths of geodesics are geodesics, so only maximal
/// windows are checked.
inline bool geodesic_subpaths_ok(const Graph& g, const std::vector<Vertex>& cycle, int t) {
  const int n = static_cast<int>(cycle.size());
  if (n < 3) throw DomainError("geodesic_subpaths_ok: not a cycle");
  for (int i = 0; i < n; ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % n])) throw DomainError("geodesic_subpaths_ok: not a cycle");
  }
  {
    std::vector<Vertex> sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("geodesic_subpaths_ok: repeated vertex");
  }
  if (t <= 0) return true;
  const int len = std::min(t, n - 1);
  for (int i = 0; i < n; ++i) {
    Vertex a = cycle[i];
    Vertex b = cycle[(i + len) % n];
    auto d = g.dist_capped(a, b, len);
    if (!d || *d != len) return false;
  }
  return true;
}

}  // namespace ccr
