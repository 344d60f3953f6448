#pragma once

#include <map>

#include "ccr/core.hpp"
#include "ccr/families.hpp"
#include "ccr/graph.hpp"

namespace ccr {

/// A D-fat H-minor model inside a host graph: one connected branch set per
/// pattern vertex, one connection path per pattern edge.
struct FatMinorModel {
  Graph pattern;  // H
  int fatness = 1;
  std::vector<std::vector<Vertex>> branch_sets;          // per pattern vertex, sorted
  std::map<std::pair<int, int>, Path> connection_paths;  // key (min,max) pattern edge

  const Path& path(int x, int y) const {
    auto it = connection_paths.find({std::min(x, y), std::max(x, y)});
    if (it == connection_paths.end()) throw DomainError(cat("no path for pattern edge ", x, "-", y));
    return it->second;
  }

  /// All host vertices used by branch sets and paths.
  std::vector<Vertex> support() const {
    std::vector<Vertex> out;
    for (const auto& b : branch_sets) out.insert(out.end(), b.begin(), b.end());
    for (const auto& [e, p] : connection_paths) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

struct FatMinorReport {
  struct Violation {
    std::string condition;
    std::string detail;
  };
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
  void fail(std::string cond, std::string detail) {
    violations.push_back({std::move(cond), std::move(detail)});
  }
  std::string summary() const {
    std::string s;
    for (const auto& v : violations) s += v.condition + ": " + v.detail + "\n";
    return s;
  }
};

/// Checks all four conditions of the D-fat definition, with a witness pair
/// on every failure.
inline FatMinorReport verify_fat_minor(const Graph& host, const FatMinorModel& m) {
  FatMinorReport rep;
  const int hn = m.pattern.size();
  const int D = m.fatness;
  if (static_cast<int>(m.branch_sets.size()) != hn) {
    rep.fail("structure", "branch set count does not match the pattern");
    return rep;
  }

  std::vector<char> in_branch(host.size(), 0);
  for (int x = 0; x < hn; ++x) {
    if (m.branch_sets[x].empty()) {
      rep.fail("structure", cat("branch set ", x, " empty"));
      return rep;
    }
    for (Vertex v : m.branch_sets[x]) {
      host.check_vertex(v);
      in_branch[v] = 1;
    }
    // connectivity of the branch set
    auto comp = host.multi_source_dist_capped({m.branch_sets[x][0]}, host.size());
    std::vector<char> inside(host.size(), 0);
    for (Vertex v : m.branch_sets[x]) inside[v] = 1;
    std::vector<Vertex> stack{m.branch_sets[x][0]};
    std::vector<char> seen(host.size(), 0);
    seen[m.branch_sets[x][0]] = 1;
    size_t count = 1;
    while (!stack.empty()) {
      Vertex a = stack.back();
      stack.pop_back();
      for (Vertex b : host.neighbors(a)) {
        if (!inside[b] || seen[b]) continue;
        seen[b] = 1;
        ++count;
        stack.push_back(b);
      }
    }
    if (count != m.branch_sets[x].size())
      rep.fail("structure", cat("branch set ", x, " is not connected"));
  }

  for (int x = 0; x < hn; ++x) {
    for (Vertex y : m.pattern.neighbors(x)) {
      if (y < x) continue;
      auto it = m.connection_paths.find({x, static_cast<int>(y)});
      if (it == m.connection_paths.end()) {
        rep.fail("structure", cat("missing path for edge ", x, "-", y));
        continue;
      }
      const Path& p = it->second;
      if (p.size() < 2 || !host.is_path(p)) {
        rep.fail("structure", cat("path ", x, "-", y, " is not a host path"));
        continue;
      }
      auto in_set = [&](const std::vector<Vertex>& s, Vertex v) {
        return std::binary_search(s.begin(), s.end(), v);
      };
      bool fwd = in_set(m.branch_sets[x], p.front()) && in_set(m.branch_sets[y], p.back());
      bool bwd = in_set(m.branch_sets[y], p.front()) && in_set(m.branch_sets[x], p.back());
      if (!fwd && !bwd) rep.fail("structure", cat("path ", x, "-", y, " endpoints not in its branch sets"));
      for (size_t i = 1; i + 1 < p.size(); ++i) {
        if (in_branch[p[i]]) {
          rep.fail("internal-disjoint", cat("path ", x, "-", y, " passes through a branch set at ", p[i]));
          break;
        }
      }
    }
  }
  if (!rep.pass()) return rep;

  // distance conditions via one capped multi-source sweep per piece
  auto far_enough = [&](const std::vector<Vertex>& from, const std::vector<Vertex>& to) -> std::optional<std::pair<Vertex, Vertex>> {
    auto dist = host.multi_source_dist_capped(from, D - 1);
    for (Vertex v : to) {
      if (dist[v] >= 0) {
        Vertex src = kNoVertex;
        for (Vertex f : from) {
          auto d = host.dist_capped(f, v, D - 1);
          if (d) {
            src = f;
            break;
          }
        }
        return std::make_pair(src, v);
      }
    }
    return std::nullopt;
  };

  for (int x = 0; x < hn; ++x) {
    for (int y = x + 1; y < hn; ++y) {
      if (auto w = far_enough(m.branch_sets[x], m.branch_sets[y])) {
        rep.fail("branch-distance", cat("C_", x, " and C_", y, " within ", D - 1, ": witness ", w->first,
                                        "..", w->second));
      }
    }
  }
  for (const auto& [e, p] : m.connection_paths) {
    for (int x = 0; x < hn; ++x) {
      if (x == e.first || x == e.second) continue;
      if (auto w = far_enough(m.branch_sets[x], p)) {
        rep.fail("branch-path-distance", cat("C_", x, " and P_", e.first, "-", e.second, ": witness ",
                                             w->first, "..", w->second));
      }
    }
    for (const auto& [e2, p2] : m.connection_paths) {
      if (e2 <= e) continue;
      if (auto w = far_enough(p, p2)) {
        rep.fail("path-path-distance", cat("P_", e.first, "-", e.second, " and P_", e2.first, "-",
                                           e2.second, ": witness ", w->first, "..", w->second));
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Construction in a grid window: branch sets are 4D x 4D blocks; connection
// paths leave block sides at attachment columns spaced D apart and run on
// channel rows spaced D apart. Complete patterns up to K_4 route their
// crossing pairs on opposite pages (below / above the block row).

struct FatMinorBuild {
  Graph host;
  FatMinorModel model;
};

namespace fatminor_detail {

inline void block_vertices(const Graph& g, int x0, int y0, int side, std::vector<Vertex>& out) {
  for (int y = y0; y < y0 + side; ++y)
    for (int x = x0; x < x0 + side; ++x) out.push_back(g.grid_vertex(x, y));
  std::sort(out.begin(), out.end());
}

inline void straight(const Graph& g, Path& p, int x0, int y0, int x1, int y1) {
  int dx = (x1 > x0) - (x1 < x0);
  int dy = (y1 > y0) - (y1 < y0);
  int x = x0, y = y0;
  while (x != x1 || y != y1) {
    if (x != x1)
      x += dx;
    else
      y += dy;
    p.push_back(g.grid_vertex(x, y));
  }
}

}  // namespace fatminor_detail

/// D-fat K_t minor (t <= 4) in a fresh grid window. Verified before return.
inline FatMinorBuild build_fat_minor_complete(int t, int D) {
  if (t < 1 || t > 4) throw ConfigError("complete fat minors are built for t <= 4 only");
  if (D < 1) throw ConfigError("fatness must be positive");
  const int L = 4 * D;       // block side
  const int S = L + 2 * D;   // block pitch
  struct EdgeRoute {
    int a, b;
    bool below;
    int lane;  // 0-based, wider spans deeper
  };
  std::vector<EdgeRoute> routes;
  for (int a = 0; a < t; ++a) {
    for (int b = a + 1; b < t; ++b) {
      bool below = !(a == 1 && b == 3) && !(a == 0 && b == 3);
      routes.push_back({a, b, below, b - a - 1});
    }
  }
  int max_lane_below = 0, max_lane_above = 0;
  for (const auto& r : routes) (r.below ? max_lane_below : max_lane_above) = std::max(r.below ? max_lane_below : max_lane_above, r.lane);

  GridRect rect;
  rect.x_min = -D;
  rect.x_max = (t - 1) * S + L - 1 + D;
  rect.y_min = -(max_lane_below + 2) * D - D;
  rect.y_max = L - 1 + (max_lane_above + 2) * D + D;
  Graph host = Graph::grid_window(rect);

  FatMinorBuild out{std::move(host), {}};
  const Graph& g = out.host;
  out.model.pattern = complete_graph(t);
  out.model.fatness = D;
  out.model.branch_sets.resize(t);
  for (int a = 0; a < t; ++a)
    fatminor_detail::block_vertices(g, a * S, 0, L, out.model.branch_sets[a]);

  // attachment slots per block side, columns D apart
  std::vector<int> slot_below(t, 0), slot_above(t, 0);
  for (const auto& r : routes) {
    auto& slot = r.below ? slot_below : slot_above;
    int col_a = r.a * S + D * (1 + slot[r.a]++);
    int col_b = r.b * S + D * (1 + slot[r.b]++);
    int row;
    int side_y;
    if (r.below) {
      row = -(r.lane + 2) * D;
      side_y = 0;
    } else {
      row = L - 1 + (r.lane + 2) * D;
      side_y = L - 1;
    }
    Path p{g.grid_vertex(col_a, side_y)};
    fatminor_detail::straight(g, p, col_a, side_y, col_a, row);
    fatminor_detail::straight(g, p, col_a, row, col_b, row);
    fatminor_detail::straight(g, p, col_b, row, col_b, side_y);
    out.model.connection_paths[{r.a, r.b}] = std::move(p);
  }

  auto rep = verify_fat_minor(g, out.model);
  if (!rep.pass()) throw std::logic_error("built complete fat minor fails verification:\n" + rep.summary());
  return out;
}

/// D-fat (p x q)-grid minor in a fresh grid window. Verified before return.
inline FatMinorBuild build_fat_minor_grid_pattern(int p, int q, int D) {
  if (p < 1 || q < 1) throw ConfigError("grid pattern needs positive dimensions");
  if (D < 1) throw ConfigError("fatness must be positive");
  const int L = 4 * D;
  const int S = L + 2 * D;
  GridRect rect;
  rect.x_min = -D;
  rect.x_max = (p - 1) * S + L - 1 + D;
  rect.y_min = -D;
  rect.y_max = (q - 1) * S + L - 1 + D;
  Graph host = Graph::grid_window(rect);

  FatMinorBuild out{std::move(host), {}};
  const Graph& g = out.host;
  // pattern: (a,b) -> a*q + b, edges between grid neighbours
  std::vector<std::vector<Vertex>> padj(static_cast<size_t>(p) * q);
  auto pid = [q](int a, int b) { return a * q + b; };
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < q; ++b) {
      if (a + 1 < p) {
        padj[pid(a, b)].push_back(pid(a + 1, b));
        padj[pid(a + 1, b)].push_back(pid(a, b));
      }
      if (b + 1 < q) {
        padj[pid(a, b)].push_back(pid(a, b + 1));
        padj[pid(a, b + 1)].push_back(pid(a, b));
      }
    }
  }
  out.model.pattern = Graph::from_adjacency(GraphKind::Explicit, std::move(padj));
  out.model.fatness = D;
  out.model.branch_sets.resize(static_cast<size_t>(p) * q);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b)
      fatminor_detail::block_vertices(g, a * S, b * S, L, out.model.branch_sets[pid(a, b)]);

  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < q; ++b) {
      if (a + 1 < p) {  // horizontal connector at the side row y = bS + D
        int y = b * S + D;
        Path pth{g.grid_vertex(a * S + L - 1, y)};
        fatminor_detail::straight(g, pth, a * S + L - 1, y, (a + 1) * S, y);
        out.model.connection_paths[{pid(a, b), pid(a + 1, b)}] = std::move(pth);
      }
      if (b + 1 < q) {  // vertical connector at the side column x = aS + 2D
        int x = a * S + 2 * D;
        Path pth{g.grid_vertex(x, b * S + L - 1)};
        fatminor_detail::straight(g, pth, x, b * S + L - 1, x, (b + 1) * S);
        out.model.connection_paths[{pid(a, b), pid(a, b + 1)}] = std::move(pth);
      }
    }
  }

  auto rep = verify_fat_minor(g, out.model);
  if (!rep.pass()) throw std::logic_error("built grid fat minor fails verification:\n" + rep.summary());
  return out;
}

// ---------------------------------------------------------------------------
// Serialization: branch sets and paths as vertex lists.

inline void write_fat_minor(const FatMinorModel& m, std::ostream& out) {
  out << "ccr-fatminor 1\n";
  out << "pattern " << m.pattern.size();
  for (Vertex v = 0; v < m.pattern.size(); ++v)
    for (Vertex u : m.pattern.neighbors(v))
      if (v < u) out << " " << v << "-" << u;
  out << "\n";
  out << "fatness " << m.fatness << "\n";
  for (size_t x = 0; x < m.branch_sets.size(); ++x) {
    out << "branch " << x;
    for (Vertex v : m.branch_sets[x]) out << " " << v;
    out << "\n";
  }
  for (const auto& [e, p] : m.connection_paths) {
    out << "path " << e.first << " " << e.second;
    for (Vertex v : p) out << " " << v;
    out << "\n";
  }
}

inline FatMinorModel read_fat_minor(std::istream& in) {
  FatMinorModel m;
  std::string line;
  if (!std::getline(in, line) || line.rfind("ccr-fatminor", 0) != 0)
    throw ConfigError("not a fat-minor file");
  std::vector<std::vector<Vertex>> padj;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream is(line);
    std::string tag;
    is >> tag;
    if (tag == "pattern") {
      int n;
      is >> n;
      padj.assign(n, {});
      std::string e;
      while (is >> e) {
        auto dash = e.find('-');
        int a = std::stoi(e.substr(0, dash));
        int b = std::stoi(e.substr(dash + 1));
        padj[a].push_back(b);
        padj[b].push_back(a);
      }
      m.branch_sets.resize(n);
    } else if (tag == "fatness") {
      is >> m.fatness;
    } else if (tag == "branch") {
      size_t x;
      is >> x;
      Vertex v;
      while (is >> v) m.branch_sets[x].push_back(v);
    } else if (tag == "path") {
      int a, b;
      is >> a >> b;
      Path p;
      Vertex v;
      while (is >> v) p.push_back(v);
      m.connection_paths[{std::min(a, b), std::max(a, b)}] = std::move(p);
    }
  }
  m.pattern = Graph::from_adjacency(GraphKind::Explicit, std::move(padj));
  return m;
}

}  // namespace ccr
