#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "ccr/families.hpp"
#include "ccr/graph.hpp"

using namespace ccr;

namespace {

// Independent reference BFS, used as the oracle for all distance checks.
std::vector<int> naive_bfs(const Graph& g, Vertex s) {
  std::vector<int> d(g.size(), -1);
  std::vector<Vertex> frontier{s};
  d[s] = 0;
  while (!frontier.empty()) {
    std::vector<Vertex> next;
    for (Vertex a : frontier) {
      for (Vertex b : g.neighbors(a)) {
        if (d[b] < 0) {
          d[b] = d[a] + 1;
          next.push_back(b);
        }
      }
    }
    frontier = std::move(next);
  }
  return d;
}

}  // namespace

TEST_CASE("grid window neighbors and codec") {
  Graph g = Graph::grid_window({-5, 5, -5, 5});
  REQUIRE(g.size() == 121);
  Vertex o = g.grid_vertex(0, 0);
  auto ns = g.neighbors(o);
  std::set<std::pair<int, int>> coords;
  for (Vertex v : ns) coords.insert({g.coord(v).x, g.coord(v).y});
  REQUIRE(coords == std::set<std::pair<int, int>>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  // codec round-trips
  for (Vertex v = 0; v < g.size(); ++v) {
    auto c = g.coord(v);
    REQUIRE(g.grid_vertex(c.x, c.y) == v);
  }
}

TEST_CASE("cycle basics") {
  Graph c4 = Graph::cycle(4);
  REQUIRE(c4.neighbors(0) == std::vector<Vertex>{1, 3});
  Graph c12 = Graph::cycle(12);
  REQUIRE(c12.size() == 12);
  for (Vertex v = 0; v < 12; ++v) REQUIRE(c12.neighbors(v).size() == 2);
  Graph c10 = Graph::cycle(10);
  REQUIRE(c10.dist_capped(0, 6, 10) == 4);
}

TEST_CASE("dist_capped") {
  Graph g = Graph::grid_window({-5, 5, -5, 5});
  REQUIRE(g.dist_capped(g.grid_vertex(0, 0), g.grid_vertex(3, 4), 10) == 7);
  REQUIRE(g.dist_capped(g.grid_vertex(2, 2), g.grid_vertex(2, 2), 0) == 0);
  REQUIRE_FALSE(g.dist_capped(g.grid_vertex(-5, -5), g.grid_vertex(5, 5), 10).has_value());

  // closed-form metric agrees with BFS on samples
  Graph c = Graph::cycle(31);
  auto d0 = naive_bfs(c, 7);
  for (Vertex v = 0; v < c.size(); ++v) REQUIRE(c.dist_capped(7, v, 31).value() == d0[v]);
  auto dg = naive_bfs(g, g.grid_vertex(-2, 3));
  for (Vertex v = 0; v < g.size(); ++v)
    REQUIRE(g.dist_capped(g.grid_vertex(-2, 3), v, 100).value() == dg[v]);
}

TEST_CASE("metric axioms on samples") {
  Graph g = random_connected_graph(11, 24, 20);
  SplitMix rng(5);
  for (int it = 0; it < 200; ++it) {
    Vertex u = static_cast<Vertex>(rng.below(g.size()));
    Vertex v = static_cast<Vertex>(rng.below(g.size()));
    Vertex w = static_cast<Vertex>(rng.below(g.size()));
    int duv = g.dist_capped(u, v, g.size()).value();
    REQUIRE(duv == g.dist_capped(v, u, g.size()).value());
    int duw = g.dist_capped(u, w, g.size()).value();
    int dvw = g.dist_capped(v, w, g.size()).value();
    REQUIRE(duw <= duv + dvw);
  }
}

TEST_CASE("balls") {
  Graph g = Graph::grid_window({-6, 6, -6, 6});
  Vertex o = g.grid_vertex(0, 0);
  REQUIRE(g.ball(o, 1).size() == 5);
  // brute-force count, plus the closed form 2r^2+2r+1
  auto d = naive_bfs(g, o);
  size_t within2 = 0;
  for (Vertex v = 0; v < g.size(); ++v)
    if (d[v] >= 0 && d[v] <= 2) ++within2;
  REQUIRE(g.ball(o, 2).size() == within2);
  REQUIRE(within2 == 13);

  Graph t = regular_tree(3, 4);
  REQUIRE(t.size() == 46);
  REQUIRE(t.ball(0, 1).size() == 4);

  // monotone and nested
  auto b3 = g.ball(o, 3);
  auto b4 = g.ball(o, 4);
  REQUIRE(std::includes(b4.begin(), b4.end(), b3.begin(), b3.end()));
}

TEST_CASE("window boundary guard") {
  Graph open_window = Graph::grid_window({0, 6, 0, 6}, /*clamped=*/false);
  Vertex center = open_window.grid_vertex(3, 3);
  REQUIRE(open_window.ball(center, 2).size() == 13);
  REQUIRE_THROWS_AS(open_window.ball(center, 4), WindowError);
  Graph clamped = Graph::grid_window({0, 6, 0, 6});
  REQUIRE(clamped.ball(center, 4).size() == 37);  // 41-vertex diamond minus 4 clipped tips
  REQUIRE_THROWS_AS(clamped.neighbors(49), DomainError);
}

TEST_CASE("multi-source distances match per-source minimum") {
  Graph g = Graph::grid_window({0, 8, 0, 8});
  auto one = g.multi_source_dist_capped({g.grid_vertex(0, 0)}, 1);
  int cnt = 0;
  for (int x : one) cnt += (x >= 0);
  REQUIRE(cnt == 3);  // corner 1-ball

  auto mid = g.multi_source_dist_capped({g.grid_vertex(0, 0), g.grid_vertex(4, 0)}, 2);
  REQUIRE(mid[g.grid_vertex(2, 0)] == 2);

  Graph r = random_connected_graph(3, 20, 14);
  std::vector<Vertex> sources{1, 7, 13};
  auto multi = r.multi_source_dist_capped(sources, 4);
  for (Vertex v = 0; v < r.size(); ++v) {
    int best = -1;
    for (Vertex s : sources) {
      auto d = r.dist_capped(s, v, 4);
      if (d && (best < 0 || *d < best)) best = *d;
    }
    REQUIRE(multi[v] == best);
  }
}

TEST_CASE("hub graph structure") {
  HubGraphData hub = hub_graph(3, 2);
  const Graph& g = hub.graph;
  // z's neighbours are the first subdivision vertex toward every tree
  // vertex in the window: degree = sum of |T_i|.
  int expect = 0;
  for (const auto& br : hub.branches) expect += static_cast<int>(br.tree.size());
  REQUIRE(static_cast<int>(g.neighbors(hub.z).size()) == expect);
  REQUIRE(expect == 15);  // |T_2|=5, |T_3|=10 at depth 2

  for (const auto& br : hub.branches) {
    // every z-path has length index and ends at its tree vertex
    for (size_t pos = 0; pos < br.tree.size(); ++pos) {
      const Path& p = br.z_path[pos];
      REQUIRE(static_cast<int>(p.size()) == br.index + 1);
      REQUIRE(p.front() == hub.z);
      REQUIRE(p.back() == br.tree[pos]);
      REQUIRE(g.is_path(p));
    }
    // subdivided tree edges have length index
    for (const auto& [key, p] : br.tree_edge_path) {
      REQUIRE(static_cast<int>(p.size()) == br.index + 1);
      REQUIRE(g.is_path(p));
    }
    // interior tree vertices have full degree in T_i
    for (size_t pos = 0; pos < br.tree.size(); ++pos) {
      if (br.tree_depth[pos] < 2)
        REQUIRE(static_cast<int>(br.tree_adj[pos].size()) == br.index);
    }
  }
  REQUIRE_THROWS_AS(hub.branch(4), DomainError);
}

TEST_CASE("subdivided multitriangle") {
  Graph h = subdivided_multitriangle(1);
  REQUIRE(h.size() == 9);
  REQUIRE(h.edge_count() == 12);
  int deg4 = 0, deg2 = 0;
  for (Vertex v = 0; v < h.size(); ++v) {
    size_t d = h.neighbors(v).size();
    if (d == 4) ++deg4;
    if (d == 2) ++deg2;
  }
  REQUIRE(deg4 == 3);
  REQUIRE(deg2 == 6);

  Graph h3 = subdivided_multitriangle(3);
  REQUIRE(h3.size() == 3 + 6 * 3);
  REQUIRE(h3.edge_count() == 6 * 4);
}

TEST_CASE("series parallel generator") {
  for (std::uint64_t seed : {1ULL, 2ULL, 9ULL}) {
    SeriesParallelGraph sp = series_parallel(seed, 40);
    REQUIRE(sp.graph.size() == 40);
    REQUIRE(sp.decomp.width() == 2);
    REQUIRE(check_tree_decomposition(sp.graph, sp.decomp).empty());
  }
}

TEST_CASE("geodesic subpaths") {
  auto ring = [](int n) {
    std::vector<Vertex> c(n);
    for (int i = 0; i < n; ++i) c[i] = i;
    return c;
  };
  Graph c12 = Graph::cycle(12);
  REQUIRE(geodesic_subpaths_ok(c12, ring(12), 6));
  REQUIRE_FALSE(geodesic_subpaths_ok(c12, ring(12), 7));
  Graph c11 = Graph::cycle(11);
  REQUIRE(geodesic_subpaths_ok(c11, ring(11), 5));

  // boundary ring of a 5x5 grid: compare against a brute-force check of
  // every subpath at every length
  Graph g = Graph::grid_window({0, 4, 0, 4});
  std::vector<Vertex> cyc;
  for (int x = 0; x <= 4; ++x) cyc.push_back(g.grid_vertex(x, 0));
  for (int y = 1; y <= 4; ++y) cyc.push_back(g.grid_vertex(4, y));
  for (int x = 3; x >= 0; --x) cyc.push_back(g.grid_vertex(x, 4));
  for (int y = 3; y >= 1; --y) cyc.push_back(g.grid_vertex(0, y));
  int n = static_cast<int>(cyc.size());
  for (int t = 1; t <= 8; ++t) {
    bool expect = true;
    for (int i = 0; i < n && expect; ++i) {
      for (int len = 1; len <= std::min(t, n - 1) && expect; ++len) {
        auto d = g.dist_capped(cyc[i], cyc[(i + len) % n], n);
        if (d.value() != len) expect = false;
      }
    }
    REQUIRE(geodesic_subpaths_ok(g, cyc, t) == expect);
  }

  std::vector<Vertex> not_cycle{0, 1, 2};
  REQUIRE_THROWS_AS(geodesic_subpaths_ok(g, not_cycle, 2), DomainError);
}

TEST_CASE("edge list io") {
  std::stringstream ss("0 1\n1 2\n2 3\n3 0\n");
  Graph g = load_edge_list(ss);
  REQUIRE(g.size() == 4);
  REQUIRE(g.edge_count() == 4);
  std::stringstream out;
  save_edge_list(g, out);
  Graph g2 = load_edge_list(out);
  REQUIRE(g2.size() == g.size());
  REQUIRE(g2.edge_count() == g.edge_count());
}

TEST_CASE("malformed graphs rejected") {
  REQUIRE_THROWS_AS(Graph::cycle(2), ConfigError);
  std::vector<std::vector<Vertex>> loop{{0}};
  REQUIRE_THROWS_AS(Graph::from_adjacency(GraphKind::Explicit, loop), ConfigError);
  std::vector<std::vector<Vertex>> disconnected{{1}, {0}, {3}, {2}};
  REQUIRE_THROWS_AS(Graph::from_adjacency(GraphKind::Explicit, disconnected), ConfigError);
}

TEST_CASE("subdivide stretches distances") {
  Graph p = random_tree(4, 8);
  Graph s = subdivide(p, 2);
  for (Vertex u = 0; u < p.size(); ++u) {
    for (Vertex v = 0; v < p.size(); ++v) {
      int d = p.dist_capped(u, v, p.size()).value();
      REQUIRE(s.dist_capped(u, v, 3 * p.size()).value() == 3 * d);
    }
  }
}
