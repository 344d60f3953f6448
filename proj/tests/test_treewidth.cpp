#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "ccr/families.hpp"
#include "ccr/haven.hpp"
#include "ccr/treewidth.hpp"

using namespace ccr;

namespace {

// Brute-force treewidth over all elimination orders (oracle, n <= 8).
int tw_brute_force(const Graph& g) {
  int n = g.size();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = n;
  do {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u : g.neighbors(v)) adj[v][u] = 1;
    std::vector<char> gone(n, 0);
    int width = 0;
    for (Vertex v : order) {
      std::vector<Vertex> nb;
      for (Vertex u = 0; u < n; ++u)
        if (!gone[u] && u != v && adj[v][u]) nb.push_back(u);
      width = std::max(width, static_cast<int>(nb.size()));
      for (Vertex a : nb)
        for (Vertex b : nb)
          if (a != b) adj[a][b] = 1;
      gone[v] = 1;
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace

TEST_CASE("treewidth on reference graphs") {
  REQUIRE(treewidth_exact(complete_graph(4)).width == 3);
  REQUIRE(treewidth_exact(complete_graph(2)).width == 1);
  REQUIRE(treewidth_exact(path_graph(9)).width == 1);
  REQUIRE(treewidth_exact(random_tree(5, 12)).width == 1);
  REQUIRE(treewidth_exact(Graph::cycle(7)).width == 2);
  Graph grid3 = Graph::grid_window({0, 2, 0, 2});
  REQUIRE(treewidth_exact(grid3).width == 3);
  REQUIRE(treewidth_exact(subdivided_multitriangle(1)).width == 2);
}

TEST_CASE("treewidth matches brute force over elimination orders") {
  SplitMix rng(31);
  for (int it = 0; it < 10; ++it) {
    int n = 5 + static_cast<int>(rng.below(3));
    Graph g = random_connected_graph(rng.next(), n, static_cast<int>(rng.below(2 * n)));
    auto res = treewidth_exact(g);
    REQUIRE(res.width == tw_brute_force(g));
    REQUIRE(check_tree_decomposition(g, res.decomp).empty());
    REQUIRE(res.decomp.width() == res.width);
  }
}

TEST_CASE("series-parallel graphs have width-2 decompositions and treewidth 2") {
  auto sp = series_parallel(3, 11);
  REQUIRE(treewidth_exact(sp.graph).width == 2);
  REQUIRE(sp.decomp.width() == 2);
}

TEST_CASE("closed-form havens") {
  SECTION("complete graphs") {
    Graph k4 = complete_graph(4);
    auto r4 = haven_of_order(k4, 4);
    REQUIRE(r4.kind == HavenResult::Kind::Constructed);
    REQUIRE(verify_haven(k4, r4.haven, 3).empty());
    REQUIRE_FALSE(haven_of_order(k4, 5).exists());
  }

  SECTION("single vertex") {
    Graph k1 = complete_graph(1);
    auto r = haven_of_order(k1, 1);
    REQUIRE(r.exists());
    REQUIRE(r.haven.beta({}) == std::vector<Vertex>{0});
    REQUIRE_FALSE(haven_of_order(k1, 2).exists());
  }

  SECTION("3x3 grid, order 3, touching checked on all pairs of size <= 2") {
    Graph g = Graph::grid_window({0, 2, 0, 2});
    auto r = haven_of_order(g, 3);
    REQUIRE(r.kind == HavenResult::Kind::Constructed);
    REQUIRE(verify_haven(g, r.haven, 2).empty());
  }

  SECTION("larger grid still within the closed form") {
    Graph g = Graph::grid_window({0, 5, 0, 5});
    auto r = haven_of_order(g, 6);
    REQUIRE(r.kind == HavenResult::Kind::Constructed);
    // spot-check the free-cross component on a few removals
    auto img = r.haven.beta({g.grid_vertex(0, 0), g.grid_vertex(3, 3)});
    REQUIRE_FALSE(img.empty());
  }
}

TEST_CASE("generic haven search agrees with duality on small graphs") {
  SplitMix rng(41);
  for (int it = 0; it < 8; ++it) {
    int n = 4 + static_cast<int>(rng.below(4));
    Graph g = random_connected_graph(rng.next(), n, static_cast<int>(rng.below(n)));
    int bn = haven_order_max(g);
    int tw = treewidth_exact(g).width;
    REQUIRE(bn == tw + 1);
    auto found = haven_search(g, bn);
    REQUIRE(found.has_value());
    REQUIRE(verify_haven(g, *found, bn - 1).empty());
    REQUIRE_FALSE(haven_search(g, bn + 1).has_value());
  }
}

TEST_CASE("duality-backed existence beyond the search bound") {
  Graph g = Graph::grid_window({0, 2, 0, 2});  // 9 vertices: search bound is 7
  auto r = haven_of_order(g, 4);               // tw + 1
  REQUIRE(r.kind == HavenResult::Kind::ExistsByDuality);
  REQUIRE_FALSE(haven_of_order(g, 5).exists());
}
