#pragma once

#include <fstream>
#include <map>

#include "ccr/core.hpp"
#include "ccr/graph.hpp"
#include "ccr/treedecomp.hpp"

namespace ccr {

inline Graph path_graph(int n) {
  if (n < 1) throw ConfigError("path graph needs >= 1 vertex");
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v + 1 < n; ++v) {
    adj[v].push_back(v + 1);
    adj[v + 1].push_back(v);
  }
  return Graph::from_adjacency(GraphKind::Explicit, std::move(adj));
}

inline Graph complete_graph(int n) {
  if (n < 1) throw ConfigError("complete graph needs >= 1 vertex");
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) adj[u].push_back(v);
  return Graph::from_adjacency(GraphKind::Explicit, std::move(adj));
}

/// d-regular tree window: every vertex has degree d in the infinite tree;
/// the window keeps everything up to `depth` and marks the cut leaves as
/// window boundary.
inline Graph regular_tree(int d, int depth) {
  if (d < 2 || depth < 0) throw ConfigError("regular_tree needs d >= 2, depth >= 0");
  std::vector<std::vector<Vertex>> adj(1);
  std::vector<int> level{0};
  std::vector<Vertex> frontier{0};
  for (int lv = 1; lv <= depth; ++lv) {
    std::vector<Vertex> next;
    for (Vertex p : frontier) {
      int children = (lv == 1) ? d : d - 1;
      for (int c = 0; c < children; ++c) {
        Vertex v = static_cast<Vertex>(adj.size());
        adj.emplace_back();
        level.push_back(lv);
        adj[p].push_back(v);
        adj[v].push_back(p);
        next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  std::vector<bool> boundary(adj.size(), false);
  for (size_t v = 0; v < adj.size(); ++v) boundary[v] = (level[v] == depth && depth > 0);
  return Graph::from_adjacency(GraphKind::Tree, std::move(adj), std::move(boundary));
}

/// Uniform random tree on n vertices (random attachment), seeded.
inline Graph random_tree(std::uint64_t seed, int n) {
  if (n < 1) throw ConfigError("random_tree needs >= 1 vertex");
  SplitMix rng(mix64(seed ^ 0x7472656555ULL));
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 1; v < n; ++v) {
    Vertex p = static_cast<Vertex>(rng.below(v));
    adj[p].push_back(v);
    adj[v].push_back(p);
  }
  return Graph::from_adjacency(GraphKind::Tree, std::move(adj));
}

/// Random connected graph: a random spanning tree plus `extra` random edges.
inline Graph random_connected_graph(std::uint64_t seed, int n, int extra) {
  SplitMix rng(mix64(seed ^ 0x636f6e6eULL));
  std::vector<std::vector<Vertex>> adj(n);
  auto has_edge = [&](Vertex a, Vertex b) {
    return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
  };
  auto add_edge = [&](Vertex a, Vertex b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (Vertex v = 1; v < n; ++v) add_edge(static_cast<Vertex>(rng.below(v)), v);
  for (int e = 0; e < extra; ++e) {
    Vertex a = static_cast<Vertex>(rng.below(n));
    Vertex b = static_cast<Vertex>(rng.below(n));
    if (a != b && !has_edge(a, b)) add_edge(a, b);
  }
  return Graph::from_adjacency(GraphKind::Explicit, std::move(adj));
}

/// Subdivide every edge `times` times. Original vertices keep their ids;
/// internal vertices are appended. Useful for building quasi-isometric
/// hosts with multiplicative stretch times+1.
inline Graph subdivide(const Graph& g, int times) {
  if (times < 0) throw ConfigError("subdivide: negative count");
  std::vector<std::vector<Vertex>> adj(g.size());
  auto add_edge = [&](Vertex a, Vertex b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (Vertex v = 0; v < g.size(); ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (u < v) continue;
      Vertex prev = v;
      for (int i = 0; i < times; ++i) {
        Vertex mid = static_cast<Vertex>(adj.size());
        adj.emplace_back();
        add_edge(prev, mid);
        prev = mid;
      }
      add_edge(prev, u);
    }
  }
  return Graph::from_adjacency(GraphKind::Composed, std::move(adj));
}

/// Doubled triangle (three branch vertices, each pair joined by two
/// parallel strands) with every strand subdivided i times. i >= 1 keeps the
/// graph simple. Branch vertices are 0,1,2 and have degree 4.
inline Graph subdivided_multitriangle(int i) {
  if (i < 1) throw ConfigError("subdivided_multitriangle needs i >= 1");
  std::vector<std::vector<Vertex>> adj(3);
  auto add_edge = [&](Vertex a, Vertex b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  auto strand = [&](Vertex a, Vertex b) {
    Vertex prev = a;
    for (int k = 0; k < i; ++k) {
      Vertex mid = static_cast<Vertex>(adj.size());
      adj.emplace_back();
      add_edge(prev, mid);
      prev = mid;
    }
    add_edge(prev, b);
  };
  for (auto [a, b] : {std::pair<Vertex, Vertex>{0, 1}, {1, 2}, {2, 0}}) {
    strand(a, b);
    strand(a, b);
  }
  return Graph::from_adjacency(GraphKind::SubdividedClique, std::move(adj));
}

struct SeriesParallelGraph {
  Graph graph;
  TreeDecomposition decomp;  // width exactly 2
};

/// Random 2-tree on `size` vertices with its natural width-2 decomposition.
inline SeriesParallelGraph series_parallel(std::uint64_t seed, int size) {
  if (size < 3) throw ConfigError("series_parallel needs >= 3 vertices");
  SplitMix rng(mix64(seed ^ 0x73706772ULL));
  std::vector<std::vector<Vertex>> adj(size);
  auto add_edge = [&](Vertex a, Vertex b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  TreeDecomposition td;
  td.bags.push_back({0, 1, 2});
  td.tree.emplace_back();
  add_edge(0, 1);
  add_edge(0, 2);
  add_edge(1, 2);
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {0, 2}, {1, 2}};
  std::map<std::pair<Vertex, Vertex>, int> edge_node{{{0, 1}, 0}, {{0, 2}, 0}, {{1, 2}, 0}};
  for (Vertex v = 3; v < size; ++v) {
    auto [a, b] = edges[rng.below(edges.size())];
    add_edge(a, v);
    add_edge(b, v);
    int node = td.node_count();
    td.bags.push_back({a, b, v});
    td.tree.emplace_back();
    int parent = edge_node.at({a, b});
    td.tree[node].push_back(parent);
    td.tree[parent].push_back(node);
    edges.push_back({std::min(a, v), std::max(a, v)});
    edges.push_back({std::min(b, v), std::max(b, v)});
    edge_node[{std::min(a, v), std::max(a, v)}] = node;
    edge_node[{std::min(b, v), std::max(b, v)}] = node;
  }
  SeriesParallelGraph out{Graph::from_adjacency(GraphKind::Explicit, std::move(adj)), std::move(td)};
  if (auto err = check_tree_decomposition(out.graph, out.decomp); !err.empty())
    throw ConfigError("series_parallel decomposition: " + err);
  return out;
}

/// Hub family: for each branch index i in [2, i_max], an i-regular tree T_i
/// with a universal vertex, every edge subdivided i-1 times, all universal
/// vertices identified into the single hub z. Branch i's tree is truncated
/// at depths[i].
struct HubBranch {
  int index = 0;                              // family index i
  std::vector<Vertex> tree;                   // T_i vertices, BFS order from the root
  std::vector<int> tree_parent;               // position of parent in `tree`, -1 for root
  std::vector<std::vector<int>> tree_adj;     // positions adjacent in T_i (window)
  std::vector<int> tree_depth;                // depth of each position
  std::map<std::pair<int, int>, Path> tree_edge_path;  // (parent pos, child pos) -> path in g
  std::vector<Path> z_path;                   // per position: path z .. tree vertex

  const Path& edge_path(int a, int b) const {
    auto it = tree_edge_path.find({std::min(a, b), std::max(a, b)});
    if (it == tree_edge_path.end()) throw DomainError("hub: not a tree edge");
    return it->second;
  }
};

struct HubGraphData {
  Graph graph;
  Vertex z = 0;
  int i_max = 0;
  std::vector<HubBranch> branches;  // branches[i - 2] has index i
  std::vector<int> branch_of;       // per vertex: family index, 0 for z

  const HubBranch& branch(int i) const {
    if (i < 2 || i > i_max) throw DomainError(cat("hub branch ", i, " not materialized (i_max=", i_max, ")"));
    return branches[i - 2];
  }
};

inline HubGraphData hub_graph(int i_max, const std::vector<int>& depths) {
  if (i_max < 2) throw ConfigError("hub_graph needs i_max >= 2");
  if (static_cast<int>(depths.size()) != i_max + 1) throw ConfigError("hub_graph: depths must have i_max+1 entries");
  std::vector<std::vector<Vertex>> adj(1);  // z = 0
  std::vector<int> branch_of{0};
  auto new_vertex = [&](int br) {
    adj.emplace_back();
    branch_of.push_back(br);
    return static_cast<Vertex>(adj.size() - 1);
  };
  auto add_edge = [&](Vertex a, Vertex b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  // Subdivided path of length `len` between existing vertices a and b.
  auto add_path = [&](Vertex a, Vertex b, int len, int br) {
    Path p{a};
    Vertex prev = a;
    for (int k = 0; k < len - 1; ++k) {
      Vertex mid = new_vertex(br);
      add_edge(prev, mid);
      prev = mid;
      p.push_back(mid);
    }
    add_edge(prev, b);
    p.push_back(b);
    return p;
  };

  HubGraphData data;
  data.i_max = i_max;
  for (int i = 2; i <= i_max; ++i) {
    const int depth = depths[i];
    if (depth < 1) throw ConfigError("hub_graph: branch depth must be >= 1");
    HubBranch br;
    br.index = i;
    // Tree vertices first (BFS order), so parents get lower ids than children.
    br.tree.push_back(new_vertex(i));
    br.tree_parent.push_back(-1);
    br.tree_depth.push_back(0);
    size_t head = 0;
    while (head < br.tree.size()) {
      int pos = static_cast<int>(head++);
      int d = br.tree_depth[pos];
      if (d == depth) continue;
      int children = (d == 0) ? i : i - 1;
      for (int c = 0; c < children; ++c) {
        br.tree.push_back(new_vertex(i));
        br.tree_parent.push_back(pos);
        br.tree_depth.push_back(d + 1);
      }
    }
    br.tree_adj.resize(br.tree.size());
    for (int pos = 1; pos < static_cast<int>(br.tree.size()); ++pos) {
      int par = br.tree_parent[pos];
      br.tree_adj[par].push_back(pos);
      br.tree_adj[pos].push_back(par);
      br.tree_edge_path[{par, pos}] = add_path(br.tree[par], br.tree[pos], i, i);
    }
    br.z_path.resize(br.tree.size());
    for (int pos = 0; pos < static_cast<int>(br.tree.size()); ++pos) {
      br.z_path[pos] = add_path(0, br.tree[pos], i, i);
    }
    data.branches.push_back(std::move(br));
  }
  // Truncated tree leaves sit on the window boundary.
  std::vector<bool> boundary(adj.size(), false);
  for (const auto& br : data.branches) {
    for (size_t pos = 0; pos < br.tree.size(); ++pos) {
      if (br.tree_depth[pos] == depths[br.index]) boundary[br.tree[pos]] = true;
    }
  }
  data.branch_of = std::move(branch_of);
  data.graph = Graph::from_adjacency(GraphKind::HubWindow, std::move(adj), std::move(boundary));
  return data;
}

inline HubGraphData hub_graph(int i_max, int depth) {
  return hub_graph(i_max, std::vector<int>(i_max + 1, depth));
}

inline Graph load_edge_list(std::istream& in) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex max_v = -1;
  Vertex a, b;
  while (in >> a >> b) {
    if (a < 0 || b < 0) throw ConfigError("edge list: negative vertex id");
    edges.emplace_back(a, b);
    max_v = std::max({max_v, a, b});
  }
  if (max_v < 0) throw ConfigError("edge list: empty");
  std::vector<std::vector<Vertex>> adj(max_v + 1);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return Graph::from_adjacency(GraphKind::Explicit, std::move(adj));
}

inline Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open edge list: " + path);
  return load_edge_list(in);
}

inline void save_edge_list(const Graph& g, std::ostream& out) {
  for (Vertex v = 0; v < g.size(); ++v)
    for (Vertex u : g.neighbors(v))
      if (v < u) out << v << " " << u << "\n";
}

}  // namespace ccr
