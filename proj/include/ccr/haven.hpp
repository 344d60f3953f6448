#pragma once

#include <functional>
#include <map>

#include "ccr/graph.hpp"
#include "ccr/treewidth.hpp"

namespace ccr {

/// A haven of the given order: beta maps every vertex set with fewer than
/// `order` vertices to a connected component of G - X, any two images
/// touching. `beta` returns the component as a sorted vertex list.
struct Haven {
  int order = 0;
  std::function<std::vector<Vertex>(const std::vector<Vertex>&)> beta;
};

struct HavenResult {
  enum class Kind { Constructed, ExistsByDuality, None };
  Kind kind = Kind::None;
  Haven haven;  // Constructed only

  bool exists() const { return kind != Kind::None; }
};

namespace haven_detail {

inline std::vector<Vertex> component_of(const Graph& g, const std::vector<Vertex>& removed,
                                        Vertex inside) {
  std::vector<char> blocked(g.size(), 0);
  for (Vertex v : removed) blocked[v] = 1;
  if (blocked[inside]) throw DomainError("haven: seed vertex removed");
  std::vector<Vertex> out{inside};
  std::vector<Vertex> stack{inside};
  std::vector<char> seen(g.size(), 0);
  seen[inside] = 1;
  while (!stack.empty()) {
    Vertex a = stack.back();
    stack.pop_back();
    for (Vertex b : g.neighbors(a)) {
      if (seen[b] || blocked[b]) continue;
      seen[b] = 1;
      out.push_back(b);
      stack.push_back(b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace haven_detail

/// Complete graphs: everything left over is one component. bn(K_t) = t.
inline Haven haven_complete(const Graph& g, int k) {
  const int t = g.size();
  if (k < 1 || k > t) throw DomainError(cat("K_", t, " has no haven of order ", k));
  Haven h;
  h.order = k;
  int n = g.size();
  h.beta = [n, k](const std::vector<Vertex>& removed) {
    if (static_cast<int>(removed.size()) >= k) throw DomainError("haven: |X| must be < order");
    std::vector<char> blocked(n, 0);
    for (Vertex v : removed) blocked[v] = 1;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
      if (!blocked[v]) out.push_back(v);
    return out;
  };
  return h;
}

/// Grid windows: with fewer than min(width,height) removals some row and
/// some column stay untouched; their cross pins the chosen component.
inline Haven haven_grid(const Graph& g, int k) {
  if (!g.has_grid_codec()) throw DomainError("haven_grid needs a grid window");
  const GridRect r = g.grid_rect();
  const int order_max = std::min(r.width(), r.height());
  if (k < 1 || k > order_max) throw DomainError(cat("grid haven order ", k, " exceeds ", order_max));
  Haven h;
  h.order = k;
  const Graph* gp = &g;
  h.beta = [gp, k, r](const std::vector<Vertex>& removed) {
    if (static_cast<int>(removed.size()) >= k) throw DomainError("haven: |X| must be < order");
    std::vector<char> row_hit(r.height(), 0), col_hit(r.width(), 0);
    for (Vertex v : removed) {
      auto c = gp->coord(v);
      row_hit[c.y - r.y_min] = 1;
      col_hit[c.x - r.x_min] = 1;
    }
    int free_row = -1, free_col = -1;
    for (int y = 0; y < r.height() && free_row < 0; ++y)
      if (!row_hit[y]) free_row = y + r.y_min;
    for (int x = 0; x < r.width() && free_col < 0; ++x)
      if (!col_hit[x]) free_col = x + r.x_min;
    if (free_row < 0 || free_col < 0) throw std::logic_error("grid haven: no free cross");
    return haven_detail::component_of(*gp, removed, gp->grid_vertex(free_col, free_row));
  };
  return h;
}

/// Exhaustive component-choice search for a haven of order k, |V| <= 7.
/// Subsets are assigned in size order; touching plus the containment
/// forced between nested subsets prune the tree.
inline std::optional<Haven> haven_search(const Graph& g, int k) {
  const int n = g.size();
  if (n > 7) throw BudgetError("generic haven search is limited to 7 vertices");
  if (k < 1) return std::nullopt;
  std::vector<unsigned> adj(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) adj[v] |= 1u << u;
  auto closed_nbrs = [&](unsigned m) {
    unsigned out = m;
    for (int v = 0; v < n; ++v)
      if (m & (1u << v)) out |= adj[v];
    return out;
  };
  // components of G - X for every mask X with |X| < k
  std::vector<unsigned> masks;
  for (unsigned X = 0; X < (1u << n); ++X)
    if (__builtin_popcount(X) < k) masks.push_back(X);
  std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::map<unsigned, std::vector<unsigned>> comps;
  for (unsigned X : masks) {
    std::vector<unsigned> cs;
    unsigned left = ((1u << n) - 1) & ~X;
    while (left) {
      unsigned seed = left & (~left + 1);
      unsigned comp = seed;
      while (true) {
        unsigned grown = (comp | closed_nbrs(comp)) & ~X;
        if (grown == comp) break;
        comp = grown;
      }
      cs.push_back(comp);
      left &= ~comp;
    }
    if (cs.empty()) return std::nullopt;  // X covers everything: no component to pick
    comps[X] = cs;
  }

  std::map<unsigned, unsigned> chosen;
  long nodes = 0;
  std::function<bool(size_t)> assign = [&](size_t idx) -> bool {
    if (++nodes > 20'000'000) throw BudgetError("haven search exploded");
    if (idx == masks.size()) return true;
    unsigned X = masks[idx];
    for (unsigned comp : comps[X]) {
      bool ok = true;
      unsigned touch_zone = comp | closed_nbrs(comp);
      for (auto& [Y, cY] : chosen) {
        if (!(cY & touch_zone)) {
          ok = false;  // images must intersect or share an edge
          break;
        }
        if ((Y & ~X) == 0 && (comp & ~cY)) {
          ok = false;  // Y subset of X: beta(X) must lie inside beta(Y)
          break;
        }
        if ((X & ~Y) == 0 && (cY & ~comp)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen[X] = comp;
      if (assign(idx + 1)) return true;
      chosen.erase(X);
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;

  Haven h;
  h.order = k;
  auto table = std::make_shared<std::map<unsigned, unsigned>>(std::move(chosen));
  h.beta = [table, k, n](const std::vector<Vertex>& removed) {
    if (static_cast<int>(removed.size()) >= k) throw DomainError("haven: |X| must be < order");
    unsigned X = 0;
    for (Vertex v : removed) X |= 1u << v;
    auto it = table->find(X);
    if (it == table->end()) throw DomainError("haven: set outside the table");
    std::vector<Vertex> out;
    for (int v = 0; v < n; ++v)
      if (it->second & (1u << v)) out.push_back(v);
    return out;
  };
  return h;
}

/// Maximum haven order of a small graph, found by searching upward.
inline int haven_order_max(const Graph& g) {
  int k = 1;
  while (k <= g.size() + 1 && haven_search(g, k)) ++k;
  return k - 1;
}

inline bool is_complete(const Graph& g) {
  for (Vertex v = 0; v < g.size(); ++v)
    if (static_cast<int>(g.neighbors(v).size()) != g.size() - 1) return false;
  return true;
}

/// Haven of order k, or a duality-backed existence answer where only the
/// construction (not the existence) is out of reach.
inline HavenResult haven_of_order(const Graph& h, int k) {
  HavenResult res;
  if (k < 1) return res;
  if (is_complete(h)) {
    if (k <= h.size()) {
      res.kind = HavenResult::Kind::Constructed;
      res.haven = haven_complete(h, k);
    }
    return res;
  }
  if (h.has_grid_codec() && k <= std::min(h.grid_rect().width(), h.grid_rect().height())) {
    res.kind = HavenResult::Kind::Constructed;
    res.haven = haven_grid(h, k);
    return res;
  }
  if (h.size() <= 7) {
    auto found = haven_search(h, k);
    if (found) {
      res.kind = HavenResult::Kind::Constructed;
      res.haven = std::move(*found);
    }
    return res;
  }
  if (h.size() <= 12) {
    // havens of order tw+1 exist and none larger; construction omitted
    if (k <= treewidth_exact(h).width + 1) res.kind = HavenResult::Kind::ExistsByDuality;
    return res;
  }
  throw BudgetError("haven_of_order: graph too large");
}

/// Exhaustively re-checks the haven laws on every pair of subsets of size
/// at most `max_set`. Empty string when all pairs pass.
inline std::string verify_haven(const Graph& g, const Haven& h, int max_set) {
  std::vector<std::vector<Vertex>> sets{{}};
  std::function<void(std::vector<Vertex>&, Vertex)> gen = [&](std::vector<Vertex>& cur, Vertex from) {
    if (static_cast<int>(cur.size()) >= std::min(max_set, h.order - 1)) return;
    for (Vertex v = from; v < g.size(); ++v) {
      cur.push_back(v);
      sets.push_back(cur);
      gen(cur, v + 1);
      cur.pop_back();
    }
  };
  std::vector<Vertex> cur;
  gen(cur, 0);
  std::vector<std::vector<Vertex>> imgs;
  for (const auto& X : sets) {
    auto b = h.beta(X);
    if (b.empty()) return cat("beta is empty on a set of size ", X.size());
    // connected component sanity
    auto comp = haven_detail::component_of(g, X, b[0]);
    if (comp != b) return "beta image is not a full component";
    imgs.push_back(std::move(b));
  }
  for (size_t i = 0; i < sets.size(); ++i) {
    for (size_t j = i + 1; j < sets.size(); ++j) {
      const auto& A = imgs[i];
      const auto& B = imgs[j];
      bool touch = false;
      std::vector<char> inB(g.size(), 0);
      for (Vertex v : B) inB[v] = 1;
      for (Vertex v : A) {
        if (inB[v]) touch = true;
        for (Vertex u : g.neighbors(v))
          if (inB[u]) touch = true;
      }
      if (!touch) return cat("images of sets #", i, " and #", j, " do not touch");
      auto subset = [](const std::vector<Vertex>& small, const std::vector<Vertex>& big) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
      };
      if (subset(sets[i], sets[j]) && !subset(imgs[j], imgs[i]))
        return "monotonicity violated on nested sets";
      if (subset(sets[j], sets[i]) && !subset(imgs[i], imgs[j]))
        return "monotonicity violated on nested sets";
    }
  }
  return {};
}

}  // namespace ccr
