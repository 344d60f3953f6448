#pragma once

#include "ccr/arena.hpp"

namespace ccr {

/// Winner partition plus the data both positional strategies are read from:
/// robber side follows decreasing `robber_rank` toward the target set,
/// cop side follows `cop_layer`/`cop_rank` into the layer's trap.
struct WinningSets {
  std::vector<std::uint8_t> robber_wins;
  std::vector<std::uint8_t> target;
  std::vector<std::int32_t> robber_rank;  // distance-to-target ranks inside the robber region
  std::vector<std::int32_t> cop_layer;    // removal iteration; -1 in the robber region
  std::vector<std::uint8_t> cop_in_trap;  // state lies in its layer's visit-free trap
  std::vector<std::int32_t> cop_rank;     // attractor rank toward the trap

  long robber_win_count() const {
    long c = 0;
    for (auto b : robber_wins) c += b;
    return c;
  }
};

namespace solver_detail {

struct AttrResult {
  std::vector<std::uint8_t> in;
  std::vector<std::int32_t> rank;
};

/// Distinct-successor counts plus the capture edges, computed in one pass
/// so attractors never rescan the whole arena for the sink's predecessors.
struct EdgeCache {
  std::vector<std::int32_t> outdeg;
  std::vector<long> preds_of_sink;

  explicit EdgeCache(const Arena& a) {
    outdeg.assign(a.size(), 0);
    for (long s = 0; s < a.size(); ++s) {
      auto succ = a.successors(s);
      outdeg[s] = static_cast<std::int32_t>(succ.size());
      if (std::binary_search(succ.begin(), succ.end(), a.sink())) preds_of_sink.push_back(s);
    }
  }

  std::vector<long> preds(const Arena& a, long t) const {
    if (t == a.sink()) return preds_of_sink;
    return a.predecessors(t);
  }
};

/// Backward attractor for `player` toward `seeds` inside the subgame
/// `alive`, with counter bookkeeping for the opposing (universal) side.
/// `removed_succ` counts successors already removed from the subgame.
inline AttrResult attract(const Arena& a, const EdgeCache& edges, bool player_is_cop,
                          const std::vector<std::uint8_t>& alive,
                          const std::vector<std::uint8_t>& seeds,
                          const std::vector<std::int32_t>& removed_succ) {
  const long n = a.size();
  AttrResult res;
  res.in.assign(n, 0);
  res.rank.assign(n, -1);
  std::vector<std::int32_t> counter(n, -1);
  std::vector<long> queue;
  for (long s = 0; s < n; ++s) {
    if (alive[s] && seeds[s]) {
      res.in[s] = 1;
      res.rank[s] = 0;
      queue.push_back(s);
    }
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    long t = queue[qi];
    for (long p : edges.preds(a, t)) {
      if (!alive[p] || res.in[p]) continue;
      bool existential = (a.is_cop_turn(p) || p == a.sink()) == player_is_cop;
      if (existential) {
        res.in[p] = 1;
        res.rank[p] = res.rank[t] + 1;
        queue.push_back(p);
      } else {
        if (counter[p] < 0) counter[p] = edges.outdeg[p] - removed_succ[p];
        if (--counter[p] == 0) {
          res.in[p] = 1;
          res.rank[p] = res.rank[t] + 1;
          queue.push_back(p);
        }
      }
    }
  }
  return res;
}

}  // namespace solver_detail

/// Exact Büchi solve: the robber wins iff he avoids capture and visits
/// `target` infinitely often. Classical iterated-attractor fixed point;
/// positional strategies for both sides are encoded in the result.
inline WinningSets solve_buchi(const Arena& a, const std::vector<std::uint8_t>& target) {
  const long n = a.size();
  WinningSets w;
  w.target = target;
  w.robber_wins.assign(n, 0);
  w.robber_rank.assign(n, -1);
  w.cop_layer.assign(n, -1);
  w.cop_in_trap.assign(n, 0);
  w.cop_rank.assign(n, -1);

  solver_detail::EdgeCache edges(a);
  std::vector<std::int32_t> removed_succ(n, 0);
  std::vector<std::uint8_t> alive(n, 1);

  std::vector<std::uint8_t> seeds(n, 0);
  for (int iter = 0;; ++iter) {
    for (long s = 0; s < n; ++s) seeds[s] = alive[s] && target[s];
    auto reach = solver_detail::attract(a, edges, /*player_is_cop=*/false, alive, seeds, removed_succ);
    std::vector<std::uint8_t> trap(n, 0);
    long trap_size = 0;
    for (long s = 0; s < n; ++s) {
      if (alive[s] && !reach.in[s]) {
        trap[s] = 1;
        ++trap_size;
      }
    }
    if (trap_size == 0) {
      for (long s = 0; s < n; ++s) {
        if (alive[s]) {
          w.robber_wins[s] = 1;
          w.robber_rank[s] = reach.rank[s];
        }
      }
      break;
    }
    auto removed = solver_detail::attract(a, edges, /*player_is_cop=*/true, alive, trap, removed_succ);
    for (long s = 0; s < n; ++s) {
      if (!removed.in[s]) continue;
      alive[s] = 0;
      w.cop_layer[s] = iter;
      w.cop_in_trap[s] = trap[s];
      w.cop_rank[s] = removed.rank[s];
    }
    for (long s = 0; s < n; ++s) {
      if (!removed.in[s]) continue;
      for (long p : edges.preds(a, s)) {
        if (alive[p]) ++removed_succ[p];
      }
    }
  }
  return w;
}

/// Safety solve: the robber wins iff he forever avoids capture and keeps
/// his vertex inside `allowed`. One cop attractor to the bad set.
inline WinningSets solve_safety(const Arena& a, const std::vector<std::uint8_t>& allowed) {
  const long n = a.size();
  solver_detail::EdgeCache edges(a);
  std::vector<std::int32_t> removed_succ(n, 0);
  std::vector<std::uint8_t> alive(n, 1), bad(n, 0);
  bad[a.sink()] = 1;
  for (long s = 0; s < n; ++s) {
    if (s != a.sink() && !allowed[a.decode(s).robber]) bad[s] = 1;
  }
  auto reach = solver_detail::attract(a, edges, /*player_is_cop=*/true, alive, bad, removed_succ);
  WinningSets w;
  w.target = allowed;  // by convention: the region the robber must hold
  w.robber_wins.assign(n, 0);
  w.robber_rank.assign(n, -1);
  w.cop_layer.assign(n, -1);
  w.cop_in_trap.assign(n, 0);
  w.cop_rank = reach.rank;
  for (long s = 0; s < n; ++s) {
    if (!reach.in[s]) {
      w.robber_wins[s] = 1;
      w.robber_rank[s] = 0;
    } else {
      w.cop_layer[s] = 0;
    }
  }
  return w;
}

/// Target set for a protect-ball objective: boundary states (cops to move)
/// with the robber inside the ball.
inline std::vector<std::uint8_t> ball_target(const Arena& a, Vertex center, int radius) {
  auto dist = a.graph().multi_source_dist_capped({center}, radius);
  std::vector<std::uint8_t> t(a.size(), 0);
  for (long s = 0; s < a.size() - 1; ++s) {
    if (!a.is_cop_turn(s)) continue;
    if (dist[a.decode(s).robber] >= 0) t[s] = 1;
  }
  return t;
}

/// CopWin predicate: some initial cop placement defeats every robber
/// placement made in full knowledge of the cops.
inline bool copwin(const Arena& a, const WinningSets& w) {
  bool found = false;
  a.for_each_tuple([&](const std::vector<Vertex>& cops) {
    if (found) return;
    bool all_robber_placements_lose = true;
    for (Vertex r = 0; r < a.graph().size() && all_robber_placements_lose; ++r) {
      if (a.unsafe(cops, r)) continue;  // placing there is immediate capture
      if (w.robber_wins[a.id(cops, r, Phase::CopsToMove)]) all_robber_placements_lose = false;
    }
    if (all_robber_placements_lose) found = true;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Independent oracle: the same winner partition computed by bounded-horizon
// minimax sweeps over forward edges (no predecessor lists, no counters).
// The sweep budget caps total lookahead at 2 * |states| plies.

namespace solver_detail {

inline std::vector<std::uint8_t> sweep_reach(const Arena& a, bool player_is_cop,
                                             const std::vector<std::uint8_t>& alive,
                                             const std::vector<std::uint8_t>& seeds, long& budget) {
  const long n = a.size();
  std::vector<std::uint8_t> in(n, 0);
  for (long s = 0; s < n; ++s) in[s] = alive[s] && seeds[s];
  bool changed = true;
  while (changed && budget > 0) {
    changed = false;
    --budget;
    for (long s = 0; s < n; ++s) {
      if (!alive[s] || in[s]) continue;
      bool existential = (a.is_cop_turn(s) || s == a.sink()) == player_is_cop;
      bool enter;
      if (existential) {
        enter = false;
        for (long t : a.successors(s)) {
          if (alive[t] && in[t]) {
            enter = true;
            break;
          }
        }
      } else {
        enter = true;
        for (long t : a.successors(s)) {
          if (alive[t] && !in[t]) {
            enter = false;
            break;
          }
        }
      }
      if (enter) {
        in[s] = 1;
        changed = true;
      }
    }
  }
  return in;
}

}  // namespace solver_detail

/// Winner bitmap (robber side) or nullopt when the sweep budget ran out
/// before the fixed point stabilized.
inline std::optional<std::vector<std::uint8_t>> buchi_minimax(const Arena& a,
                                                              const std::vector<std::uint8_t>& target) {
  const long n = a.size();
  long budget = 2 * n;
  std::vector<std::uint8_t> alive(n, 1), seeds(n, 0);
  while (true) {
    for (long s = 0; s < n; ++s) seeds[s] = alive[s] && target[s];
    auto reach = solver_detail::sweep_reach(a, false, alive, seeds, budget);
    std::vector<std::uint8_t> trap(n, 0);
    long trap_size = 0;
    for (long s = 0; s < n; ++s) {
      if (alive[s] && !reach[s]) {
        trap[s] = 1;
        ++trap_size;
      }
    }
    if (trap_size == 0) return alive;
    auto removed = solver_detail::sweep_reach(a, true, alive, trap, budget);
    for (long s = 0; s < n; ++s) {
      if (removed[s]) alive[s] = 0;
    }
    if (budget <= 0) return std::nullopt;
  }
}

/// Saturating visit-count value iteration: V(s) = forceable number of
/// target visits, capped at |states|+1. The robber wins iff V saturates.
/// Exact once a full sweep changes nothing; nullopt if the sweep budget
/// runs out first. A second, slower cross-check used on small arenas.
inline std::optional<std::vector<std::uint8_t>> buchi_visit_value_iteration(
    const Arena& a, const std::vector<std::uint8_t>& target, long max_sweeps = -1) {
  const long n = a.size();
  const long cap = n + 1;
  if (max_sweeps < 0) max_sweeps = 8 * n + 64;
  std::vector<long> v(n, 0);
  for (long sweep = 0; sweep < max_sweeps; ++sweep) {
    bool changed = false;
    bool forward = (sweep % 2 == 0);
    for (long i = 0; i < n; ++i) {
      long s = forward ? i : n - 1 - i;
      bool maximizer = !a.is_cop_turn(s) && s != a.sink();
      long best = maximizer ? 0 : cap;
      auto succ = a.successors(s);
      for (long t : succ) best = maximizer ? std::max(best, v[t]) : std::min(best, v[t]);
      long nv = std::min(cap, (target[s] ? 1 : 0) + best);
      if (nv != v[s]) {
        v[s] = nv;
        changed = true;
      }
    }
    if (!changed) {
      std::vector<std::uint8_t> win(n, 0);
      for (long s = 0; s < n; ++s) win[s] = v[s] >= cap;
      return win;
    }
  }
  return std::nullopt;
}

}  // namespace ccr
