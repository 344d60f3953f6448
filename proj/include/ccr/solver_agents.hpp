#pragma once

#include "ccr/agents.hpp"
#include "ccr/buchi.hpp"

namespace ccr {

namespace solver_detail {

/// Lowest-id successor of a robber-phase winning state that decreases the
/// attractor rank toward the target set.
inline long robber_strategy_successor(const Arena& a, const WinningSets& w, long s) {
  long best = -1;
  for (long t : a.successors(s)) {
    if (t == a.sink() || !w.robber_wins[t]) continue;
    if (w.robber_rank[s] > 0 && w.robber_rank[t] != w.robber_rank[s] - 1) continue;
    if (best < 0) best = t;
  }
  if (best < 0) {
    // safety solves carry rank 0 everywhere: any winning successor works
    for (long t : a.successors(s)) {
      if (t != a.sink() && w.robber_wins[t]) return t;
    }
  }
  return best;
}

/// Successor choice for a cop-phase cop-winning state: descend the layer's
/// attractor, then circulate inside the visit-free trap.
inline long cop_strategy_successor(const Arena& a, const WinningSets& w, long s) {
  int layer = w.cop_layer[s];
  long fallback = -1;
  for (long t : a.successors(s)) {
    bool t_copwin = (t == a.sink()) || !w.robber_wins[t];
    if (!t_copwin) continue;
    if (!w.cop_in_trap[s]) {
      if (w.cop_layer[t] == layer && w.cop_rank[t] == w.cop_rank[s] - 1) return t;
    } else {
      if (w.cop_layer[t] == layer && w.cop_in_trap[t]) return t;
    }
    if (fallback < 0 || w.cop_layer[t] < w.cop_layer[fallback]) fallback = t;
  }
  return fallback;
}

/// Per-cop destinations realizing the transition from the engine's ordered
/// cop vector to the arena's sorted destination tuple.
inline std::vector<Vertex> assign_destinations(const Graph& g, const std::vector<Vertex>& cops,
                                               std::vector<Vertex> sorted_dest, int s_c) {
  std::sort(sorted_dest.begin(), sorted_dest.end());
  std::vector<Vertex> out(cops.size());
  do {
    bool ok = true;
    for (size_t j = 0; j < cops.size() && ok; ++j) {
      if (!g.dist_capped(cops[j], sorted_dest[j], s_c)) ok = false;
    }
    if (ok) return sorted_dest;
  } while (std::next_permutation(sorted_dest.begin(), sorted_dest.end()));
  throw std::logic_error("no legal assignment for the arena cop move");
}

}  // namespace solver_detail

/// Robber that plays the exact positional strategy extracted from a solved
/// arena where it is winning, and maximizes distance to the nearest cop
/// where it is not (or when the arena exceeds its budget).
class SolverRobber : public RobberAgent {
 public:
  SolverRobber(const Graph& g, int radius, long budget = 400'000, int speed = -1)
      : g_(g), radius_(radius), budget_(budget), speed_(speed < 0 ? g.size() : speed) {}

  std::string name() const override { return "solver"; }
  int declare_speed_weak(int, int) override { return speed_; }
  int declare_speed_strong(int) override { return speed_; }

  Objective choose_objective(const MatchContext& ctx) override {
    return Objective::protect_ball(ctx.public_center, radius_);
  }

  bool solver_backed() const { return arena_ != nullptr; }
  void set_home(Vertex v) { home_ = v; }

  Vertex place(const MatchContext& ctx, const std::vector<Vertex>& cops) override {
    ensure_solved(ctx);
    if (home_ != kNoVertex) return home_;
    if (arena_) {
      std::vector<Vertex> sorted(cops);
      std::sort(sorted.begin(), sorted.end());
      for (Vertex r = 0; r < g_.size(); ++r) {
        if (arena_->unsafe(sorted, r)) continue;
        if (sets_.robber_wins[arena_->id(sorted, r, Phase::CopsToMove)]) return r;
      }
    }
    // losing (or unsolved): start as far from the cops as possible
    if (cops.empty()) return ctx.public_center;
    auto d = g_.multi_source_dist_capped(cops, g_.size());
    Vertex best = 0;
    for (Vertex v = 1; v < g_.size(); ++v)
      if (d[v] > d[best]) best = v;
    return best;
  }

  Path step(const MatchContext& ctx, const GameState& st) override {
    auto opts = legal_robber_paths(ctx.g, st, ctx.params);
    if (arena_) {
      long s = arena_->id_unsorted(st.cops, st.robber, Phase::RobberToMove);
      if (sets_.robber_wins[s]) {
        long t = solver_detail::robber_strategy_successor(*arena_, sets_, s);
        if (t >= 0) return opts.path_to(arena_->decode(t).robber);
      }
    }
    // delay as long as possible
    if (st.cops.empty()) return {st.robber};
    int cap = g_.size();
    auto cop_dist = g_.multi_source_dist_capped(st.cops, cap);
    Vertex best = st.robber;
    for (Vertex v = 0; v < g_.size(); ++v) {
      if (!opts.reachable(v)) continue;
      if (cop_dist[v] > cop_dist[best] || (cop_dist[v] == cop_dist[best] && v < best)) best = v;
    }
    return opts.path_to(best);
  }

 private:
  void ensure_solved(const MatchContext& ctx) {
    if (tried_) return;
    tried_ = true;
    try {
      arena_ = std::make_unique<Arena>(g_, ctx.params, budget_);
    } catch (const BudgetError&) {
      arena_.reset();
      return;
    }
    sets_ = solve_buchi(*arena_, ball_target(*arena_, ctx.params.objective.center,
                                             ctx.params.objective.radius));
  }

  const Graph& g_;
  int radius_;
  long budget_;
  int speed_;
  Vertex home_ = kNoVertex;
  bool tried_ = false;
  std::unique_ptr<Arena> arena_;
  WinningSets sets_;
};

/// Cops playing the extracted positional strategy where the position is
/// cop-winning, greedy pursuit elsewhere.
class SolverCops : public ScriptedCopAgent {
 public:
  SolverCops(const Graph& g, int k, int s_c, int rho, long budget = 400'000)
      : ScriptedCopAgent(k, s_c, rho), g_(g), budget_(budget) {}

  std::string name() const override { return "solver"; }
  bool solver_backed() const { return arena_ != nullptr; }

  std::vector<Vertex> place(const MatchContext& ctx) override {
    ensure_solved(ctx);
    if (!placement_.empty()) return ScriptedCopAgent::place(ctx);
    if (arena_) {
      // a placement defeating every robber reply, when one exists
      std::vector<Vertex> found;
      arena_->for_each_tuple([&](const std::vector<Vertex>& cops) {
        if (!found.empty()) return;
        for (Vertex r = 0; r < g_.size(); ++r) {
          if (arena_->unsafe(cops, r)) continue;
          if (sets_.robber_wins[arena_->id(cops, r, Phase::CopsToMove)]) return;
        }
        found = cops;
      });
      if (!found.empty()) return found;
    }
    return ScriptedCopAgent::place(ctx);
  }

  std::vector<Vertex> step(const MatchContext& ctx, const GameState& st) override {
    if (arena_) {
      long s = arena_->id_unsorted(st.cops, st.robber, Phase::CopsToMove);
      if (!sets_.robber_wins[s]) {
        long t = solver_detail::cop_strategy_successor(*arena_, sets_, s);
        if (t >= 0) {
          std::vector<Vertex> dest;
          if (t == arena_->sink()) {
            dest = capture_tuple(st);
          } else {
            dest = arena_->decode(t).cops;
          }
          return solver_detail::assign_destinations(g_, st.cops, dest, s_c_);
        }
      }
    }
    auto dist = dist_to_targets(ctx.g, st.robber, st.cops, s_c_);
    std::vector<Vertex> dest;
    for (Vertex c : st.cops) dest.push_back(greedy_step(ctx.g, c, s_c_, dist));
    return dest;
  }

 private:
  std::vector<Vertex> capture_tuple(const GameState& st) const {
    // lowest capturing destination tuple, cop by cop
    std::vector<Vertex> dest = st.cops;
    for (size_t j = 0; j < st.cops.size(); ++j) {
      for (Vertex v : g_.ball(st.cops[j], s_c_)) {
        if (g_.dist_capped(st.robber, v, rho_)) {
          dest[j] = v;
          return dest;
        }
      }
    }
    throw std::logic_error("capture successor without a capturing tuple");
  }

  void ensure_solved(const MatchContext& ctx) {
    if (tried_) return;
    tried_ = true;
    try {
      arena_ = std::make_unique<Arena>(g_, ctx.params, budget_);
    } catch (const BudgetError&) {
      arena_.reset();
      return;
    }
    sets_ = solve_buchi(*arena_, ball_target(*arena_, ctx.params.objective.center,
                                             ctx.params.objective.radius));
  }

  const Graph& g_;
  long budget_;
  bool tried_ = false;
  std::unique_ptr<Arena> arena_;
  WinningSets sets_;
};

// ---------------------------------------------------------------------------
// Text export

inline void write_winner_table(const Arena& a, const WinningSets& w, std::ostream& out) {
  out << "ccr-winners 1\n";
  const auto& p = a.params();
  out << "params k=" << p.k << " sc=" << p.s_c << " sr=" << p.s_r << " rho=" << p.rho
      << " n=" << a.graph().size() << "\n";
  for (long s = 0; s < a.size() - 1; ++s) {
    auto d = a.decode(s);
    for (size_t j = 0; j < d.cops.size(); ++j) out << (j ? "," : "") << d.cops[j];
    if (d.cops.empty()) out << "-";
    out << "|" << d.robber << "|" << (d.phase == Phase::CopsToMove ? 'c' : 'r') << " "
        << (w.robber_wins[s] ? "robber" : "cops") << "\n";
  }
}

/// Positional strategy file: one move per decided state. Replayable through
/// the strategy-file agents.
inline void write_strategy_file(const Arena& a, const WinningSets& w, std::ostream& out) {
  out << "ccr-strategy 1\n";
  const auto& p = a.params();
  out << "params k=" << p.k << " sc=" << p.s_c << " sr=" << p.s_r << " rho=" << p.rho
      << " n=" << a.graph().size() << "\n";
  for (long s = 0; s < a.size() - 1; ++s) {
    auto d = a.decode(s);
    long t = -1;
    char side;
    if (d.phase == Phase::RobberToMove && w.robber_wins[s]) {
      side = 'r';
      t = solver_detail::robber_strategy_successor(a, w, s);
      if (t < 0) continue;
      out << "move r ";
      for (size_t j = 0; j < d.cops.size(); ++j) out << (j ? "," : "") << d.cops[j];
      if (d.cops.empty()) out << "-";
      out << "|" << d.robber << " -> " << a.decode(t).robber << "\n";
    } else if (d.phase == Phase::CopsToMove && !w.robber_wins[s]) {
      side = 'c';
      t = solver_detail::cop_strategy_successor(a, w, s);
      if (t < 0) continue;
      out << "move c ";
      for (size_t j = 0; j < d.cops.size(); ++j) out << (j ? "," : "") << d.cops[j];
      if (d.cops.empty()) out << "-";
      out << "|" << d.robber << " -> ";
      if (t == a.sink()) {
        out << "capture\n";
      } else {
        auto dd = a.decode(t);
        for (size_t j = 0; j < dd.cops.size(); ++j) out << (j ? "," : "") << dd.cops[j];
        if (dd.cops.empty()) out << "-";
        out << "\n";
      }
    }
    (void)side;
  }
}

}  // namespace ccr
