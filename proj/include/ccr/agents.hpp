#pragma once

#include "ccr/engine.hpp"

namespace ccr {

/// Distances from `source`, expanded only far enough to cover all targets
/// plus `extra` levels. Cheap when the targets are close.
inline std::vector<int> dist_to_targets(const Graph& g, Vertex source, const std::vector<Vertex>& targets,
                                        int extra) {
  std::vector<int> dist(g.size(), -1);
  std::vector<Vertex> frontier{source};
  dist[source] = 0;
  size_t found = 0;
  std::vector<char> is_target(g.size(), 0);
  for (Vertex t : targets) {
    if (!is_target[t]) {
      is_target[t] = 1;
      ++found;
    }
  }
  size_t hit = is_target[source] ? 1 : 0;
  int stop_at = -1;
  int depth = 0;
  while (!frontier.empty()) {
    if (hit == found && stop_at < 0) stop_at = depth + extra;
    if (stop_at >= 0 && depth >= stop_at) break;
    ++depth;
    std::vector<Vertex> next;
    for (Vertex a : frontier) {
      for (Vertex b : g.neighbors(a)) {
        if (dist[b] >= 0) continue;
        dist[b] = depth;
        if (is_target[b] && dist[b] >= 0) ++hit;
        next.push_back(b);
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

/// One greedy step: the vertex within `speed` of `from` minimizing the
/// given distance field (ties to the lowest id). -1 entries rank last.
inline Vertex greedy_step(const Graph& g, Vertex from, int speed, const std::vector<int>& dist) {
  Vertex best = from;
  long best_d = dist[from] < 0 ? g.size() + 1L : dist[from];
  for (Vertex v : g.ball(from, speed)) {
    long d = dist[v] < 0 ? g.size() + 1L : dist[v];
    if (d < best_d || (d == best_d && v < best)) {
      best = v;
      best_d = d;
    }
  }
  return best;
}

/// Base for the scripted cop agents: fixed declared parameters, placement
/// at the public center unless overridden.
class ScriptedCopAgent : public CopAgent {
 public:
  ScriptedCopAgent(int k, int s_c, int rho) : k_(k), s_c_(s_c), rho_(rho) {}

  int cop_count() const override { return k_; }
  std::pair<int, int> declare_weak() override { return {s_c_, rho_}; }
  int declare_speed() override { return s_c_; }
  int declare_reach(int) override { return rho_; }

  void set_placement(std::vector<Vertex> p) { placement_ = std::move(p); }

  std::vector<Vertex> place(const MatchContext& ctx) override {
    if (!placement_.empty()) {
      if (static_cast<int>(placement_.size()) != k_) throw ConfigError("placement size mismatch");
      return placement_;
    }
    return std::vector<Vertex>(k_, ctx.public_center);
  }

 protected:
  int k_, s_c_, rho_;
  std::vector<Vertex> placement_;
};

class StationaryCops : public ScriptedCopAgent {
 public:
  using ScriptedCopAgent::ScriptedCopAgent;
  std::string name() const override { return "stationary"; }
  std::vector<Vertex> step(const MatchContext&, const GameState& st) override { return st.cops; }
};

/// Every cop advances up to s_c along a shortest path toward the robber.
class GreedyCops : public ScriptedCopAgent {
 public:
  using ScriptedCopAgent::ScriptedCopAgent;
  std::string name() const override { return "greedy"; }

  std::vector<Vertex> step(const MatchContext& ctx, const GameState& st) override {
    if (st.cops.empty()) return {};
    auto dist = dist_to_targets(ctx.g, st.robber, st.cops, s_c_);
    std::vector<Vertex> dest;
    for (Vertex c : st.cops) dest.push_back(greedy_step(ctx.g, c, s_c_, dist));
    return dest;
  }
};

/// Room-layout geometry shared with the interception agent: the play
/// rectangle and the corridor rows crossing it.
struct LayoutHints {
  GridRect play_area;
  std::vector<int> corridor_rows;
};

/// Cop 0 chases the robber; the others camp the corridor rows below the
/// robber's column. Greedy everywhere the layout is unknown.
class InterceptCorridorCops : public ScriptedCopAgent {
 public:
  InterceptCorridorCops(int k, int s_c, int rho, std::optional<LayoutHints> hints = std::nullopt)
      : ScriptedCopAgent(k, s_c, rho), hints_(std::move(hints)) {}

  std::string name() const override { return "intercept-corridors"; }

  std::vector<Vertex> step(const MatchContext& ctx, const GameState& st) override {
    if (st.cops.empty()) return {};
    const Graph& g = ctx.g;
    auto chase = dist_to_targets(g, st.robber, st.cops, s_c_);
    std::vector<Vertex> dest;
    for (size_t j = 0; j < st.cops.size(); ++j) {
      if (j == 0 || !hints_ || !g.has_grid_codec()) {
        dest.push_back(greedy_step(g, st.cops[j], s_c_, chase));
        continue;
      }
      const auto& rows = hints_->corridor_rows;
      int row = rows[(j - 1) % rows.size()];
      int x = std::clamp(g.coord(st.robber).x, g.grid_rect().x_min, g.grid_rect().x_max);
      Vertex target = g.grid_vertex(x, row);
      auto dist = dist_to_targets(g, target, {st.cops[j]}, s_c_);
      dest.push_back(greedy_step(g, st.cops[j], s_c_, dist));
    }
    return dest;
  }

 private:
  std::optional<LayoutHints> hints_;
};

/// Seeded waypoint patrol. All cops walk the same closed loop of randomly
/// drawn waypoints near the center (phase-shifted by cop index), which
/// keeps the joint cop trajectory periodic and certification reachable.
class PatrolCops : public ScriptedCopAgent {
 public:
  PatrolCops(int k, int s_c, int rho, std::uint64_t seed, int waypoints = 3, int radius_steps = 80)
      : ScriptedCopAgent(k, s_c, rho), seed_(seed), count_(waypoints), radius_steps_(radius_steps) {}

  std::string name() const override { return cat("random(", seed_, ")"); }

  std::vector<Vertex> place(const MatchContext& ctx) override {
    const Graph& g = ctx.g;
    SplitMix rng(mix64(seed_ ^ 0x706174726f6cULL));
    int radius = radius_steps_ * s_c_;
    auto near_center = g.multi_source_dist_capped({ctx.public_center}, radius);
    waypoints_.clear();
    for (int tries = 0; tries < 200 && static_cast<int>(waypoints_.size()) < count_; ++tries) {
      Vertex v = static_cast<Vertex>(rng.below(g.size()));
      if (near_center[v] >= 0) waypoints_.push_back(v);
    }
    if (waypoints_.empty()) waypoints_.push_back(ctx.public_center);
    goal_.assign(k_, 0);
    for (int j = 0; j < k_; ++j) goal_[j] = j % static_cast<int>(waypoints_.size());
    return ScriptedCopAgent::place(ctx);
  }

  std::vector<Vertex> step(const MatchContext& ctx, const GameState& st) override {
    const Graph& g = ctx.g;
    std::vector<Vertex> dest;
    for (size_t j = 0; j < st.cops.size(); ++j) {
      Vertex target = waypoints_[goal_[j]];
      auto dist = dist_to_targets(g, target, {st.cops[j]}, s_c_);
      Vertex next = greedy_step(g, st.cops[j], s_c_, dist);
      if (next == target) goal_[j] = (goal_[j] + 1) % static_cast<int>(waypoints_.size());
      dest.push_back(next);
    }
    return dest;
  }

  std::uint64_t state_digest() const override {
    std::uint64_t h = mix64(seed_);
    for (int gl : goal_) h = hash_combine(h, static_cast<std::uint64_t>(gl));
    return h;
  }

 private:
  std::uint64_t seed_;
  int count_;
  int radius_steps_;
  std::vector<Vertex> waypoints_;
  std::vector<int> goal_;
};

/// Memoryless seeded random walk: each cop's move is drawn uniformly from
/// its legal ball via a hash of (seed, configuration). Deterministic under
/// replay, but the joint orbit rarely closes, so matches against it
/// typically end horizon-exhausted.
class RandomWalkCops : public ScriptedCopAgent {
 public:
  RandomWalkCops(int k, int s_c, int rho, std::uint64_t seed)
      : ScriptedCopAgent(k, s_c, rho), seed_(seed) {}

  std::string name() const override { return cat("random-walk(", seed_, ")"); }

  std::vector<Vertex> step(const MatchContext& ctx, const GameState& st) override {
    std::uint64_t h = mix64(seed_);
    for (Vertex c : st.cops) h = hash_combine(h, static_cast<std::uint64_t>(c));
    h = hash_combine(h, static_cast<std::uint64_t>(st.robber));
    std::vector<Vertex> dest;
    for (size_t j = 0; j < st.cops.size(); ++j) {
      auto ball = ctx.g.ball(st.cops[j], s_c_);
      dest.push_back(ball[hash_combine(h, j) % ball.size()]);
    }
    return dest;
  }

 private:
  std::uint64_t seed_;
};

/// Non-deterministic random cops (stateful RNG). Never certifiable: matches
/// against them can only end by capture or horizon exhaustion.
class StatefulRandomCops : public ScriptedCopAgent {
 public:
  StatefulRandomCops(int k, int s_c, int rho, std::uint64_t seed)
      : ScriptedCopAgent(k, s_c, rho), rng_(seed) {}

  std::string name() const override { return "random-stateful"; }
  bool certifiable() const override { return false; }

  std::vector<Vertex> step(const MatchContext& ctx, const GameState& st) override {
    std::vector<Vertex> dest;
    for (Vertex c : st.cops) {
      auto ball = ctx.g.ball(c, s_c_);
      dest.push_back(ball[rng_.below(ball.size())]);
    }
    return dest;
  }

 private:
  SplitMix rng_;
};

// ---------------------------------------------------------------------------
// Baseline robbers

/// Declares a fixed speed and sits on its chosen vertex forever.
class SitterRobber : public RobberAgent {
 public:
  SitterRobber(int s_r, int radius, std::optional<Vertex> home = std::nullopt)
      : s_r_(s_r), radius_(radius), home_(home) {}

  std::string name() const override { return "sitter"; }
  int declare_speed_weak(int, int) override { return s_r_; }
  int declare_speed_strong(int) override { return s_r_; }

  Objective choose_objective(const MatchContext& ctx) override {
    return Objective::protect_ball(ctx.public_center, radius_);
  }

  Vertex place(const MatchContext& ctx, const std::vector<Vertex>&) override {
    return home_.value_or(ctx.public_center);
  }

  Path step(const MatchContext&, const GameState& st) override { return {st.robber}; }

 private:
  int s_r_;
  int radius_;
  std::optional<Vertex> home_;
};

/// Moves to the legal vertex maximizing its distance to the nearest cop.
class KeepAwayRobber : public RobberAgent {
 public:
  KeepAwayRobber(int s_r, int radius) : s_r_(s_r), radius_(radius) {}

  std::string name() const override { return "keep-away"; }
  int declare_speed_weak(int, int) override { return s_r_; }
  int declare_speed_strong(int) override { return s_r_; }

  Objective choose_objective(const MatchContext& ctx) override {
    return Objective::protect_ball(ctx.public_center, radius_);
  }

  Vertex place(const MatchContext& ctx, const std::vector<Vertex>& cops) override {
    if (cops.empty()) return ctx.public_center;
    auto d = ctx.g.multi_source_dist_capped(cops, ctx.g.size());
    Vertex best = 0;
    for (Vertex v = 1; v < ctx.g.size(); ++v)
      if (d[v] > d[best]) best = v;
    return best;
  }

  Path step(const MatchContext& ctx, const GameState& st) override {
    auto opts = legal_robber_paths(ctx.g, st, ctx.params);
    if (st.cops.empty()) return {st.robber};
    int cap = std::min<long>(ctx.g.size(), ctx.params.s_r + ctx.params.rho + 2L * ctx.params.s_c + 4);
    auto cop_dist = ctx.g.multi_source_dist_capped(st.cops, cap);
    Vertex best = st.robber;
    auto score = [&](Vertex v) { return cop_dist[v] < 0 ? cap + 1 : cop_dist[v]; };
    for (Vertex v = 0; v < ctx.g.size(); ++v) {
      if (!opts.reachable(v)) continue;
      if (score(v) > score(best) || (score(v) == score(best) && v < best)) best = v;
    }
    return opts.path_to(best);
  }

 private:
  int s_r_;
  int radius_;
};

}  // namespace ccr
