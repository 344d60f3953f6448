#pragma once

#include <map>
#include <memory>

#include "ccr/core.hpp"
#include "ccr/graph.hpp"

namespace ccr {

enum class Order { Weak, Strong };

inline const char* order_name(Order o) { return o == Order::Weak ? "weak" : "strong"; }

enum class Phase { CopsToMove, RobberToMove };

enum class Status {
  Running,
  Captured,
  CertifiedRobberWin,
  CopObjectiveMet,
  HorizonExhausted,
  Forfeit,
};

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Running: return "running";
    case Status::Captured: return "captured";
    case Status::CertifiedRobberWin: return "certified-robber-win";
    case Status::CopObjectiveMet: return "cop-objective-met";
    case Status::HorizonExhausted: return "horizon-exhausted";
    case Status::Forfeit: return "forfeit";
  }
  return "?";
}

inline bool cop_side_win(Status s) { return s == Status::Captured || s == Status::CopObjectiveMet; }

struct Objective {
  enum class Kind { ProtectBall, Divergence, ProtectFinite };
  Kind kind = Kind::ProtectBall;
  Vertex center = kNoVertex;
  int radius = 1;                  // ProtectBall R; Divergence: declared confinement radius
  std::vector<Vertex> finite_set;  // ProtectFinite

  static Objective protect_ball(Vertex center, int radius) {
    Objective o;
    o.kind = Kind::ProtectBall;
    o.center = center;
    o.radius = radius;
    return o;
  }
  static Objective divergence(Vertex center, int confinement_radius) {
    Objective o;
    o.kind = Kind::Divergence;
    o.center = center;
    o.radius = confinement_radius;
    return o;
  }
  static Objective protect_finite(std::vector<Vertex> set) {
    Objective o;
    o.kind = Kind::ProtectFinite;
    o.finite_set = std::move(set);
    return o;
  }

  const char* kind_name() const {
    switch (kind) {
      case Kind::ProtectBall: return "protect-ball";
      case Kind::Divergence: return "divergence";
      case Kind::ProtectFinite: return "protect-finite";
    }
    return "?";
  }
};

struct GameParams {
  int k = 1;      // cop count
  int s_c = 1;    // cop speed
  int s_r = 1;    // robber speed
  int rho = 0;    // reach
  Order order = Order::Weak;
  Objective objective;
};

struct GameState {
  long stage = 0;
  std::vector<Vertex> cops;
  Vertex robber = kNoVertex;
  Phase phase = Phase::CopsToMove;
  Status status = Status::Running;
};

struct MatchContext {
  const Graph& g;
  GameParams params;
  Vertex public_center = kNoVertex;
  InvariantLog* invariants = nullptr;
  std::uint64_t seed = 0;
};

/// Agents are stateful and confined to a single match; construct a fresh
/// instance per match. `state_digest` must capture all internal state that
/// influences future moves: it is part of the configuration key used for
/// periodicity certification.
class CopAgent {
 public:
  virtual ~CopAgent() = default;
  virtual std::string name() const = 0;
  virtual int cop_count() const = 0;
  virtual std::pair<int, int> declare_weak() = 0;            // (s_c, rho)
  virtual int declare_speed() = 0;                           // strong order
  virtual int declare_reach(int robber_speed) = 0;           // strong order
  virtual std::vector<Vertex> place(const MatchContext&) = 0;
  virtual std::vector<Vertex> step(const MatchContext&, const GameState&) = 0;
  virtual bool certifiable() const { return true; }
  virtual std::uint64_t state_digest() const { return 0; }
  virtual std::string annotation() const { return {}; }
};

class RobberAgent {
 public:
  virtual ~RobberAgent() = default;
  virtual std::string name() const = 0;
  virtual int declare_speed_weak(int cop_speed, int reach) = 0;
  virtual int declare_speed_strong(int cop_speed) = 0;
  virtual Objective choose_objective(const MatchContext&) = 0;  // all numeric params known
  virtual Vertex place(const MatchContext&, const std::vector<Vertex>& cops) = 0;
  virtual Path step(const MatchContext&, const GameState&) = 0;
  virtual bool certifiable() const { return true; }
  virtual std::uint64_t state_digest() const { return 0; }
  virtual std::string annotation() const { return {}; }
};

// ---------------------------------------------------------------------------
// Move legality

/// Empty string when every cop's destination is within speed; otherwise an
/// explanation naming the offending cop.
inline std::string check_cop_move(const Graph& g, const GameState& state, const GameParams& params,
                                  const std::vector<Vertex>& dest) {
  if (state.phase != Phase::CopsToMove) return "not the cops' turn";
  if (dest.size() != state.cops.size()) return "destination count mismatch";
  for (size_t j = 0; j < dest.size(); ++j) {
    g.check_vertex(dest[j]);
    auto d = g.dist_capped(state.cops[j], dest[j], params.s_c);
    if (!d) return cat("cop ", j, " moved farther than speed ", params.s_c);
  }
  return {};
}

/// Applies a legal cop move. Capture is evaluated at the destination
/// vertices against the robber's pre-move position.
inline GameState apply_cop_move(const Graph& g, const GameState& state, const GameParams& params,
                                const std::vector<Vertex>& dest) {
  if (auto err = check_cop_move(g, state, params, dest); !err.empty()) throw RuleViolation(err);
  GameState next = state;
  next.cops = dest;
  next.phase = Phase::RobberToMove;
  if (!dest.empty()) {
    for (Vertex c : dest) {
      if (g.dist_capped(state.robber, c, params.rho)) {
        next.status = Status::Captured;
        break;
      }
    }
  }
  return next;
}

/// The robber's legal options: every vertex reachable by a path of length
/// at most s_r whose vertices all sit at distance greater than rho from
/// every cop. `path_to` extracts a witness path.
struct RobberOptions {
  std::vector<int> cop_dist;   // capped at rho; -1 means "> rho"
  std::vector<int> dist;       // BFS depth through allowed vertices; -1 unreachable
  std::vector<Vertex> parent;

  bool reachable(Vertex v) const { return dist[v] >= 0; }

  Path path_to(Vertex v) const {
    if (!reachable(v)) throw DomainError("robber target not reachable");
    Path p;
    for (Vertex a = v; a != kNoVertex; a = parent[a]) p.push_back(a);
    std::reverse(p.begin(), p.end());
    return p;
  }

  std::vector<Vertex> reachable_set() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < static_cast<Vertex>(dist.size()); ++v)
      if (dist[v] >= 0) out.push_back(v);
    return out;
  }
};

inline RobberOptions legal_robber_paths(const Graph& g, const GameState& state, const GameParams& params) {
  if (state.phase != Phase::RobberToMove) throw RuleViolation("not the robber's turn");
  if (state.status != Status::Running) throw RuleViolation("game over");
  RobberOptions opt;
  opt.cop_dist = state.cops.empty() ? std::vector<int>(g.size(), -1)
                                    : g.multi_source_dist_capped(state.cops, params.rho);
  opt.dist.assign(g.size(), -1);
  opt.parent.assign(g.size(), kNoVertex);
  Vertex r = state.robber;
  if (opt.cop_dist[r] >= 0) return opt;  // within reach: no legal path at all
  std::vector<Vertex> frontier{r};
  opt.dist[r] = 0;
  int depth = 0;
  while (!frontier.empty() && depth < params.s_r) {
    ++depth;
    std::vector<Vertex> next;
    for (Vertex a : frontier) {
      for (Vertex b : g.neighbors(a)) {
        if (opt.dist[b] >= 0 || opt.cop_dist[b] >= 0) continue;
        opt.dist[b] = depth;
        opt.parent[b] = a;
        next.push_back(b);
      }
    }
    frontier = std::move(next);
  }
  return opt;
}

/// Independent validator: re-derives forbidden vertices from the cop
/// positions and walks the claimed path. Empty string when legal.
inline std::string check_robber_path(const Graph& g, const GameState& state, const GameParams& params,
                                     const Path& path) {
  if (state.phase != Phase::RobberToMove) return "not the robber's turn";
  if (path.empty()) return "empty path";
  if (path.front() != state.robber) return "path does not start at the robber";
  if (static_cast<int>(path.size()) - 1 > params.s_r)
    return cat("path length ", path.size() - 1, " exceeds speed ", params.s_r);
  std::vector<Vertex> sorted(path);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "path repeats a vertex";
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.adjacent(path[i], path[i + 1])) return cat("path step ", path[i], "->", path[i + 1], " not an edge");
  }
  if (!state.cops.empty()) {
    auto cop_dist = g.multi_source_dist_capped(state.cops, params.rho);
    for (Vertex v : path) {
      if (cop_dist[v] >= 0) return cat("path vertex ", v, " within reach ", params.rho, " of a cop");
    }
  }
  return {};
}

inline GameState apply_robber_move(const Graph& g, const GameState& state, const GameParams& params,
                                   const Path& path) {
  if (auto err = check_robber_path(g, state, params, path); !err.empty()) throw RuleViolation(err);
  GameState next = state;
  next.robber = path.back();
  next.phase = Phase::CopsToMove;
  next.stage += 1;
  return next;
}

}  // namespace ccr
