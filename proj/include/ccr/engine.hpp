#pragma once

#include "ccr/game.hpp"
#include "ccr/trace.hpp"

namespace ccr {

struct Negotiation {
  GameParams params;
  GameState initial;
  std::vector<std::pair<std::string, std::string>> decls;  // in declaration order
};

/// Runs the parameter negotiation in the given order, then placements:
/// cops first, then the robber knowing the cop positions. A robber placed
/// within reach of a cop is captured at stage 0.
inline Negotiation negotiate(const Graph& g, Order order, CopAgent& cops, RobberAgent& robber,
                             Vertex public_center, InvariantLog* log, std::uint64_t seed = 0) {
  Negotiation n;
  n.params.order = order;
  n.params.k = cops.cop_count();
  if (n.params.k < 0) throw ConfigError("negative cop count");
  if (order == Order::Weak) {
    auto [sc, rho] = cops.declare_weak();
    n.params.s_c = sc;
    n.params.rho = rho;
    n.decls.emplace_back("cop.speed", cat(sc));
    n.decls.emplace_back("cop.reach", cat(rho));
    n.params.s_r = robber.declare_speed_weak(sc, rho);
    n.decls.emplace_back("robber.speed", cat(n.params.s_r));
  } else {
    n.params.s_c = cops.declare_speed();
    n.decls.emplace_back("cop.speed", cat(n.params.s_c));
    n.params.s_r = robber.declare_speed_strong(n.params.s_c);
    n.decls.emplace_back("robber.speed", cat(n.params.s_r));
    n.params.rho = cops.declare_reach(n.params.s_r);
    n.decls.emplace_back("cop.reach", cat(n.params.rho));
  }
  if (n.params.s_c < 1) throw ConfigError("cops declared non-positive speed");
  if (n.params.s_r < 1) throw ConfigError("robber declared non-positive speed");
  if (n.params.rho < 0) throw ConfigError("negative reach");

  MatchContext ctx{g, n.params, public_center, log, seed};
  n.params.objective = robber.choose_objective(ctx);
  n.decls.emplace_back("robber.objective",
                       cat(n.params.objective.kind_name(), " center=", n.params.objective.center,
                           " radius=", n.params.objective.radius));
  ctx.params = n.params;

  n.initial.cops = cops.place(ctx);
  if (static_cast<int>(n.initial.cops.size()) != n.params.k)
    throw ConfigError("cop placement count mismatch");
  for (Vertex c : n.initial.cops) g.check_vertex(c);
  n.initial.robber = robber.place(ctx, n.initial.cops);
  g.check_vertex(n.initial.robber);
  n.initial.stage = 0;
  n.initial.phase = Phase::CopsToMove;
  for (Vertex c : n.initial.cops) {
    if (g.dist_capped(n.initial.robber, c, n.params.rho)) {
      n.initial.status = Status::Captured;
      break;
    }
  }
  return n;
}

struct MatchOptions {
  long horizon = 10000;
  std::uint64_t seed = 0;
  // Budget on period * |V| for the cop-side exclusion analysis.
  long exclusion_budget = 4'000'000;
  bool keep_records = true;
};

struct MatchResult {
  Status verdict = Status::HorizonExhausted;
  long stages = 0;
  long period = 0;
  long period_start = -1;
  long visits = 0;  // end-of-stage visits to the objective region
  InvariantLog invariants;
  std::string diagnostics;
  Trace trace;

  bool robber_win() const { return verdict == Status::CertifiedRobberWin; }
  bool invariants_clean() const { return invariants.clean(); }
};

namespace detail {

inline std::vector<char> objective_region(const Graph& g, const Objective& o) {
  std::vector<char> in(g.size(), 0);
  switch (o.kind) {
    case Objective::Kind::ProtectBall:
    case Objective::Kind::Divergence: {
      g.check_vertex(o.center);
      auto d = g.multi_source_dist_capped({o.center}, o.radius);
      for (Vertex v = 0; v < g.size(); ++v) in[v] = d[v] >= 0;
      break;
    }
    case Objective::Kind::ProtectFinite: {
      if (o.finite_set.empty()) throw ConfigError("protect-finite set is empty");
      for (Vertex v : o.finite_set) {
        g.check_vertex(v);
        in[v] = 1;
      }
      break;
    }
  }
  return in;
}

struct Boundary {
  std::vector<Vertex> cops;
  Vertex robber;
  bool visit;
};

/// Can the robber, moving against the frozen periodic cop pattern, ever
/// reach the objective region? Sound completion of a periodic play with no
/// region visits into a cop-side verdict. Empty optional when the product
/// space exceeds the budget.
inline std::optional<bool> region_excluded(const Graph& g, const GameParams& params,
                                           const std::vector<char>& in_region,
                                           const std::vector<Boundary>& cycle, long budget) {
  const long p = static_cast<long>(cycle.size());
  if (p * g.size() > budget) return std::nullopt;
  std::vector<char> seen(static_cast<size_t>(p) * g.size(), 0);
  std::vector<std::pair<Vertex, int>> stack;
  auto push = [&](Vertex v, int phase) {
    if (seen[static_cast<size_t>(phase) * g.size() + v]) return true;
    seen[static_cast<size_t>(phase) * g.size() + v] = 1;
    if (in_region[v]) return false;
    stack.emplace_back(v, phase);
    return true;
  };
  if (!push(cycle[0].robber, 0)) return false;
  while (!stack.empty()) {
    auto [x, phase] = stack.back();
    stack.pop_back();
    int next_phase = static_cast<int>((phase + 1) % p);
    const auto& cops = cycle[next_phase].cops;
    GameState st;
    st.cops = cops;
    st.robber = x;
    st.phase = Phase::RobberToMove;
    st.status = Status::Running;
    bool captured = false;
    for (Vertex c : cops) {
      if (g.dist_capped(x, c, params.rho)) {
        captured = true;
        break;
      }
    }
    if (captured) continue;  // capture ends the play without further visits
    auto opts = legal_robber_paths(g, st, params);
    for (Vertex v = 0; v < g.size(); ++v) {
      if (opts.dist[v] >= 0 && !push(v, next_phase)) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Plays one match to a verdict. With both agents deterministic
/// (`certifiable`), the first repetition of the full configuration —
/// cop tuple, robber vertex, both agents' state digests — proves the play
/// periodic; the verdict is then read off the period.
inline MatchResult run_match(const Graph& g, Order order, CopAgent& cops, RobberAgent& robber,
                             Vertex public_center, const MatchOptions& opts = {}) {
  MatchResult res;
  MatchContext ctx{g, GameParams{}, public_center, &res.invariants, opts.seed};

  Negotiation neg;
  try {
    neg = negotiate(g, order, cops, robber, public_center, &res.invariants, opts.seed);
  } catch (const ConfigError& e) {
    res.verdict = Status::Forfeit;
    res.diagnostics = cat("negotiation: ", e.what());
    return res;
  }
  ctx.params = neg.params;
  const GameParams& params = neg.params;

  res.trace.graph_kind = kind_name(g.kind());
  res.trace.graph_size = g.size();
  res.trace.clamped = g.clamped();
  res.trace.order = order;
  res.trace.decls = neg.decls;
  res.trace.params = params;
  res.trace.public_center = public_center;
  res.trace.cop_start = neg.initial.cops;
  res.trace.robber_start = neg.initial.robber;

  GameState st = neg.initial;
  auto in_region = detail::objective_region(g, params.objective);

  auto robber_dists = [&](Vertex r) {
    std::vector<int> d;
    for (Vertex c : st.cops) d.push_back(g.dist_capped(r, c, params.rho).value_or(-1));
    return d;
  };
  auto record = [&](char mover, std::vector<Vertex> pos, Path path, std::string note) {
    if (!opts.keep_records) return;
    TraceRecord r;
    r.stage = st.stage + (mover == 'c' ? 1 : 0);
    r.mover = mover;
    r.positions = std::move(pos);
    r.path = std::move(path);
    r.robber_cop_dist = robber_dists(st.robber);
    r.status = st.status;
    r.note = std::move(note);
    res.trace.records.push_back(std::move(r));
  };

  auto finish = [&](Status verdict, long stages) {
    res.verdict = verdict;
    res.stages = stages;
    res.trace.verdict = verdict;
    res.trace.stages = stages;
    res.trace.period = res.period;
    res.trace.visits = res.visits;
    return res;
  };

  if (st.status == Status::Captured) return finish(Status::Captured, 0);

  const bool certifiable = cops.certifiable() && robber.certifiable();
  using Key = std::vector<long long>;
  auto boundary_key = [&]() {
    Key k(st.cops.begin(), st.cops.end());
    k.push_back(st.robber);
    k.push_back(static_cast<long long>(cops.state_digest()));
    k.push_back(static_cast<long long>(robber.state_digest()));
    return k;
  };

  std::map<Key, long> seen;
  std::vector<Key> keys;                    // key per stage boundary (index = stage)
  std::vector<detail::Boundary> boundaries; // per stage boundary

  auto note_boundary = [&]() {
    bool visit = in_region[st.robber];
    res.visits += visit;
    boundaries.push_back({st.cops, st.robber, visit});
    keys.push_back(boundary_key());
  };
  note_boundary();
  seen[keys[0]] = 0;

  long anchor = -1;        // start of the candidate period
  long period = 0;         // candidate period length
  long extension_end = -1; // last stage of the confirmation replay
  bool may_certify = certifiable;

  for (long stage = 1; stage <= opts.horizon; ++stage) {
    // cops' half
    std::vector<Vertex> dest;
    try {
      dest = cops.step(ctx, st);
    } catch (const std::exception& e) {
      res.diagnostics = cat("cop agent error: ", e.what());
      return finish(Status::Forfeit, stage);
    }
    if (auto err = check_cop_move(g, st, params, dest); !err.empty()) {
      res.diagnostics = cat("cop move rejected: ", err);
      return finish(Status::Forfeit, stage);
    }
    st = apply_cop_move(g, st, params, dest);
    record('c', dest, {}, cops.annotation());
    if (st.status == Status::Captured) return finish(Status::Captured, stage);

    // robber's half
    Path path;
    try {
      path = robber.step(ctx, st);
    } catch (const std::exception& e) {
      res.diagnostics = cat("robber agent error: ", e.what());
      return finish(Status::Forfeit, stage);
    }
    if (auto err = check_robber_path(g, st, params, path); !err.empty()) {
      res.diagnostics = cat("robber path rejected: ", err);
      return finish(Status::Forfeit, stage);
    }
    st = apply_robber_move(g, st, params, path);
    record('r', {st.robber}, path, robber.annotation());

    note_boundary();
    if (!may_certify) continue;

    if (anchor >= 0) {
      // Replaying one further period to confirm the repetition is exact
      // before certifying anything from it.
      if (keys[stage] != keys[stage - period]) {
        res.invariants.fail("certification.extension-mismatch",
                            "configuration repeated but the continuation diverged");
        may_certify = false;
        continue;
      }
      if (stage < extension_end) continue;

      res.period = period;
      res.period_start = anchor;
      bool any_visit = false;
      for (long t = anchor; t < anchor + period; ++t) any_visit |= boundaries[t].visit;

      if (params.objective.kind == Objective::Kind::Divergence) {
        bool confined = true;
        for (const auto& b : boundaries) confined &= in_region[b.robber];
        return finish(confined ? Status::CertifiedRobberWin : Status::HorizonExhausted, stage);
      }
      if (any_visit) return finish(Status::CertifiedRobberWin, stage);
      std::vector<detail::Boundary> cycle(boundaries.begin() + anchor,
                                          boundaries.begin() + anchor + period);
      auto excluded = detail::region_excluded(g, params, in_region, cycle, opts.exclusion_budget);
      if (excluded.has_value() && *excluded) return finish(Status::CopObjectiveMet, stage);
      res.diagnostics = "periodic play without region visits, exclusion unproven";
      return finish(Status::HorizonExhausted, stage);
    }

    auto it = seen.find(keys[stage]);
    if (it != seen.end()) {
      anchor = it->second;
      period = stage - anchor;
      extension_end = stage + period;
    } else {
      seen.emplace(keys[stage], stage);
    }
  }

  res.diagnostics = cat("horizon ", opts.horizon, " reached; visits=", res.visits);
  return finish(Status::HorizonExhausted, opts.horizon);
}

/// Re-runs every legality check recorded in a trace against the graph and
/// confirms the rebuilt status sequence. Empty string when the trace
/// replays exactly.
inline std::string replay_trace(const Graph& g, const Trace& t) {
  GameParams params = t.params;
  GameState st;
  st.cops = t.cop_start;
  st.robber = t.robber_start;
  st.phase = Phase::CopsToMove;
  st.status = Status::Running;
  for (Vertex c : st.cops) {
    if (g.dist_capped(st.robber, c, params.rho)) st.status = Status::Captured;
  }
  if (st.status == Status::Captured) {
    if (t.verdict != Status::Captured) return "replay: robber starts captured but verdict differs";
    return {};
  }
  // weak order: reach must be declared before the robber's speed
  if (t.order == Order::Weak) {
    int reach_at = -1, speed_at = -1;
    for (size_t i = 0; i < t.decls.size(); ++i) {
      if (t.decls[i].first == "cop.reach") reach_at = static_cast<int>(i);
      if (t.decls[i].first == "robber.speed") speed_at = static_cast<int>(i);
    }
    if (reach_at < 0 || speed_at < 0 || reach_at > speed_at)
      return "replay: weak-order declarations out of order";
  }
  for (const auto& rec : t.records) {
    if (rec.mover == 'c') {
      if (auto err = check_cop_move(g, st, params, rec.positions); !err.empty())
        return cat("replay stage ", rec.stage, ": ", err);
      st = apply_cop_move(g, st, params, rec.positions);
      if (st.status != rec.status) return cat("replay stage ", rec.stage, ": cop status mismatch");
    } else {
      if (auto err = check_robber_path(g, st, params, rec.path); !err.empty())
        return cat("replay stage ", rec.stage, ": ", err);
      st = apply_robber_move(g, st, params, rec.path);
      if (st.status != rec.status) return cat("replay stage ", rec.stage, ": robber status mismatch");
    }
  }
  return {};
}

}  // namespace ccr
