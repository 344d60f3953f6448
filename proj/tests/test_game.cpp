#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "ccr/agents.hpp"
#include "ccr/engine.hpp"
#include "ccr/families.hpp"

using namespace ccr;

namespace {

GameState make_state(std::vector<Vertex> cops, Vertex robber, Phase phase) {
  GameState st;
  st.cops = std::move(cops);
  st.robber = robber;
  st.phase = phase;
  return st;
}

GameParams make_params(int k, int s_c, int s_r, int rho) {
  GameParams p;
  p.k = k;
  p.s_c = s_c;
  p.s_r = s_r;
  p.rho = rho;
  return p;
}

// Exhaustive enumeration of all simple paths of length <= budget that avoid
// the forbidden set; returns the endpoint set. Oracle for legal_robber_paths.
void enumerate_paths(const Graph& g, Vertex at, int budget, std::vector<char>& used,
                     const std::vector<char>& forbidden, std::set<Vertex>& out) {
  out.insert(at);
  if (budget == 0) return;
  for (Vertex b : g.neighbors(at)) {
    if (used[b] || forbidden[b]) continue;
    used[b] = 1;
    enumerate_paths(g, b, budget - 1, used, forbidden, out);
    used[b] = 0;
  }
}

}  // namespace

TEST_CASE("cop move legality") {
  Graph g = Graph::grid_window({0, 8, 0, 8});
  auto v = [&](int x, int y) { return g.grid_vertex(x, y); };

  auto st = make_state({v(0, 0), v(4, 4)}, v(8, 8), Phase::CopsToMove);
  REQUIRE(check_cop_move(g, st, make_params(2, 2, 1, 0), {v(1, 1), v(4, 4)}).empty());
  REQUIRE_FALSE(check_cop_move(g, st, make_params(2, 1, 1, 0), {v(1, 1), v(4, 4)}).empty());
  // violation names the offending cop
  auto err = check_cop_move(g, st, make_params(2, 1, 1, 0), {v(0, 1), v(4, 7)});
  REQUIRE(err.find("cop 1") != std::string::npos);
  auto wrong_phase = make_state({v(0, 0)}, v(8, 8), Phase::RobberToMove);
  REQUIRE_FALSE(check_cop_move(g, wrong_phase, make_params(1, 1, 1, 0), {v(0, 0)}).empty());
}

TEST_CASE("capture at cop destinations") {
  Graph g = Graph::grid_window({0, 8, 0, 8});
  auto v = [&](int x, int y) { return g.grid_vertex(x, y); };

  auto st = make_state({v(3, 3)}, v(3, 5), Phase::CopsToMove);
  auto next = apply_cop_move(g, st, make_params(1, 1, 1, 1), {v(3, 4)});
  REQUIRE(next.status == Status::Captured);

  next = apply_cop_move(g, st, make_params(1, 1, 1, 0), {v(3, 4)});
  REQUIRE(next.status == Status::Running);

  auto st2 = make_state({v(0, 0)}, v(1, 1), Phase::CopsToMove);
  next = apply_cop_move(g, st2, make_params(1, 1, 1, 2), {v(0, 0)});
  REQUIRE(next.status == Status::Captured);  // L1 distance 2 within reach 2
}

TEST_CASE("robber reachability") {
  Graph g = Graph::grid_window({0, 8, 0, 8});
  auto v = [&](int x, int y) { return g.grid_vertex(x, y); };

  SECTION("no cops: reachable set is the speed ball") {
    auto st = make_state({}, v(4, 4), Phase::RobberToMove);
    auto opts = legal_robber_paths(g, st, make_params(0, 1, 3, 0));
    auto reach = opts.reachable_set();
    auto ball = g.ball(v(4, 4), 3);
    REQUIRE(reach == ball);
  }

  SECTION("cop at distance rho+1 confines the robber on a path") {
    Graph p = path_graph(10);
    auto st = make_state({4}, 6, Phase::RobberToMove);
    auto opts = legal_robber_paths(p, st, make_params(1, 1, 9, 1));
    auto reach = opts.reachable_set();
    REQUIRE(reach == std::vector<Vertex>{6, 7, 8, 9});
  }

  SECTION("matches exhaustive path enumeration") {
    auto params = make_params(1, 1, 4, 1);
    auto st = make_state({v(3, 4)}, v(5, 4), Phase::RobberToMove);
    auto opts = legal_robber_paths(g, st, params);
    std::vector<char> forbidden(g.size(), 0);
    auto cd = g.multi_source_dist_capped(st.cops, params.rho);
    for (Vertex u = 0; u < g.size(); ++u) forbidden[u] = cd[u] >= 0;
    std::set<Vertex> expect;
    std::vector<char> used(g.size(), 0);
    used[st.robber] = 1;
    enumerate_paths(g, st.robber, params.s_r, used, forbidden, expect);
    std::set<Vertex> got;
    for (Vertex u : opts.reachable_set()) got.insert(u);
    REQUIRE(got == expect);
    // witness paths re-validate
    for (Vertex u : opts.reachable_set()) {
      REQUIRE(check_robber_path(g, st, params, opts.path_to(u)).empty());
    }
  }

  SECTION("bad paths rejected with the offending vertex named") {
    auto params = make_params(1, 1, 4, 1);
    auto st = make_state({v(3, 4)}, v(5, 4), Phase::RobberToMove);
    Path through_cop{v(5, 4), v(4, 4), v(3, 4)};
    auto err = check_robber_path(g, st, params, through_cop);
    REQUIRE(err.find(cat(v(4, 4))) != std::string::npos);
    REQUIRE_FALSE(check_robber_path(g, st, params, {v(5, 5)}).empty());   // wrong start
    Path too_long{v(5, 4), v(6, 4), v(7, 4), v(8, 4), v(8, 5), v(8, 6)};
    REQUIRE_FALSE(check_robber_path(g, st, params, too_long).empty());
  }
}

TEST_CASE("negotiation orders") {
  Graph g = Graph::grid_window({0, 8, 0, 8});
  Vertex center = g.grid_vertex(4, 4);
  InvariantLog log;

  SECTION("weak declares reach before robber speed") {
    GreedyCops cops(1, 1, 1);
    SitterRobber robber(5, 2, g.grid_vertex(0, 0));
    auto neg = negotiate(g, Order::Weak, cops, robber, center, &log);
    REQUIRE(neg.params.s_c == 1);
    REQUIRE(neg.params.s_r == 5);
    std::vector<std::string> names;
    for (auto& [k, v] : neg.decls) names.push_back(k);
    REQUIRE(names == std::vector<std::string>{"cop.speed", "cop.reach", "robber.speed",
                                              "robber.objective"});
  }

  SECTION("strong interleaves reach after robber speed") {
    GreedyCops cops(1, 1, 1);
    SitterRobber robber(5, 2, g.grid_vertex(0, 0));
    auto neg = negotiate(g, Order::Strong, cops, robber, center, &log);
    std::vector<std::string> names;
    for (auto& [k, v] : neg.decls) names.push_back(k);
    REQUIRE(names == std::vector<std::string>{"cop.speed", "robber.speed", "cop.reach",
                                              "robber.objective"});
  }

  SECTION("robber placed within reach is captured at stage 0") {
    GreedyCops cops(1, 1, 1);
    SitterRobber robber(5, 2, center);  // sits on the cop
    auto neg = negotiate(g, Order::Strong, cops, robber, center, &log);
    REQUIRE(neg.initial.status == Status::Captured);
    MatchOptions opts;
    auto res = run_match(g, Order::Strong, cops, robber, center, opts);
    REQUIRE(res.verdict == Status::Captured);
    REQUIRE(res.stages == 0);
  }
}

TEST_CASE("match certification") {
  Graph g = Graph::grid_window({0, 10, 0, 10});
  Vertex center = g.grid_vertex(5, 5);

  SECTION("parked robber with distant stationary cops wins") {
    StationaryCops cops(2, 1, 1);
    cops.set_placement({g.grid_vertex(0, 0), g.grid_vertex(10, 10)});
    SitterRobber robber(3, 2, center);
    auto res = run_match(g, Order::Weak, cops, robber, center);
    REQUIRE(res.verdict == Status::CertifiedRobberWin);
    REQUIRE(res.period == 1);
    REQUIRE(res.stages <= 4);
  }

  SECTION("no cops at all") {
    GreedyCops cops(0, 1, 1);
    SitterRobber robber(3, 2, center);
    auto res = run_match(g, Order::Weak, cops, robber, center);
    REQUIRE(res.verdict == Status::CertifiedRobberWin);
  }

  SECTION("guarded path yields a certified cop win via exclusion") {
    Graph p = path_graph(10);
    StationaryCops cops(1, 1, 1);
    cops.set_placement({3});
    KeepAwayRobber robber(1, 1);
    // ball around vertex 0; the robber's farthest placement is 9, and the
    // cop's reach blocks {2,3,4} forever
    auto res = run_match(p, Order::Weak, cops, robber, 0);
    REQUIRE(res.verdict == Status::CopObjectiveMet);
  }

  SECTION("non-certifiable cops exhaust the horizon with visit statistics") {
    StatefulRandomCops cops(1, 1, 0, 99);
    SitterRobber robber(3, 2, center);
    MatchOptions opts;
    opts.horizon = 60;
    auto res = run_match(g, Order::Weak, cops, robber, center, opts);
    if (res.verdict != Status::Captured) {
      REQUIRE(res.verdict == Status::HorizonExhausted);
      REQUIRE(res.visits > 0);
    }
  }

  SECTION("random-walk cops replay identically under the same seed") {
    MatchOptions opts;
    opts.horizon = 40;
    std::ostringstream t1, t2;
    for (auto* sink : {&t1, &t2}) {
      RandomWalkCops cops(2, 1, 1, 1234);
      cops.set_placement({g.grid_vertex(0, 0), g.grid_vertex(10, 0)});
      KeepAwayRobber robber(2, 2);
      auto res = run_match(g, Order::Weak, cops, robber, center, opts);
      res.trace.write(*sink);
    }
    REQUIRE(t1.str() == t2.str());
  }
}

TEST_CASE("trace round trip and replay") {
  Graph g = Graph::grid_window({0, 10, 0, 10});
  Vertex center = g.grid_vertex(5, 5);
  GreedyCops cops(2, 1, 1);
  cops.set_placement({g.grid_vertex(0, 0), g.grid_vertex(10, 10)});
  KeepAwayRobber robber(3, 2);
  MatchOptions opts;
  opts.horizon = 200;
  auto res = run_match(g, Order::Strong, cops, robber, center, opts);

  std::ostringstream out;
  res.trace.write(out);
  std::istringstream in(out.str());
  Trace back = Trace::read(in);
  REQUIRE(back.records.size() == res.trace.records.size());
  REQUIRE(back.verdict == res.trace.verdict);
  REQUIRE(back.params.s_r == res.trace.params.s_r);

  REQUIRE(replay_trace(g, back).empty());

  // a tampered trace fails replay
  if (!back.records.empty()) {
    Trace bad = back;
    for (auto& rec : bad.records) {
      if (rec.mover == 'c' && !rec.positions.empty()) {
        rec.positions[0] = (rec.positions[0] + 40) % g.size();
        break;
      }
    }
    REQUIRE_FALSE(replay_trace(g, bad).empty());
  }
}

TEST_CASE("greedy cop closes distance on a path") {
  Graph p = path_graph(30);
  GreedyCops cops(1, 2, 0);
  cops.set_placement({0});
  KeepAwayRobber robber(1, 1);  // slower than the cop
  MatchOptions opts;
  opts.horizon = 200;
  auto res = run_match(p, Order::Weak, cops, robber, 0, opts);
  REQUIRE(res.verdict == Status::Captured);
  // distance between cop and robber never increases at stage boundaries
  GameParams params = res.trace.params;
  long prev = 1000;
  Vertex c = res.trace.cop_start[0], r = res.trace.robber_start;
  for (const auto& rec : res.trace.records) {
    if (rec.mover == 'c') {
      c = rec.positions[0];
    } else {
      r = rec.path.back();
      long d = p.dist_capped(c, r, p.size()).value_or(p.size());
      REQUIRE(d <= prev);
      prev = d;
    }
  }
}

TEST_CASE("divergence and protect-finite objectives") {
  Graph g = Graph::grid_window({0, 10, 0, 10});
  Vertex center = g.grid_vertex(5, 5);

  SECTION("divergence certified when the robber stays confined") {
    class DivergenceSitter : public SitterRobber {
     public:
      using SitterRobber::SitterRobber;
      Objective choose_objective(const MatchContext& ctx) override {
        return Objective::divergence(ctx.public_center, 2);
      }
    };
    StationaryCops cops(1, 1, 1);
    cops.set_placement({g.grid_vertex(0, 0)});
    DivergenceSitter robber(3, 2, center);
    auto res = run_match(g, Order::Weak, cops, robber, center);
    REQUIRE(res.verdict == Status::CertifiedRobberWin);
  }

  SECTION("protect-finite certified on periodic visits") {
    class FiniteSitter : public SitterRobber {
     public:
      using SitterRobber::SitterRobber;
      Objective choose_objective(const MatchContext& ctx) override {
        return Objective::protect_finite({ctx.public_center});
      }
    };
    StationaryCops cops(1, 1, 1);
    cops.set_placement({g.grid_vertex(0, 0)});
    FiniteSitter robber(3, 2, center);
    auto res = run_match(g, Order::Weak, cops, robber, center);
    REQUIRE(res.verdict == Status::CertifiedRobberWin);
  }
}
