#pragma once

#include <istream>
#include <ostream>
#include <sstream>

#include "ccr/game.hpp"

namespace ccr {

struct TraceRecord {
  long stage = 0;
  char mover = 'c';                 // 'c' cops, 'r' robber
  std::vector<Vertex> positions;    // cop destinations / robber path end
  Path path;                        // robber witness path ('r' records)
  std::vector<int> robber_cop_dist; // robber-to-cop distances, capped at rho (-1 beyond)
  Status status = Status::Running;
  std::string note;                 // strategy-specific annotation
};

/// Replayable record of one match: ordered declarations, placements, one
/// record per half-stage, verdict. Line-delimited text on disk.
struct Trace {
  std::string graph_kind;
  int graph_size = 0;
  bool clamped = true;
  Order order = Order::Weak;
  std::vector<std::pair<std::string, std::string>> decls;
  GameParams params;
  Vertex public_center = kNoVertex;
  std::vector<Vertex> cop_start;
  Vertex robber_start = kNoVertex;
  std::vector<TraceRecord> records;
  Status verdict = Status::Running;
  long stages = 0;
  long period = 0;
  long visits = 0;

  void write(std::ostream& out) const;
  static Trace read(std::istream& in);
};

namespace detail {

inline std::string join_ids(const std::vector<Vertex>& vs, char sep) {
  if (vs.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) os << sep;
    os << vs[i];
  }
  return os.str();
}

inline std::string join_ints(const std::vector<int>& vs, char sep) {
  if (vs.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) os << sep;
    os << vs[i];
  }
  return os.str();
}

inline std::vector<int> split_ints(const std::string& s, char sep) {
  std::vector<int> out;
  if (s == "-") return out;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, sep)) out.push_back(std::stoi(tok));
  return out;
}

inline std::vector<Vertex> split_ids(const std::string& s, char sep) {
  std::vector<Vertex> out;
  for (int x : split_ints(s, sep)) out.push_back(static_cast<Vertex>(x));
  return out;
}

inline Status parse_status(const std::string& s) {
  for (Status st : {Status::Running, Status::Captured, Status::CertifiedRobberWin,
                    Status::CopObjectiveMet, Status::HorizonExhausted, Status::Forfeit}) {
    if (s == status_name(st)) return st;
  }
  throw ConfigError("unknown status: " + s);
}

}  // namespace detail

inline void Trace::write(std::ostream& out) const {
  out << "ccr-trace 1\n";
  out << "graph kind=" << graph_kind << " n=" << graph_size << " clamp=" << (clamped ? 1 : 0) << "\n";
  out << "order " << order_name(order) << "\n";
  for (const auto& [k, v] : decls) out << "decl " << k << " " << v << "\n";
  out << "objective " << params.objective.kind_name() << " center=" << params.objective.center
      << " radius=" << params.objective.radius;
  if (params.objective.kind == Objective::Kind::ProtectFinite)
    out << " set=" << detail::join_ids(params.objective.finite_set, ',');
  out << "\n";
  out << "params k=" << params.k << " sc=" << params.s_c << " sr=" << params.s_r
      << " rho=" << params.rho << " center=" << public_center << "\n";
  out << "place cops " << detail::join_ids(cop_start, ',') << "\n";
  out << "place robber " << robber_start << "\n";
  for (const auto& r : records) {
    out << "m " << r.stage << " " << r.mover << " ";
    if (r.mover == 'c')
      out << detail::join_ids(r.positions, ',');
    else
      out << detail::join_ids(r.path, ':');
    out << " rd " << detail::join_ints(r.robber_cop_dist, ',') << " st " << status_name(r.status);
    if (!r.note.empty()) out << " # " << r.note;
    out << "\n";
  }
  out << "end verdict=" << status_name(verdict) << " stages=" << stages << " period=" << period
      << " visits=" << visits << "\n";
}

inline Trace Trace::read(std::istream& in) {
  Trace t;
  std::string line;
  auto value_of = [](const std::string& tok) {
    auto p = tok.find('=');
    if (p == std::string::npos) throw ConfigError("trace: expected key=value, got " + tok);
    return tok.substr(p + 1);
  };
  if (!std::getline(in, line) || line.rfind("ccr-trace", 0) != 0) throw ConfigError("not a ccr trace");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream is(line);
    std::string tag;
    is >> tag;
    if (tag == "graph") {
      std::string kind, n, clamp;
      is >> kind >> n >> clamp;
      t.graph_kind = value_of(kind);
      t.graph_size = std::stoi(value_of(n));
      t.clamped = value_of(clamp) == "1";
    } else if (tag == "order") {
      std::string o;
      is >> o;
      t.order = (o == "weak") ? Order::Weak : Order::Strong;
      t.params.order = t.order;
    } else if (tag == "decl") {
      std::string k, v;
      is >> k;
      std::getline(is, v);
      if (!v.empty() && v.front() == ' ') v.erase(0, 1);
      t.decls.emplace_back(k, v);
      if (k == "cop.speed") t.params.s_c = std::stoi(v);
      if (k == "cop.reach") t.params.rho = std::stoi(v);
      if (k == "robber.speed") t.params.s_r = std::stoi(v);
    } else if (tag == "objective") {
      std::string kind;
      is >> kind;
      if (kind == "protect-ball") t.params.objective.kind = Objective::Kind::ProtectBall;
      if (kind == "divergence") t.params.objective.kind = Objective::Kind::Divergence;
      if (kind == "protect-finite") t.params.objective.kind = Objective::Kind::ProtectFinite;
      std::string tok;
      while (is >> tok) {
        if (tok.rfind("center=", 0) == 0) t.params.objective.center = std::stoi(value_of(tok));
        if (tok.rfind("radius=", 0) == 0) t.params.objective.radius = std::stoi(value_of(tok));
        if (tok.rfind("set=", 0) == 0) t.params.objective.finite_set = detail::split_ids(value_of(tok), ',');
      }
    } else if (tag == "params") {
      std::string tok;
      while (is >> tok) {
        if (tok.rfind("k=", 0) == 0) t.params.k = std::stoi(value_of(tok));
        if (tok.rfind("sc=", 0) == 0) t.params.s_c = std::stoi(value_of(tok));
        if (tok.rfind("sr=", 0) == 0) t.params.s_r = std::stoi(value_of(tok));
        if (tok.rfind("rho=", 0) == 0) t.params.rho = std::stoi(value_of(tok));
        if (tok.rfind("center=", 0) == 0) t.public_center = std::stoi(value_of(tok));
      }
    } else if (tag == "place") {
      std::string who, what;
      is >> who >> what;
      if (who == "cops")
        t.cop_start = detail::split_ids(what, ',');
      else
        t.robber_start = std::stoi(what);
    } else if (tag == "m") {
      TraceRecord r;
      std::string pos, rd_tag, rd, st_tag, st;
      is >> r.stage >> r.mover >> pos >> rd_tag >> rd >> st_tag >> st;
      if (r.mover == 'c') {
        r.positions = detail::split_ids(pos, ',');
      } else {
        r.path = detail::split_ids(pos, ':');
        if (!r.path.empty()) r.positions = {r.path.back()};
      }
      r.robber_cop_dist = detail::split_ints(rd, ',');
      r.status = detail::parse_status(st);
      std::string hash;
      if (is >> hash && hash == "#") {
        std::getline(is, r.note);
        if (!r.note.empty() && r.note.front() == ' ') r.note.erase(0, 1);
      }
      t.records.push_back(std::move(r));
    } else if (tag == "end") {
      std::string tok;
      while (is >> tok) {
        if (tok.rfind("verdict=", 0) == 0) t.verdict = detail::parse_status(value_of(tok));
        if (tok.rfind("stages=", 0) == 0) t.stages = std::stol(value_of(tok));
        if (tok.rfind("period=", 0) == 0) t.period = std::stol(value_of(tok));
        if (tok.rfind("visits=", 0) == 0) t.visits = std::stol(value_of(tok));
      }
    }
  }
  return t;
}

}  // namespace ccr
