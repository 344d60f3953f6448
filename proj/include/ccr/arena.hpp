#pragma once

#include "ccr/game.hpp"

namespace ccr {

/// Finite product game graph: states are (sorted cop tuple, robber vertex,
/// phase) plus one absorbing capture sink. Cops are interchangeable, so cop
/// tuples are canonicalized as multisets. Edges mirror the engine's
/// legality rules exactly and are enumerated on demand.
class Arena {
 public:
  Arena(const Graph& g, GameParams params, long budget = 5'000'000)
      : g_(g), params_(params) {
    n_ = g.size();
    k_ = params.k;
    if (k_ < 0) throw ConfigError("arena: negative cop count");
    binom_init(n_ + k_ + 2, k_ + 2);
    tuple_count_ = binom(n_ + k_ - 1, k_);
    long states = tuple_count_ * n_ * 2;
    if (states + 1 > budget)
      throw BudgetError(cat("arena needs ", states + 1, " states, budget ", budget));
    size_ = states + 1;  // + capture sink
    balls_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) balls_[v] = g.ball(v, params_.s_c);
  }

  const Graph& graph() const { return g_; }
  const GameParams& params() const { return params_; }
  long size() const { return size_; }
  long sink() const { return size_ - 1; }

  struct Decoded {
    std::vector<Vertex> cops;
    Vertex robber;
    Phase phase;
  };

  long id(const std::vector<Vertex>& sorted_cops, Vertex robber, Phase phase) const {
    return (tuple_rank(sorted_cops) * n_ + robber) * 2 + (phase == Phase::RobberToMove ? 1 : 0);
  }

  long id_unsorted(std::vector<Vertex> cops, Vertex robber, Phase phase) const {
    std::sort(cops.begin(), cops.end());
    return id(cops, robber, phase);
  }

  Decoded decode(long s) const {
    if (s == sink()) throw DomainError("decode(sink)");
    Decoded d;
    d.phase = (s % 2) ? Phase::RobberToMove : Phase::CopsToMove;
    s /= 2;
    d.robber = static_cast<Vertex>(s % n_);
    d.cops = tuple_unrank(s / n_);
    return d;
  }

  bool is_cop_turn(long s) const { return s != sink() && s % 2 == 0; }

  /// Robber within reach of some cop.
  bool unsafe(const std::vector<Vertex>& cops, Vertex r) const {
    for (Vertex c : cops) {
      if (g_.dist_capped(r, c, params_.rho)) return true;
    }
    return false;
  }

  /// Distinct successors of a state (sink included where capture occurs).
  std::vector<long> successors(long s) const {
    if (s == sink()) return {sink()};
    Decoded d = decode(s);
    std::vector<long> out;
    if (d.phase == Phase::CopsToMove) {
      std::vector<Vertex> dest(k_);
      enumerate_tuples(d.cops, 0, dest, [&](const std::vector<Vertex>& t) {
        std::vector<Vertex> sorted(t);
        std::sort(sorted.begin(), sorted.end());
        out.push_back(unsafe(sorted, d.robber) ? sink()
                                               : (tuple_rank(sorted) * n_ + d.robber) * 2 + 1);
      });
      if (k_ == 0) out.push_back((tuple_rank({}) * n_ + d.robber) * 2 + 1);
    } else {
      if (unsafe(d.cops, d.robber)) {
        out.push_back(sink());
      } else {
        for (Vertex v : safe_reach(d.cops, d.robber))
          out.push_back((tuple_rank(d.cops) * n_ + v) * 2);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Distinct predecessors; exact inverse of `successors`.
  std::vector<long> predecessors(long s) const {
    std::vector<long> out;
    if (s == sink()) {
      // all capturing cop states and all unsafe robber states
      for (long t = 0; t < size_ - 1; ++t) {
        Decoded d = decode(t);
        if (d.phase == Phase::RobberToMove) {
          if (unsafe(d.cops, d.robber)) out.push_back(t);
        } else {
          bool can_capture = false;
          std::vector<Vertex> dest(k_);
          enumerate_tuples(d.cops, 0, dest, [&](const std::vector<Vertex>& t2) {
            if (can_capture) return;
            std::vector<Vertex> sorted(t2);
            std::sort(sorted.begin(), sorted.end());
            if (unsafe(sorted, d.robber)) can_capture = true;
          });
          if (can_capture) out.push_back(t);
        }
      }
      out.push_back(sink());
      return out;
    }
    Decoded d = decode(s);
    if (d.phase == Phase::RobberToMove) {
      // cop moves land here only if this state is capture-free
      if (!unsafe(d.cops, d.robber)) {
        std::vector<Vertex> dest(k_);
        enumerate_tuples(d.cops, 0, dest, [&](const std::vector<Vertex>& t) {
          std::vector<Vertex> sorted(t);
          std::sort(sorted.begin(), sorted.end());
          out.push_back((tuple_rank(sorted) * n_ + d.robber) * 2);
        });
        if (k_ == 0) out.push_back((tuple_rank({}) * n_ + d.robber) * 2);
      }
    } else {
      // robber moves: u -> robber with the same safe component
      for (Vertex u : safe_reach(d.cops, d.robber))
        out.push_back((tuple_rank(d.cops) * n_ + u) * 2 + 1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Vertices the robber may move to: within s_r steps through vertices all
  /// farther than rho from every cop. Includes the current vertex.
  std::vector<Vertex> safe_reach(const std::vector<Vertex>& cops, Vertex r) const {
    std::vector<int> cop_dist = cops.empty() ? std::vector<int>(n_, -1)
                                             : g_.multi_source_dist_capped(cops, params_.rho);
    std::vector<Vertex> out;
    if (cop_dist[r] >= 0) return out;
    std::vector<int> depth(n_, -1);
    std::vector<Vertex> frontier{r};
    depth[r] = 0;
    out.push_back(r);
    int lv = 0;
    while (!frontier.empty() && lv < params_.s_r) {
      ++lv;
      std::vector<Vertex> next;
      for (Vertex a : frontier) {
        for (Vertex b : g_.neighbors(a)) {
          if (depth[b] >= 0 || cop_dist[b] >= 0) continue;
          depth[b] = lv;
          out.push_back(b);
          next.push_back(b);
        }
      }
      frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// All sorted cop tuples (for placement quantification).
  template <typename F>
  void for_each_tuple(F&& f) const {
    std::vector<Vertex> t(k_);
    for_each_tuple_rec(0, 0, t, f);
  }

  long tuple_rank(const std::vector<Vertex>& sorted) const {
    long r = 0;
    for (int j = 0; j < static_cast<int>(sorted.size()); ++j) r += binom(sorted[j] + j, j + 1);
    return r;
  }

  std::vector<Vertex> tuple_unrank(long rank) const {
    std::vector<Vertex> out(k_);
    for (int j = k_ - 1; j >= 0; --j) {
      // largest x with C(x, j+1) <= rank
      long x = j;
      while (binom(x + 1, j + 1) <= rank) ++x;
      rank -= binom(x, j + 1);
      out[j] = static_cast<Vertex>(x - j);
    }
    return out;
  }

 private:
  template <typename F>
  void enumerate_tuples(const std::vector<Vertex>& from, int j, std::vector<Vertex>& dest, F&& f) const {
    if (k_ == 0) return;
    if (j == k_) {
      f(dest);
      return;
    }
    for (Vertex v : balls_[from[j]]) {
      dest[j] = v;
      enumerate_tuples(from, j + 1, dest, f);
    }
  }

  template <typename F>
  void for_each_tuple_rec(int j, Vertex min_v, std::vector<Vertex>& t, F&& f) const {
    if (j == k_) {
      f(t);
      return;
    }
    for (Vertex v = min_v; v < n_; ++v) {
      t[j] = v;
      for_each_tuple_rec(j + 1, v, t, f);
    }
  }

  void binom_init(int max_n, int max_k) {
    binom_.assign(max_n + 1, std::vector<long>(max_k + 1, 0));
    for (int i = 0; i <= max_n; ++i) {
      binom_[i][0] = 1;
      for (int j = 1; j <= std::min(i, max_k); ++j)
        binom_[i][j] = binom_[i - 1][j - 1] + (i - 1 >= j ? binom_[i - 1][j] : 0);
    }
  }

  long binom(int nn, int kk) const {
    if (kk < 0 || nn < 0 || kk > static_cast<int>(binom_[0].size()) - 1) return 0;
    if (nn > static_cast<int>(binom_.size()) - 1) throw std::logic_error("binom table too small");
    if (kk > nn) return 0;
    return binom_[nn][kk];
  }

  const Graph& g_;
  GameParams params_;
  int n_ = 0;
  int k_ = 0;
  long tuple_count_ = 0;
  long size_ = 0;
  std::vector<std::vector<Vertex>> balls_;
  std::vector<std::vector<long>> binom_;
};

}  // namespace ccr
