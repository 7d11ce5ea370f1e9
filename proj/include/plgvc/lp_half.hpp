#pragma once

// Optimal half-integral solutions of the vertex-cover LP relaxation.
//
// Construction: double the graph into a bipartite one (left and right copy
// per vertex, edges (u_L, v_R) and (v_L, u_R) per simple edge, (v_L, v_R) per
// loop vertex), run Hopcroft-Karp, extract a minimum bipartite cover by the
// Koenig alternating-reachability argument and read x(v) off the two copies.
// The LP optimum equals half the bipartite cover size, exactly.
//
// Values are stored in half-units {0,1,2} so all feasibility and cost
// arithmetic stays integral. Everything processes vertices in ascending
// index order, which pins down one deterministic optimum among many.

#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "plgvc/graph.hpp"

namespace plgvc {

struct HalfAssignment {
  std::vector<std::uint8_t> halves;  // x(v) in {0, 1/2, 1} stored as {0,1,2}

  long long cost_halves() const {
    long long c = 0;
    for (std::uint8_t h : halves) c += h;
    return c;
  }
  double cost() const { return static_cast<double>(cost_halves()) / 2.0; }
};

struct NtPartition {
  std::vector<int> P;  // x = 1
  std::vector<int> Q;  // x = 1/2
  std::vector<int> R;  // x = 0
};

inline bool is_feasible(const SimpleGraph& g, const HalfAssignment& x) {
  if (static_cast<int>(x.halves.size()) != g.n) return false;
  for (std::uint8_t h : x.halves)
    if (h > 2) return false;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[static_cast<std::size_t>(u)])
      if (u < v && x.halves[static_cast<std::size_t>(u)] + x.halves[static_cast<std::size_t>(v)] < 2)
        return false;
  for (int v : g.loop_vertices)
    if (x.halves[static_cast<std::size_t>(v)] < 1) return false;
  return true;
}

struct HalfLpSolution {
  HalfAssignment x;
  long long matching_size = 0;  // maximum matching of the doubled bipartite graph
};

namespace detail {

struct HopcroftKarp {
  int n;
  const std::vector<std::vector<int>>& adj_left;  // left i -> right neighbors, sorted
  std::vector<int> match_left, match_right, dist;

  explicit HopcroftKarp(int n_, const std::vector<std::vector<int>>& adj)
      : n(n_), adj_left(adj), match_left(static_cast<std::size_t>(n_), -1),
        match_right(static_cast<std::size_t>(n_), -1), dist(static_cast<std::size_t>(n_), 0) {}

  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> q;
    for (int u = 0; u < n; ++u) {
      if (match_left[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = 0;
        q.push(u);
      } else {
        dist[static_cast<std::size_t>(u)] = kInf;
      }
    }
    bool reached_free = false;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj_left[static_cast<std::size_t>(u)]) {
        const int w = match_right[static_cast<std::size_t>(v)];
        if (w < 0) {
          reached_free = true;
        } else if (dist[static_cast<std::size_t>(w)] == kInf) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
    return reached_free;
  }

  bool dfs(int u) {
    for (int v : adj_left[static_cast<std::size_t>(u)]) {
      const int w = match_right[static_cast<std::size_t>(v)];
      if (w < 0 || (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(u)] + 1 && dfs(w))) {
        match_left[static_cast<std::size_t>(u)] = v;
        match_right[static_cast<std::size_t>(v)] = u;
        return true;
      }
    }
    dist[static_cast<std::size_t>(u)] = kInf;
    return false;
  }

  long long run() {
    long long size = 0;
    while (bfs())
      for (int u = 0; u < n; ++u)
        if (match_left[static_cast<std::size_t>(u)] < 0 && dfs(u)) ++size;
    return size;
  }
};

}  // namespace detail

inline HalfLpSolution solve_half_integral_full(const SimpleGraph& g) {
  // left adjacency of the doubled graph; a loop vertex gains the (v_L, v_R) edge
  std::vector<std::vector<int>> adj_left(static_cast<std::size_t>(g.n));
  for (int u = 0; u < g.n; ++u) adj_left[static_cast<std::size_t>(u)] = g.adj[static_cast<std::size_t>(u)];
  for (int v : g.loop_vertices) {
    auto& nb = adj_left[static_cast<std::size_t>(v)];
    nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
  }

  detail::HopcroftKarp hk(g.n, adj_left);
  const long long matching = hk.run();

  // Koenig reachability from unmatched left vertices: left -> right over
  // non-matching edges, right -> left over matching edges.
  std::vector<std::uint8_t> vis_left(static_cast<std::size_t>(g.n), 0);
  std::vector<std::uint8_t> vis_right(static_cast<std::size_t>(g.n), 0);
  std::queue<int> q;
  for (int u = 0; u < g.n; ++u)
    if (hk.match_left[static_cast<std::size_t>(u)] < 0) {
      vis_left[static_cast<std::size_t>(u)] = 1;
      q.push(u);
    }
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : adj_left[static_cast<std::size_t>(u)]) {
      if (v == hk.match_left[static_cast<std::size_t>(u)] || vis_right[static_cast<std::size_t>(v)]) continue;
      vis_right[static_cast<std::size_t>(v)] = 1;
      const int w = hk.match_right[static_cast<std::size_t>(v)];
      if (w >= 0 && !vis_left[static_cast<std::size_t>(w)]) {
        vis_left[static_cast<std::size_t>(w)] = 1;
        q.push(w);
      }
    }
  }

  HalfLpSolution sol;
  sol.matching_size = matching;
  sol.x.halves.resize(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    const std::uint8_t left_in_cover = vis_left[static_cast<std::size_t>(v)] ? 0 : 1;
    const std::uint8_t right_in_cover = vis_right[static_cast<std::size_t>(v)] ? 1 : 0;
    sol.x.halves[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(left_in_cover + right_in_cover);
  }
  return sol;
}

inline HalfAssignment solve_half_integral(const SimpleGraph& g) {
  return solve_half_integral_full(g).x;
}

inline NtPartition nt_partition(const SimpleGraph& g, const HalfAssignment& x) {
  if (!is_feasible(g, x)) throw std::invalid_argument("nt_partition: infeasible assignment");
  NtPartition nt;
  for (int v = 0; v < g.n; ++v) {
    switch (x.halves[static_cast<std::size_t>(v)]) {
      case 2: nt.P.push_back(v); break;
      case 1: nt.Q.push_back(v); break;
      default: nt.R.push_back(v); break;
    }
  }
  return nt;
}

// y(v) = 1 iff x(v) >= 1/2; the classic 2-approximation.
inline CoverAssignment two_approx_cover(const HalfAssignment& x) {
  CoverAssignment y;
  y.in_cover.resize(x.halves.size());
  for (std::size_t v = 0; v < x.halves.size(); ++v)
    y.in_cover[v] = x.halves[v] >= 1 ? 1 : 0;
  return y;
}

// Exhaustive minimum over {0,1,2}^n feasible assignments; test oracle.
inline HalfAssignment brute_half_lp(const SimpleGraph& g) {
  if (g.n > 14) throw std::invalid_argument("brute_half_lp: n must be <= 14");
  std::vector<std::uint8_t> loop(static_cast<std::size_t>(g.n), 0);
  for (int v : g.loop_vertices) loop[static_cast<std::size_t>(v)] = 1;

  std::vector<std::uint8_t> cur(static_cast<std::size_t>(g.n), 0);
  std::vector<std::uint8_t> best(static_cast<std::size_t>(g.n), 2);
  long long best_cost = 2LL * g.n;

  auto rec = [&](auto&& self, int v, long long cost) -> void {
    if (cost >= best_cost) return;
    if (v == g.n) {
      best_cost = cost;
      best = cur;
      return;
    }
    for (std::uint8_t val = 0; val <= 2; ++val) {
      if (loop[static_cast<std::size_t>(v)] && val < 1) continue;
      bool ok = true;
      for (int u : g.adj[static_cast<std::size_t>(v)]) {
        if (u >= v) break;  // adjacency sorted; later vertices unassigned
        if (cur[static_cast<std::size_t>(u)] + val < 2) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      cur[static_cast<std::size_t>(v)] = val;
      self(self, v + 1, cost + val);
    }
  };
  rec(rec, 0, 0);
  return HalfAssignment{std::move(best)};
}

}  // namespace plgvc
