#pragma once

// Exact minimum vertex cover for desk-scale instances: branch and bound with
// degree-0/degree-1/loop reductions and the half-integral LP value as lower
// bound, branching on a maximum-degree vertex (take it, or take its whole
// neighborhood). A node budget turns blow-ups into a timed-out result
// instead of an error.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "plgvc/graph.hpp"
#include "plgvc/lp_half.hpp"

namespace plgvc {

struct ExactResult {
  long long opt_size = 0;
  std::vector<int> cover;
  long long nodes_explored = 0;
  bool timed_out = false;
};

namespace detail {

struct ExactSolver {
  const SimpleGraph& g;
  long long budget;
  long long nodes = 0;
  bool timed_out = false;
  long long best_cost;
  std::vector<int> best_cover;
  std::vector<int> picks;

  explicit ExactSolver(const SimpleGraph& g_, long long budget_)
      : g(g_), budget(budget_), best_cost(g_.n) {
    best_cover.resize(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) best_cover[static_cast<std::size_t>(v)] = v;
  }

  int alive_degree(const std::vector<std::uint8_t>& alive, int v) const {
    int d = 0;
    for (int u : g.adj[static_cast<std::size_t>(v)]) d += alive[static_cast<std::size_t>(u)];
    return d;
  }

  void record(long long cost) {
    if (cost >= best_cost) return;
    best_cost = cost;
    best_cover = picks;
  }

  void search(std::vector<std::uint8_t> alive, long long cost) {
    ++nodes;
    if (nodes > budget) {
      timed_out = true;
      return;
    }

    const std::size_t picks_mark = picks.size();
    // reductions to a fixed point: isolated vertices leave, the neighbor of
    // a pendant vertex is always safe to take, loop vertices must be taken
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v : g.loop_vertices) {
        if (!alive[static_cast<std::size_t>(v)]) continue;
        alive[static_cast<std::size_t>(v)] = 0;
        picks.push_back(v);
        ++cost;
        changed = true;
      }
      for (int v = 0; v < g.n && cost < best_cost; ++v) {
        if (!alive[static_cast<std::size_t>(v)]) continue;
        const int d = alive_degree(alive, v);
        if (d == 0) {
          alive[static_cast<std::size_t>(v)] = 0;
          changed = true;
        } else if (d == 1) {
          int u = -1;
          for (int w : g.adj[static_cast<std::size_t>(v)])
            if (alive[static_cast<std::size_t>(w)]) u = w;
          alive[static_cast<std::size_t>(v)] = 0;
          alive[static_cast<std::size_t>(u)] = 0;
          picks.push_back(u);
          ++cost;
          changed = true;
        }
      }
    }

    if (cost < best_cost) {
      std::vector<int> rest;
      for (int v = 0; v < g.n; ++v)
        if (alive[static_cast<std::size_t>(v)]) rest.push_back(v);

      if (rest.empty()) {
        record(cost);
      } else {
        const SimpleGraph sub = induced_subgraph(g, rest);
        const long long lp_halves = solve_half_integral_full(sub).matching_size;
        const long long lower = cost + (lp_halves + 1) / 2;
        if (lower < best_cost) {
          int pick = -1, pick_deg = -1;
          for (int v : rest) {
            const int d = alive_degree(alive, v);
            if (d > pick_deg) {
              pick_deg = d;
              pick = v;
            }
          }
          // branch: take the vertex
          {
            auto next = alive;
            next[static_cast<std::size_t>(pick)] = 0;
            picks.push_back(pick);
            search(std::move(next), cost + 1);
            picks.pop_back();
          }
          // branch: exclude it, take its alive neighborhood
          if (!timed_out) {
            auto next = alive;
            next[static_cast<std::size_t>(pick)] = 0;
            long long extra = 0;
            const std::size_t mark = picks.size();
            for (int u : g.adj[static_cast<std::size_t>(pick)])
              if (next[static_cast<std::size_t>(u)]) {
                next[static_cast<std::size_t>(u)] = 0;
                picks.push_back(u);
                ++extra;
              }
            search(std::move(next), cost + extra);
            picks.resize(mark);
          }
        }
      }
    }
    picks.resize(picks_mark);
  }
};

}  // namespace detail

inline ExactResult exact_vc(const SimpleGraph& g, long long node_budget = 10'000'000) {
  detail::ExactSolver solver(g, node_budget);
  std::vector<std::uint8_t> alive(static_cast<std::size_t>(g.n), 1);
  solver.search(std::move(alive), 0);
  ExactResult res;
  res.opt_size = solver.best_cost;
  res.cover = solver.best_cover;
  std::sort(res.cover.begin(), res.cover.end());
  res.nodes_explored = solver.nodes;
  res.timed_out = solver.timed_out;
  return res;
}

// Minimum over all 2^n subsets; the oracle's oracle.
inline long long brute_vc(const SimpleGraph& g) {
  if (g.n > 20) throw std::invalid_argument("brute_vc: n must be <= 20");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[static_cast<std::size_t>(u)])
      if (u < v) edges.emplace_back(u, v);
  std::uint32_t loop_mask = 0;
  for (int v : g.loop_vertices) loop_mask |= 1u << v;

  long long best = g.n;
  const std::uint32_t limit = g.n >= 32 ? 0 : (1u << g.n);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    if ((mask & loop_mask) != loop_mask) continue;
    bool ok = true;
    for (const auto& [u, v] : edges)
      if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
        ok = false;
        break;
      }
    if (ok) best = size;
  }
  return best;
}

}  // namespace plgvc
