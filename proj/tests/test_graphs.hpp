#pragma once

// Small named graphs and a seeded random-graph builder shared by the tests.

#include <random>
#include <utility>
#include <vector>

#include "plgvc/graph.hpp"

namespace testutil {

inline plgvc::SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                     const std::vector<int>& loops = {}) {
  plgvc::MultiGraph mg;
  mg.n = n;
  for (const auto& [u, v] : edges) mg.edges.emplace_back(u, v);
  for (int v : loops) mg.edges.emplace_back(v, v);
  return plgvc::simplify(mg);
}

inline plgvc::SimpleGraph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edges(n, e);
}

inline plgvc::SimpleGraph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return from_edges(n, e);
}

// center 0, leaves 1..k
inline plgvc::SimpleGraph star(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
  return from_edges(k + 1, e);
}

inline plgvc::SimpleGraph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return from_edges(n, e);
}

inline plgvc::SimpleGraph petersen() {
  return from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

inline plgvc::SimpleGraph random_gnp(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) e.emplace_back(u, v);
  return from_edges(n, e);
}

}  // namespace testutil
