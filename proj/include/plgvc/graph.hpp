#pragma once

// Graph representations shared by the whole library: the raw multigraph as
// sampled by the generator (self-loops and parallel edges allowed) and the
// simplified graph that carries all cover semantics. Vertex cover is
// invariant under collapsing parallel edges; a self-loop forces its vertex
// into every cover, so simplification records loop vertices separately.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plgvc {

using Edge = std::pair<int, int>;

struct MultiGraph {
  int n = 0;
  std::vector<Edge> edges;  // unordered pairs; u == v encodes a self-loop

  // Incidence count: a self-loop contributes 2.
  std::vector<long long> degrees() const {
    std::vector<long long> deg(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges) {
      deg[static_cast<std::size_t>(u)]++;
      deg[static_cast<std::size_t>(v)]++;
    }
    return deg;
  }

  long long total_degree() const { return 2 * static_cast<long long>(edges.size()); }
};

struct CoverAssignment {
  std::vector<std::uint8_t> in_cover;  // per-vertex 0/1

  long long cost() const {
    long long c = 0;
    for (std::uint8_t b : in_cover) c += b;
    return c;
  }
};

struct SimpleGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted distinct neighbors, no self entries
  std::vector<int> loop_vertices;     // sorted; carried >=1 self-loop before simplification

  int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }

  long long edge_count() const {
    long long deg_sum = 0;
    for (const auto& nb : adj) deg_sum += static_cast<long long>(nb.size());
    return deg_sum / 2;
  }

  bool has_edge(int u, int v) const {
    const auto& nb = adj[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
  }
};

// Collapse parallel edges, strip self-loops and remember their vertices.
// The vertex set is unchanged.
inline SimpleGraph simplify(const MultiGraph& g) {
  SimpleGraph s;
  s.n = g.n;
  s.adj.assign(static_cast<std::size_t>(g.n), {});
  std::vector<std::uint8_t> loop(static_cast<std::size_t>(g.n), 0);
  for (const auto& [u, v] : g.edges) {
    if (u == v) {
      loop[static_cast<std::size_t>(u)] = 1;
    } else {
      s.adj[static_cast<std::size_t>(u)].push_back(v);
      s.adj[static_cast<std::size_t>(v)].push_back(u);
    }
  }
  for (auto& nb : s.adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  for (int v = 0; v < g.n; ++v)
    if (loop[static_cast<std::size_t>(v)]) s.loop_vertices.push_back(v);
  return s;
}

// True iff every edge has an endpoint with y=1 and every loop vertex has y=1.
inline bool validate_cover(const SimpleGraph& g, const CoverAssignment& y) {
  if (static_cast<int>(y.in_cover.size()) != g.n)
    throw std::invalid_argument("validate_cover: assignment size does not match vertex count");
  for (int u = 0; u < g.n; ++u) {
    if (y.in_cover[static_cast<std::size_t>(u)]) continue;
    for (int v : g.adj[static_cast<std::size_t>(u)])
      if (!y.in_cover[static_cast<std::size_t>(v)]) return false;
  }
  for (int v : g.loop_vertices)
    if (!y.in_cover[static_cast<std::size_t>(v)]) return false;
  return true;
}

inline std::map<int, long long> induced_degree_stats(const SimpleGraph& g) {
  std::map<int, long long> hist;
  for (int v = 0; v < g.n; ++v) hist[g.degree(v)]++;
  return hist;
}

// Subgraph induced by `vertices` (need not be sorted); vertex i of the result
// corresponds to vertices[i] after sorting. Loop flags are carried over.
inline SimpleGraph induced_subgraph(const SimpleGraph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<int> index(static_cast<std::size_t>(g.n), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  SimpleGraph h;
  h.n = static_cast<int>(vertices.size());
  h.adj.assign(vertices.size(), {});
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : g.adj[static_cast<std::size_t>(vertices[i])])
      if (index[static_cast<std::size_t>(w)] >= 0)
        h.adj[i].push_back(index[static_cast<std::size_t>(w)]);
    std::sort(h.adj[i].begin(), h.adj[i].end());
  }
  for (int v : g.loop_vertices)
    if (index[static_cast<std::size_t>(v)] >= 0)
      h.loop_vertices.push_back(index[static_cast<std::size_t>(v)]);
  std::sort(h.loop_vertices.begin(), h.loop_vertices.end());
  return h;
}

// Text format: "p <n> <m>" header, then m lines "e <u> <v>" with 0-based
// endpoints. u == v is a self-loop, repeated lines are parallel edges.
// Writers emit edges sorted lexicographically.
inline void write_graph(std::ostream& out, const MultiGraph& g) {
  std::vector<Edge> sorted;
  sorted.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) sorted.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(sorted.begin(), sorted.end());
  out << "p " << g.n << ' ' << sorted.size() << '\n';
  for (const auto& [u, v] : sorted) out << "e " << u << ' ' << v << '\n';
}

inline MultiGraph read_graph(std::istream& in) {
  MultiGraph g;
  std::string line;
  long long m = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    char tag = 0;
    ls >> tag;
    if (tag == 'p') {
      if (m >= 0) throw std::invalid_argument("read_graph: duplicate header");
      if (!(ls >> g.n >> m) || g.n < 0 || m < 0)
        throw std::invalid_argument("read_graph: malformed header");
      g.edges.reserve(static_cast<std::size_t>(m));
    } else if (tag == 'e') {
      if (m < 0) throw std::invalid_argument("read_graph: edge before header");
      int u = 0, v = 0;
      if (!(ls >> u >> v)) throw std::invalid_argument("read_graph: malformed edge line");
      if (u < 0 || u >= g.n || v < 0 || v >= g.n)
        throw std::invalid_argument("read_graph: endpoint out of range");
      g.edges.emplace_back(u, v);
    } else {
      throw std::invalid_argument("read_graph: unknown line tag");
    }
  }
  if (m < 0) throw std::invalid_argument("read_graph: missing header");
  if (static_cast<long long>(g.edges.size()) != m)
    throw std::invalid_argument("read_graph: edge count does not match header");
  return g;
}

}  // namespace plgvc
