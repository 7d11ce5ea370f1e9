#pragma once

// Deterministic rounding of an optimal half-integral solution x to an
// integral cover y. Low-degree structure is consumed first: pendant edges,
// then quartet paths u-v1-v2-w through a high-degree vertex, then single
// degree-2 vertices with a high-degree neighbor, then the remaining degree-2
// chains and cycles, and finally a cleanup pass that rounds untouched halves
// up and forces loop vertices into the cover. On V* (degree-1/2 vertices and
// their neighbors) the output satisfies y(V*) <= (3/2) x(V*); outside V* it
// never exceeds 2 x(v) pointwise.
//
// Every y decision in the structured steps marks its vertices processed;
// later steps skip processed vertices, and a processed neighbor seen from an
// unprocessed degree-2 vertex always carries y = 1 (checked at run time).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "plgvc/graph.hpp"
#include "plgvc/lp_half.hpp"

namespace plgvc {

struct RoundingContext {
  std::vector<std::uint8_t> in_l;       // degree-1, or degree-2 with x = 1/2
  std::vector<std::uint8_t> in_vprime;  // L and its neighborhood
  std::vector<std::uint8_t> in_vstar;   // degree-1/2 vertices and their neighbors
};

inline std::vector<std::uint8_t> vstar_mask(const SimpleGraph& g) {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(g.n), 0);
  for (int v = 0; v < g.n; ++v) {
    const int d = g.degree(v);
    if (d != 1 && d != 2) continue;
    mask[static_cast<std::size_t>(v)] = 1;
    for (int u : g.adj[static_cast<std::size_t>(v)]) mask[static_cast<std::size_t>(u)] = 1;
  }
  return mask;
}

inline std::vector<int> compute_vstar(const SimpleGraph& g) {
  const auto mask = vstar_mask(g);
  std::vector<int> vs;
  for (int v = 0; v < g.n; ++v)
    if (mask[static_cast<std::size_t>(v)]) vs.push_back(v);
  return vs;
}

inline RoundingContext make_rounding_context(const SimpleGraph& g, const HalfAssignment& x) {
  RoundingContext ctx;
  ctx.in_l.assign(static_cast<std::size_t>(g.n), 0);
  for (int v = 0; v < g.n; ++v) {
    const int d = g.degree(v);
    if (d == 1 || (d == 2 && x.halves[static_cast<std::size_t>(v)] == 1))
      ctx.in_l[static_cast<std::size_t>(v)] = 1;
  }
  ctx.in_vprime = ctx.in_l;
  for (int v = 0; v < g.n; ++v)
    if (ctx.in_l[static_cast<std::size_t>(v)])
      for (int u : g.adj[static_cast<std::size_t>(v)]) ctx.in_vprime[static_cast<std::size_t>(u)] = 1;
  ctx.in_vstar = vstar_mask(g);
  return ctx;
}

// Number of high-degree vertices adjacent to a degree-1 or degree-2 vertex;
// x(V*) >= half this count for every feasible half-integral x.
inline long long vstar_lower_bound_witness(const SimpleGraph& g) {
  long long count = 0;
  for (int u = 0; u < g.n; ++u) {
    if (g.degree(u) < 3) continue;
    for (int v : g.adj[static_cast<std::size_t>(u)]) {
      const int d = g.degree(v);
      if (d == 1 || d == 2) {
        ++count;
        break;
      }
    }
  }
  return count;
}

inline CoverAssignment round_half_integral(const SimpleGraph& g, const HalfAssignment& x) {
  if (!is_feasible(g, x))
    throw std::invalid_argument("round_half_integral: assignment infeasible");

  // -1 marks a pending half value; x in {0,1} seeds the working value
  std::vector<std::int8_t> y(static_cast<std::size_t>(g.n), -1);
  for (int v = 0; v < g.n; ++v) {
    const std::uint8_t h = x.halves[static_cast<std::size_t>(v)];
    if (h != 1) y[static_cast<std::size_t>(v)] = h == 2 ? 1 : 0;
  }
  std::vector<std::uint8_t> processed(static_cast<std::size_t>(g.n), 0);

  auto half = [&](int v) { return x.halves[static_cast<std::size_t>(v)] == 1; };
  auto require_one = [&](int v) {
    if (y[static_cast<std::size_t>(v)] != 1)
      throw std::logic_error("round_half_integral: processed neighbor without y=1");
  };

  // step 1: pendant vertices drop to 0, their neighbor enters the cover
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) != 1 || processed[static_cast<std::size_t>(v)]) continue;
    const int u = g.adj[static_cast<std::size_t>(v)][0];
    y[static_cast<std::size_t>(v)] = 0;
    y[static_cast<std::size_t>(u)] = 1;
    processed[static_cast<std::size_t>(v)] = 1;
    processed[static_cast<std::size_t>(u)] = 1;
  }

  // step 2: paths u-v1-v2-w with deg(u) >= 3 and two half-valued degree-2
  // inner vertices; u, v1, v2 must be unprocessed, w may already be processed
  // and may coincide with u.
  for (int v1 = 0; v1 < g.n; ++v1) {
    if (processed[static_cast<std::size_t>(v1)] || g.degree(v1) != 2 || !half(v1)) continue;
    const auto& nb = g.adj[static_cast<std::size_t>(v1)];
    for (int pick = 0; pick < 2; ++pick) {
      const int u = nb[static_cast<std::size_t>(pick)];
      const int v2 = nb[static_cast<std::size_t>(1 - pick)];
      if (processed[static_cast<std::size_t>(u)] || g.degree(u) < 3) continue;
      if (processed[static_cast<std::size_t>(v2)] || g.degree(v2) != 2 || !half(v2)) continue;
      const auto& nb2 = g.adj[static_cast<std::size_t>(v2)];
      const int w = nb2[0] == v1 ? nb2[1] : nb2[0];
      y[static_cast<std::size_t>(u)] = 1;
      y[static_cast<std::size_t>(w)] = 1;
      y[static_cast<std::size_t>(v1)] = 1;
      y[static_cast<std::size_t>(v2)] = 0;
      processed[static_cast<std::size_t>(u)] = 1;
      processed[static_cast<std::size_t>(v1)] = 1;
      processed[static_cast<std::size_t>(v2)] = 1;
      processed[static_cast<std::size_t>(w)] = 1;
      break;
    }
  }

  // steps 3 and 4 share one case table on the processed flags of the two
  // neighbors; step 3 is restricted to vertices with a high-degree neighbor
  auto settle_degree2 = [&](int v) {
    const int u = g.adj[static_cast<std::size_t>(v)][0];
    const int w = g.adj[static_cast<std::size_t>(v)][1];
    const bool pu = processed[static_cast<std::size_t>(u)];
    const bool pw = processed[static_cast<std::size_t>(w)];
    if (pu) require_one(u);
    if (pw) require_one(w);
    y[static_cast<std::size_t>(v)] = 0;
    processed[static_cast<std::size_t>(v)] = 1;
    if (!pu) {
      y[static_cast<std::size_t>(u)] = 1;
      processed[static_cast<std::size_t>(u)] = 1;
    }
    if (!pw) {
      y[static_cast<std::size_t>(w)] = 1;
      processed[static_cast<std::size_t>(w)] = 1;
    }
  };

  for (int v = 0; v < g.n; ++v) {
    if (processed[static_cast<std::size_t>(v)] || g.degree(v) != 2 || !half(v)) continue;
    const auto& nb = g.adj[static_cast<std::size_t>(v)];
    if (g.degree(nb[0]) >= 3 || g.degree(nb[1]) >= 3) settle_degree2(v);
  }
  for (int v = 0; v < g.n; ++v) {
    if (processed[static_cast<std::size_t>(v)] || g.degree(v) != 2 || !half(v)) continue;
    settle_degree2(v);
  }

  // step 5: untouched halves round up; loop vertices are forced in
  CoverAssignment cover;
  cover.in_cover.resize(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    std::int8_t val = y[static_cast<std::size_t>(v)];
    if (val < 0) val = 1;  // unprocessed x = 1/2
    cover.in_cover[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(val);
  }
  for (int v : g.loop_vertices) cover.in_cover[static_cast<std::size_t>(v)] = 1;
  return cover;
}

struct RatioDecomposition {
  long long x_halves_vstar = 0;
  long long x_halves_rest = 0;
  long long y_vstar = 0;
  long long y_rest = 0;
  std::optional<double> vstar;      // y(V*) / x(V*)
  std::optional<double> rest;       // y(V \ V*) / x(V \ V*)
  std::optional<double> composite;  // (x(V*)/x(V)) * 3/2 + (x(V\V*)/x(V)) * 2
};

inline RatioDecomposition ratio_decomposition(const SimpleGraph& g, const HalfAssignment& x,
                                              const CoverAssignment& y) {
  const auto mask = vstar_mask(g);
  RatioDecomposition r;
  for (int v = 0; v < g.n; ++v) {
    if (mask[static_cast<std::size_t>(v)]) {
      r.x_halves_vstar += x.halves[static_cast<std::size_t>(v)];
      r.y_vstar += y.in_cover[static_cast<std::size_t>(v)];
    } else {
      r.x_halves_rest += x.halves[static_cast<std::size_t>(v)];
      r.y_rest += y.in_cover[static_cast<std::size_t>(v)];
    }
  }
  if (r.x_halves_vstar > 0)
    r.vstar = 2.0 * static_cast<double>(r.y_vstar) / static_cast<double>(r.x_halves_vstar);
  if (r.x_halves_rest > 0)
    r.rest = 2.0 * static_cast<double>(r.y_rest) / static_cast<double>(r.x_halves_rest);
  const long long x_total = r.x_halves_vstar + r.x_halves_rest;
  if (x_total > 0) {
    const double share_vstar = static_cast<double>(r.x_halves_vstar) / static_cast<double>(x_total);
    r.composite = share_vstar * 1.5 + (1.0 - share_vstar) * 2.0;
  }
  return r;
}

}  // namespace plgvc
