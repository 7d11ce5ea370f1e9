#include "doctest.h"
#include "plgvc/exact.hpp"
#include "plgvc/generator.hpp"
#include "plgvc/lp_half.hpp"
#include "plgvc/rounding.hpp"
#include "test_graphs.hpp"

using namespace plgvc;

namespace {

CoverAssignment cover_from_list(int n, const std::vector<int>& picks) {
  CoverAssignment y;
  y.in_cover.assign(static_cast<std::size_t>(n), 0);
  for (int v : picks) y.in_cover[static_cast<std::size_t>(v)] = 1;
  return y;
}

}  // namespace

TEST_CASE("small named optima") {
  CHECK(exact_vc(testutil::cycle(3)).opt_size == 2);
  CHECK(exact_vc(testutil::path(4)).opt_size == 2);
  CHECK(exact_vc(testutil::petersen()).opt_size == 6);
  CHECK(brute_vc(testutil::complete(4)) == 3);
  CHECK(brute_vc(testutil::cycle(6)) == 3);
}

TEST_CASE("returned cover is valid and certified against brute force") {
  for (int n : {8, 10, 12}) {
    for (double p : {0.2, 0.45}) {
      for (std::uint64_t s = 0; s < 6; ++s) {
        const SimpleGraph g = testutil::random_gnp(n, p, 17 * n + s);
        const ExactResult res = exact_vc(g);
        CHECK_FALSE(res.timed_out);
        CHECK(res.opt_size == brute_vc(g));
        CHECK(validate_cover(g, cover_from_list(g.n, res.cover)));
        CHECK(static_cast<long long>(res.cover.size()) == res.opt_size);
      }
    }
  }
}

TEST_CASE("loop vertices are always taken") {
  const SimpleGraph g = testutil::from_edges(4, {{0, 1}, {2, 3}}, {0, 2});
  const ExactResult res = exact_vc(g);
  CHECK(res.opt_size == 2);
  CHECK(res.cover == std::vector<int>{0, 2});
  CHECK(brute_vc(g) == 2);
}

TEST_CASE("LP sandwich and rounding sandwich") {
  for (std::uint64_t s = 0; s < 12; ++s) {
    const SimpleGraph g = testutil::random_gnp(14, 0.3, 7100 + s);
    const auto x = solve_half_integral(g);
    const auto y = round_half_integral(g, x);
    const auto res = exact_vc(g);
    REQUIRE_FALSE(res.timed_out);
    CHECK(2 * res.opt_size >= x.cost_halves());  // LP below OPT
    CHECK(res.opt_size <= y.cost());             // OPT below any rounded cover
  }
}

TEST_CASE("NT consistency: opt = |P| + opt on the Q-subgraph") {
  for (std::uint64_t s = 0; s < 12; ++s) {
    const SimpleGraph g = testutil::random_gnp(13, 0.28, 480 + s);
    const auto x = solve_half_integral(g);
    const auto nt = nt_partition(g, x);
    const SimpleGraph q_graph = induced_subgraph(g, nt.Q);
    CHECK(exact_vc(g).opt_size ==
          static_cast<long long>(nt.P.size()) + exact_vc(q_graph).opt_size);
  }
}

TEST_CASE("budget exhaustion reports timed_out instead of failing") {
  const SimpleGraph g = testutil::random_gnp(18, 0.5, 4);
  const ExactResult res = exact_vc(g, 2);
  CHECK(res.timed_out);
  CHECK(validate_cover(g, cover_from_list(g.n, res.cover)));
}

TEST_CASE("deterministic node counts") {
  const SimpleGraph g = testutil::random_gnp(14, 0.4, 99);
  const auto r1 = exact_vc(g);
  const auto r2 = exact_vc(g);
  CHECK(r1.nodes_explored == r2.nodes_explored);
  CHECK(r1.cover == r2.cover);
}

TEST_CASE("exact matches brute on generated power-law graphs") {
  const auto p = plg_params_from_scale(12.0, 2.5);
  const auto seq = build_degree_sequence(p);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const SimpleGraph g = simplify(generate(seq, {s}));
    REQUIRE(g.n <= 20);
    CHECK(exact_vc(g).opt_size == brute_vc(g));
  }
}
