#include <algorithm>
#include <set>

#include "doctest.h"
#include "plgvc/generator.hpp"

using namespace plgvc;

namespace {

DegreeSequence manual_sequence(std::vector<long long> counts) {
  DegreeSequence seq;
  seq.counts = std::move(counts);
  for (std::size_t i = 0; i < seq.counts.size(); ++i) {
    seq.total_vertices += seq.counts[i];
    seq.total_degree += static_cast<long long>(i + 1) * seq.counts[i];
  }
  return seq;
}

std::vector<Edge> sorted_edges(const MultiGraph& g) {
  auto e = g.edges;
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST_CASE("two degree-1 vertices give the unique matching") {
  const auto seq = manual_sequence({2});
  const MultiGraph g = generate(seq, {12345});
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0] == Edge{0, 1});
}

TEST_CASE("a single degree-2 vertex matches to itself") {
  DegreeSequence seq;
  seq.counts = {0, 1};
  seq.total_vertices = 1;
  seq.total_degree = 2;
  const MultiGraph g = generate(seq, {99});
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0] == Edge{0, 0});
}

TEST_CASE("odd total degree is rejected") {
  const auto seq = manual_sequence({1});
  CHECK_THROWS_AS(generate(seq, {1}), std::invalid_argument);
}

TEST_CASE("degree exactness on the model sequence") {
  const auto p = plg_params_from_scale(1000.0, 3.0);
  const auto seq = build_degree_sequence(p);
  const auto target = vertex_degrees(seq);
  for (std::uint64_t s : {0ull, 1ull, 424242ull}) {
    const MultiGraph g = generate(seq, {s});
    CHECK(g.n == 1194);
    CHECK(g.edges.size() == 763);  // total degree 1526 exactly
    const auto deg = g.degrees();
    bool all_match = true;
    for (int v = 0; v < g.n; ++v)
      if (deg[static_cast<std::size_t>(v)] != target[static_cast<std::size_t>(v)]) all_match = false;
    CHECK(all_match);
  }
}

TEST_CASE("equal seeds reproduce the edge multiset, distinct seeds differ") {
  const auto p = plg_params_from_scale(1000.0, 3.0);
  const auto seq = build_degree_sequence(p);
  CHECK(sorted_edges(generate(seq, {7})) == sorted_edges(generate(seq, {7})));

  std::set<std::vector<Edge>> seen;
  for (std::uint64_t s = 0; s < 10; ++s) seen.insert(sorted_edges(generate(seq, {s})));
  CHECK(seen.size() >= 2);
}

TEST_CASE("generate_batch shares the degree sequence") {
  const auto p = plg_params_from_scale(100.0, 2.5);
  const auto graphs = generate_batch(p, {{1}, {2}, {3}});
  REQUIRE(graphs.size() == 3);
  const auto d0 = graphs[0].degrees();
  CHECK(graphs[1].degrees() == d0);
  CHECK(graphs[2].degrees() == d0);
}

TEST_CASE("matching uniformity on the 4-copy sequence") {
  // two degree-2 vertices; the three pairings of their 4 copies collapse to
  // two observable outcomes: both self-loops (1 pairing) or the double edge
  // {0,1} x2 (2 pairings)
  DegreeSequence seq;
  seq.counts = {0, 2};
  seq.total_vertices = 2;
  seq.total_degree = 4;

  const int trials = 100000;
  int self_loops = 0, double_edges = 0;
  for (int s = 0; s < trials; ++s) {
    const MultiGraph g = generate(seq, {static_cast<std::uint64_t>(s)});
    REQUIRE(g.edges.size() == 2);
    if (g.edges[0].first == g.edges[0].second)
      ++self_loops;
    else
      ++double_edges;
  }
  const double f_loops = static_cast<double>(self_loops) / trials;
  const double f_double = static_cast<double>(double_edges) / trials;
  CHECK(f_loops == doctest::Approx(1.0 / 3.0).epsilon(0.05));
  CHECK(f_double == doctest::Approx(2.0 / 3.0).epsilon(0.05));
}
