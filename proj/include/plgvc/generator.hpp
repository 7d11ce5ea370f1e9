#pragma once

// Random multigraph sampling: lay out deg(v) copies of each vertex
// vertex-major, shuffle the copy list, pair consecutive entries. The shuffle
// is a Fisher-Yates over mt19937_64 with rejection-sampled bounded draws, so
// equal seeds give identical edge multisets on every platform this artifact
// is built for.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "plgvc/degree_model.hpp"
#include "plgvc/graph.hpp"

namespace plgvc {

struct GenSeed {
  std::uint64_t value = 0;
};

namespace detail {

inline std::uint64_t bounded_u64(std::mt19937_64& rng, std::uint64_t bound) {
  // unbiased draw in [0, bound); rejects the wrap-around remainder range
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace detail

inline MultiGraph generate(const DegreeSequence& seq, GenSeed seed) {
  if (seq.total_degree % 2 != 0)
    throw std::invalid_argument("generate: total degree must be even");
  const std::vector<int> target = vertex_degrees(seq);

  std::vector<int> copies;
  copies.reserve(static_cast<std::size_t>(seq.total_degree));
  for (std::size_t v = 0; v < target.size(); ++v)
    copies.insert(copies.end(), static_cast<std::size_t>(target[v]), static_cast<int>(v));

  std::mt19937_64 rng(seed.value);
  for (std::size_t i = copies.size(); i > 1; --i)
    std::swap(copies[i - 1], copies[detail::bounded_u64(rng, i)]);

  MultiGraph g;
  g.n = static_cast<int>(target.size());
  g.edges.reserve(copies.size() / 2);
  for (std::size_t k = 0; k + 1 < copies.size(); k += 2) {
    const int u = copies[k], v = copies[k + 1];
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return g;
}

inline std::vector<MultiGraph> generate_batch(const PlgParams& p,
                                              const std::vector<GenSeed>& seeds) {
  const DegreeSequence seq = build_degree_sequence(p);
  std::vector<MultiGraph> out;
  out.reserve(seeds.size());
  for (const GenSeed& s : seeds) out.push_back(generate(seq, s));
  return out;
}

}  // namespace plgvc
