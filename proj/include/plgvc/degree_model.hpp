#pragma once

// The (alpha,beta) degree model: y_i = floor(e^alpha / i^beta) vertices of
// degree i for i = 1..Delta, Delta = floor(e^(alpha/beta)). The sequence is
// kept integral; the zeta-based size estimates live on the analysis side.

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "plgvc/bounds.hpp"

namespace plgvc {

struct PlgParams {
  double alpha = 0.0;   // log of graph scale
  double beta = 0.0;    // log-log growth rate, > 2
  double scale = 0.0;   // e^alpha, cached
  int max_degree = 0;   // Delta = floor(e^(alpha/beta))
};

namespace detail {

// Largest d >= 1 with d^beta <= scale, i.e. floor(scale^(1/beta)) computed
// robustly against pow() rounding at exact integer powers.
inline int integer_max_degree(double scale, double beta) {
  int d = static_cast<int>(std::floor(std::pow(scale, 1.0 / beta)));
  while (d >= 1 && std::pow(static_cast<double>(d), beta) > scale) --d;
  while (std::pow(static_cast<double>(d + 1), beta) <= scale) ++d;
  return d;
}

}  // namespace detail

inline PlgParams plg_params_from_scale(double scale, double beta) {
  if (!(beta > 2.0)) throw std::invalid_argument("plg_params: requires beta > 2");
  if (!(scale > 0.0)) throw std::invalid_argument("plg_params: requires e^alpha > 0");
  PlgParams p;
  p.alpha = std::log(scale);
  p.beta = beta;
  p.scale = scale;
  p.max_degree = detail::integer_max_degree(scale, beta);
  if (p.max_degree < 1)
    throw std::invalid_argument("plg_params: alpha too small, max degree < 1");
  return p;
}

inline PlgParams plg_params(double alpha, double beta) {
  return plg_params_from_scale(std::exp(alpha), beta);
}

struct DegreeSequence {
  std::vector<long long> counts;  // counts[i-1] = y_i, degree classes 1..Delta
  long long total_vertices = 0;   // n
  long long total_degree = 0;     // D, kept even

  int max_degree() const { return static_cast<int>(counts.size()); }
};

// y_i = floor(scale / i^beta); if the total degree comes out odd the
// degree-1 class is incremented by one so a perfect matching on copies exists.
inline DegreeSequence build_degree_sequence(const PlgParams& p) {
  DegreeSequence seq;
  seq.counts.resize(static_cast<std::size_t>(p.max_degree));
  for (int i = 1; i <= p.max_degree; ++i) {
    const double y = std::floor(p.scale / std::pow(static_cast<double>(i), p.beta));
    seq.counts[static_cast<std::size_t>(i - 1)] = static_cast<long long>(y);
  }
  for (int i = 1; i <= p.max_degree; ++i) {
    seq.total_vertices += seq.counts[static_cast<std::size_t>(i - 1)];
    seq.total_degree += i * seq.counts[static_cast<std::size_t>(i - 1)];
  }
  if (seq.total_degree % 2 != 0) {
    seq.counts[0] += 1;
    seq.total_vertices += 1;
    seq.total_degree += 1;
  }
  return seq;
}

// Target degree per vertex id, degree-class-major: the first y_1 vertices
// have degree 1, the next y_2 degree 2, and so on.
inline std::vector<int> vertex_degrees(const DegreeSequence& seq) {
  std::vector<int> deg;
  deg.reserve(static_cast<std::size_t>(seq.total_vertices));
  for (int i = 1; i <= seq.max_degree(); ++i)
    deg.insert(deg.end(), static_cast<std::size_t>(seq.counts[static_cast<std::size_t>(i - 1)]), i);
  return deg;
}

// Closed-form size estimates: n ~ zeta(beta) e^alpha, m ~ zeta(beta-1) e^alpha / 2.
inline std::pair<double, double> expected_counts(const PlgParams& p) {
  return {zeta(p.beta) * p.scale, 0.5 * zeta(p.beta - 1.0) * p.scale};
}

}  // namespace plgvc
