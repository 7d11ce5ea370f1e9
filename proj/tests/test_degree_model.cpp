#include <cmath>

#include "doctest.h"
#include "plgvc/degree_model.hpp"

using namespace plgvc;

TEST_CASE("degree sequence at beta=3, scale=1000") {
  const auto p = plg_params_from_scale(1000.0, 3.0);
  CHECK(p.max_degree == 10);
  const auto seq = build_degree_sequence(p);
  const std::vector<long long> expected{1000, 125, 37, 15, 8, 4, 2, 1, 1, 1};
  CHECK(seq.counts == expected);
  CHECK(seq.total_vertices == 1194);
  CHECK(seq.total_degree == 1526);  // even, no parity fix
}

TEST_CASE("parity fix bumps the degree-1 class") {
  const auto p = plg_params_from_scale(1.0, 3.0);
  CHECK(p.max_degree == 1);
  const auto seq = build_degree_sequence(p);
  CHECK(seq.counts == std::vector<long long>{2});
  CHECK(seq.total_degree == 2);
}

TEST_CASE("max degree is floor(scale^(1/beta)) at awkward points") {
  CHECK(plg_params_from_scale(100.0, 2.5).max_degree == 6);
  // cube roots of perfect cubes must not be off by one
  CHECK(plg_params_from_scale(1000.0, 3.0).max_degree == 10);
  CHECK(plg_params_from_scale(999.9, 3.0).max_degree == 9);
  CHECK(plg_params_from_scale(1.0e6, 3.0).max_degree == 100);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(plg_params_from_scale(1000.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(plg_params_from_scale(0.5, 3.0), std::invalid_argument);  // Delta < 1
  CHECK_THROWS_AS(plg_params_from_scale(-1.0, 3.0), std::invalid_argument);
}

TEST_CASE("floor formula holds exactly for every class") {
  for (double beta : {2.1, 2.5, 3.0, 4.0}) {
    for (double scale : {50.0, 1234.5, 20000.0}) {
      const auto p = plg_params_from_scale(scale, beta);
      const auto seq = build_degree_sequence(p);
      for (int i = 2; i <= seq.max_degree(); ++i) {
        const long long want =
            static_cast<long long>(std::floor(scale / std::pow(static_cast<double>(i), beta)));
        CHECK(seq.counts[static_cast<std::size_t>(i - 1)] == want);
      }
      CHECK(seq.total_degree % 2 == 0);
    }
  }
}

TEST_CASE("expected counts against the zeta estimates") {
  const auto p = plg_params_from_scale(1000.0, 3.0);
  const auto [n_est, m_est] = expected_counts(p);
  CHECK(n_est == doctest::Approx(1202.0569).epsilon(1e-6));
  CHECK(m_est == doctest::Approx(822.46703).epsilon(1e-6));

  // only the degree-1 class survives as beta grows
  const auto far = expected_counts(plg_params_from_scale(1000.0, 40.0));
  CHECK(far.first == doctest::Approx(1000.0).epsilon(1e-9));
}

TEST_CASE("actual vertex count approaches the zeta estimate") {
  const auto check_gap = [](double scale, double tol) {
    const auto p = plg_params_from_scale(scale, 3.0);
    const auto seq = build_degree_sequence(p);
    const double n_est = expected_counts(p).first;
    const double gap = std::fabs(static_cast<double>(seq.total_vertices) - n_est) / n_est;
    CHECK(gap < tol);
  };
  check_gap(1.0e3, 0.01);
  check_gap(1.0e6, 0.001);
}

TEST_CASE("vertex degree layout is degree-class-major") {
  DegreeSequence seq;
  seq.counts = {2, 1};
  seq.total_vertices = 3;
  seq.total_degree = 4;
  CHECK(vertex_degrees(seq) == std::vector<int>{1, 1, 2});
}
