#include <cmath>
#include <numbers>

#include "doctest.h"
#include "plgvc/bounds.hpp"

using namespace plgvc;

namespace {

// Independent zeta evaluation for the consistency check: different N choice,
// different tail handling (two Euler-Maclaurin terms instead of a midpoint
// correction).
double zeta_reference(double s_in) {
  const long double s = s_in;
  const long long n = 4096 + 17;
  long double sum = 0.0L;
  for (long long i = n; i >= 1; --i) sum += std::pow(static_cast<long double>(i), -s);
  const long double nd = static_cast<long double>(n);
  return static_cast<double>(sum + std::pow(nd, 1.0L - s) / (s - 1.0L) -
                             0.5L * std::pow(nd, -s) + (s / 12.0L) * std::pow(nd, -s - 1.0L) -
                             (s * (s + 1.0L) * (s + 2.0L) / 720.0L) * std::pow(nd, -s - 3.0L));
}

}  // namespace

TEST_CASE("zeta hits the closed forms") {
  constexpr double pi = std::numbers::pi;
  CHECK(std::fabs(zeta(2.0, 1e-9) - pi * pi / 6.0) < 1e-9);
  CHECK(std::fabs(zeta(4.0, 1e-9) - pi * pi * pi * pi / 90.0) < 1e-9);
  CHECK(std::fabs(zeta(3.0, 1e-12) - 1.2020569031595943) < 1e-12);
  CHECK_THROWS_AS(zeta(1.0), std::domain_error);
  CHECK_THROWS_AS(zeta(0.5), std::domain_error);
}

TEST_CASE("zeta agrees with an independent evaluation") {
  for (double s : {1.05, 1.1, 1.5, 2.0, 2.42, 3.0, 5.5, 9.0}) {
    const double eps = 1e-12;
    CHECK(std::fabs(zeta(s, eps) - zeta_reference(s)) < 2 * eps);
  }
}

TEST_CASE("partial zeta sums") {
  CHECK(partial_zeta(2.0, 10) == doctest::Approx(1.5497677311665407).epsilon(1e-14));
  CHECK(partial_zeta(7.3, 1) == 1.0);
  for (double s : {1.2, 2.0, 3.7})
    for (long long d : {1, 5, 100}) CHECK(partial_zeta(s, d) < zeta(s, 1e-13));
}

TEST_CASE("eta first lower bound") {
  CHECK(eta_lower_first(3.0, 10) == doctest::Approx(0.16131449569660357).epsilon(1e-12));
  CHECK(eta_lower_first(3.0, 1) == doctest::Approx(0.25));
  double prev = 1.0;
  for (long long d = 1; d <= 64; d *= 2) {
    const double cur = eta_lower_first(3.0, d);
    CHECK(cur > 0.0);
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("eta refined lower bound") {
  const long long delta = 10;
  const double big_n = 1000.0 * partial_zeta(2.0, delta);  // 1549.7677...
  CHECK(eta_lower_refined(0.0, big_n, delta) == doctest::Approx(0.0));
  CHECK(eta_lower_refined(big_n - 2.0 - 0.5, big_n, delta) ==
        doctest::Approx((big_n - 10.0 + 1.0) / big_n).epsilon(1e-7));

  // plug-in point: degU = scale (1 + 2^(1-beta)) at beta=3, scale=1000
  const double deg_u = 1000.0 * 1.25;
  CHECK(eta_lower_refined(deg_u, big_n, delta) ==
        doctest::Approx(0.9871134470221989).epsilon(1e-12));
  CHECK_THROWS_AS(eta_lower_refined(big_n, big_n, delta), std::domain_error);
  CHECK_THROWS_AS(eta_lower_refined(1.0, 5.0, 10), std::domain_error);
}

TEST_CASE("expected x(V*) lower bound") {
  CHECK(ex_vstar_lower(3.0, 1000.0) == doctest::Approx(5.855622476957318).epsilon(1e-12));
  CHECK(ex_vstar_lower(3.0, 2000.0) ==
        doctest::Approx(2.0 * ex_vstar_lower(3.0, 1000.0)).epsilon(1e-12));
  CHECK(std::fabs(ex_vstar_lower(40.0, 1000.0)) < 1e-8);  // vanishes for large beta
}

TEST_CASE("x(V) upper bound") {
  CHECK(xv_upper(3.0, 1000.0) == doctest::Approx(601.0284515797971).epsilon(1e-12));
  CHECK(xv_upper(3.0, 0.0) == 0.0);
}

TEST_CASE("delta0 values and the partial-sum inequality") {
  CHECK(delta0(3.0) == 78);  // ceil(695/9)
  CHECK(delta0(2.5) == 43);
  CHECK(delta0(4.0) == 278);
  for (double beta = 2.01; beta <= 12.0; beta += 0.13) CHECK(delta0(beta) >= 8);

  // the lemma's conclusion, checked numerically past the threshold
  const double beta = 3.0;
  const long long d0 = delta0(beta);
  for (long long d = d0; d <= d0 + 100; ++d) {
    const double lhs = (partial_zeta(beta, d) - 1.0 - std::exp2(-beta)) /
                       partial_zeta(beta - 1.0, d);
    CHECK(lhs >= 1.0 / static_cast<double>(d + 1));
  }
}

TEST_CASE("rho_first value, range and limit") {
  CHECK(rho_first(3.0) == doctest::Approx(1.9951286644903699).epsilon(1e-12));
  for (double beta = 2.01; beta <= 10.0; beta += 0.01) {
    const double r = rho_first(beta);
    CHECK(r > 1.5);
    CHECK(r < 2.0);
  }
  CHECK(std::fabs(rho_first(50.0) - 2.0) < 1e-12);  // correction term vanishes
  CHECK_THROWS_AS(rho_first(2.0), std::domain_error);
}

TEST_CASE("rho_refined asymptotic value and domain") {
  CHECK(rho_refined(3.0) == doctest::Approx(1.9367829804630054).epsilon(1e-10));
  CHECK_THROWS_AS(rho_refined(2.3), std::domain_error);
  CHECK_THROWS_AS(rho_refined(2.424), std::domain_error);
}

TEST_CASE("finite-scale rho_refined converges to the asymptotic form") {
  const double asym = rho_refined_asymptotic(3.0);
  double prev_gap = 1.0;
  for (double e_alpha : {1e3, 1e6, 1e9}) {
    const double fin = rho_refined(3.0, std::log(e_alpha));
    const double gap = std::fabs(fin - asym);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < 1e-6);
}

TEST_CASE("refined bound improves on the first bound") {
  for (double beta = 2.43; beta <= 10.0 + 1e-9; beta += 0.01) {
    CHECK(rho_refined_asymptotic(beta) <= rho_first(beta));
    CHECK(rho_refined_asymptotic(beta) < 2.0);
  }
}

TEST_CASE("threshold observation: zeta(beta) - 2^-beta < 1 + 2^-beta past 2.424") {
  for (double beta = 2.425; beta <= 10.0; beta += 0.025)
    CHECK(zeta(beta) - std::exp2(-beta) < 1.0 + std::exp2(-beta));
}

TEST_CASE("bound report population rules") {
  const auto plain = make_bound_report(2.3);
  CHECK_FALSE(plain.rho_refined_asymptotic.has_value());
  CHECK_FALSE(plain.ex_vstar_lower.has_value());
  CHECK(plain.rho_first < 2.0);
  CHECK(plain.delta0 >= 8);

  const auto full = make_bound_report(3.0, std::log(1000.0));
  REQUIRE(full.rho_refined_asymptotic.has_value());
  REQUIRE(full.rho_refined_finite.has_value());
  REQUIRE(full.ex_vstar_lower.has_value());
  REQUIRE(full.xv_upper.has_value());
  CHECK(*full.ex_vstar_lower == doctest::Approx(5.855622476957318));
  CHECK(*full.xv_upper == doctest::Approx(601.0284515797971));
}
