#pragma once

// Closed-form bound evaluation: Riemann zeta with controlled error, partial
// power sums, the eta lower bounds on the matching probability, the expected
// x(V*) lower bound, the x(V) upper bound, the degree threshold delta0 and
// the two expected-approximation-ratio bounds rho (all beta > 2) and
// rho' (beta > 2.424, finite-scale and asymptotic forms).

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace plgvc {

// zeta(s) for s > 1 with |result - zeta(s)| < eps.
//
// Midpoint-corrected partial sum: sum_{i=1}^{N} i^-s + N^(1-s)/(s-1) - N^-s/2.
// The plain tail lies in (0, N^(1-s)/(s-1)); with the midpoint correction the
// Euler-Maclaurin remainder is below (s/12) * N^-(s+1), and N is grown until
// that bound is under eps/2 (the rest of the budget absorbs summation
// rounding, which compensated summation keeps near one ulp).
inline double zeta(double s, double eps = 1e-12) {
  if (!(s > 1.0)) throw std::domain_error("zeta: requires s > 1");
  if (!(eps > 0.0)) throw std::domain_error("zeta: requires eps > 0");
  std::uint64_t n = 16;
  while ((s / 12.0) * std::pow(static_cast<double>(n), -s - 1.0) >= eps / 2.0 &&
         n < (1ull << 40))
    n *= 2;
  double sum = 0.0, comp = 0.0;
  for (std::uint64_t i = n; i >= 1; --i) {  // small terms first
    const double term = std::pow(static_cast<double>(i), -s);
    const double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
  }
  sum += comp;
  const double nd = static_cast<double>(n);
  return sum + std::pow(nd, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(nd, -s);
}

// sum_{i=1}^{delta} i^-s, exact finite sum to working precision.
inline double partial_zeta(double s, long long delta) {
  if (delta < 1) throw std::domain_error("partial_zeta: requires delta >= 1");
  double sum = 0.0, comp = 0.0;
  for (long long i = delta; i >= 1; --i) {
    const double term = std::pow(static_cast<double>(i), -s);
    const double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

// Lower bound on the probability that a vertex of degree >= 3 is matched to a
// degree-1 or degree-2 vertex: 1 / (2^(beta-1) * sum_{i=1}^{delta} i^-(beta-1)).
inline double eta_lower_first(double beta, long long delta) {
  if (!(beta > 2.0)) throw std::domain_error("eta_lower_first: requires beta > 2");
  return 1.0 / (std::exp2(beta - 1.0) * partial_zeta(beta - 1.0, delta));
}

// Refined bound: ((N - delta + 1) / N) * (1 - ((N - deg_u - 2) / (N - 2))^3)
// where N is the total number of vertex copies and deg_u the copy count of
// the target set.
inline double eta_lower_refined(double deg_u, double big_n, long long delta) {
  if (!(big_n > deg_u + 2.0))
    throw std::domain_error("eta_lower_refined: requires N > degU + 2");
  if (!(big_n > static_cast<double>(delta)))
    throw std::domain_error("eta_lower_refined: requires N > delta");
  const double inner = (big_n - deg_u - 2.0) / (big_n - 2.0);
  return ((big_n - static_cast<double>(delta) + 1.0) / big_n) *
         (1.0 - inner * inner * inner);
}

// Lower bound on E[x(V*)]: (scale / 2^beta) * (zeta(beta) - 1 - 2^-beta) / zeta(beta-1).
inline double ex_vstar_lower(double beta, double scale) {
  if (!(beta > 2.0)) throw std::domain_error("ex_vstar_lower: requires beta > 2");
  return (scale / std::exp2(beta)) * (zeta(beta) - 1.0 - std::exp2(-beta)) /
         zeta(beta - 1.0);
}

// Upper bound on x(V): the all-half assignment, (1/2) * zeta(beta) * scale.
inline double xv_upper(double beta, double scale) {
  if (!(beta > 2.0)) throw std::domain_error("xv_upper: requires beta > 2");
  return 0.5 * zeta(beta) * scale;
}

// Degree threshold ceil((8^b + 2*4^b + 6*2^b + 7) / (1 + 2^b)) past which the
// partial-sum inequality of the first analysis holds.
inline long long delta0(double beta) {
  if (!(beta > 2.0)) throw std::domain_error("delta0: requires beta > 2");
  const double num = std::pow(8.0, beta) + 2.0 * std::pow(4.0, beta) +
                     6.0 * std::exp2(beta) + 7.0;
  const double val = std::ceil(num / (1.0 + std::exp2(beta)));
  if (!(val < 4.0e18)) throw std::overflow_error("delta0: value out of integer range");
  return static_cast<long long>(val);
}

// First-analysis expected approximation ratio,
// 2 - (zeta(beta) - 1 - 2^-beta) / (2^beta * zeta(beta-1) * zeta(beta)).
inline double rho_first(double beta) {
  if (!(beta > 2.0)) throw std::domain_error("rho_first: requires beta > 2");
  const double zb = zeta(beta);
  const double zb1 = zeta(beta - 1.0);
  return 2.0 - (zb - 1.0 - std::exp2(-beta)) / (std::exp2(beta) * zb1 * zb);
}

inline constexpr double kRhoRefinedBetaMin = 2.424;

// Refined-analysis ratio in its asymptotic (scale -> infinity) form.
inline double rho_refined_asymptotic(double beta) {
  if (!(beta > kRhoRefinedBetaMin))
    throw std::domain_error("rho_refined: requires beta > 2.424");
  const double zb = zeta(beta);
  const double zb1 = zeta(beta - 1.0);
  const double factor = (zb - 1.0 - std::exp2(-beta)) * zb1 / (zb1 * zb);
  const double inner = (zb1 - (1.0 + std::exp2(1.0 - beta))) / zb1;
  return 2.0 - factor * (1.0 - inner * inner * inner);
}

// Refined-analysis ratio at finite scale e^alpha, with the delta/scale and
// 2/scale corrections; delta enters as the real value e^(alpha/beta).
inline double rho_refined_finite(double beta, double alpha) {
  if (!(beta > kRhoRefinedBetaMin))
    throw std::domain_error("rho_refined: requires beta > 2.424");
  const double scale = std::exp(alpha);
  const double delta = std::exp(alpha / beta);
  const double zb = zeta(beta);
  const double zb1 = zeta(beta - 1.0);
  const double factor =
      (zb - 1.0 - std::exp2(-beta)) * (zb1 - delta / scale + 1.0 / scale) / (zb1 * zb);
  const double inner =
      (zb1 - (1.0 + std::exp2(1.0 - beta)) - 2.0 / scale) / (zb1 - 2.0 / scale);
  return 2.0 - factor * (1.0 - inner * inner * inner);
}

inline double rho_refined(double beta, std::optional<double> alpha = std::nullopt) {
  return alpha ? rho_refined_finite(beta, *alpha) : rho_refined_asymptotic(beta);
}

struct BoundReport {
  double beta = 0.0;
  std::optional<double> alpha;
  double zeta_beta = 0.0;
  double zeta_beta_minus1 = 0.0;
  double rho_first = 0.0;
  std::optional<double> rho_refined_finite;      // needs alpha and beta > 2.424
  std::optional<double> rho_refined_asymptotic;  // needs beta > 2.424
  long long delta0 = 0;
  std::optional<double> ex_vstar_lower;  // needs alpha
  std::optional<double> xv_upper;        // needs alpha
};

inline BoundReport make_bound_report(double beta, std::optional<double> alpha = std::nullopt) {
  BoundReport r;
  r.beta = beta;
  r.alpha = alpha;
  r.zeta_beta = zeta(beta);
  r.zeta_beta_minus1 = zeta(beta - 1.0);
  r.rho_first = rho_first(beta);
  if (beta > kRhoRefinedBetaMin) {
    r.rho_refined_asymptotic = rho_refined_asymptotic(beta);
    if (alpha) r.rho_refined_finite = rho_refined_finite(beta, *alpha);
  }
  r.delta0 = delta0(beta);
  if (alpha) {
    const double scale = std::exp(*alpha);
    r.ex_vstar_lower = ex_vstar_lower(beta, scale);
    r.xv_upper = xv_upper(beta, scale);
  }
  return r;
}

}  // namespace plgvc
