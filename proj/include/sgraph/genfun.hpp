#pragma once

#include <cstdint>

#include "sgraph/degree_set.hpp"

namespace sgraph {

// Evaluation bundle for the exponential generating function
//   phi_S(mu) = sum_{k in S} mu^k / k!
// and its first two log-derivative ratios at a fixed mu.
struct GenFunEval {
  double mu = 0;
  double log_phi = 0;  // log phi_S(mu); -inf when phi_S(mu) = 0 (mu=0, 0 not in S)
  double r1 = 0;       // phi'_S(mu) / phi_S(mu); NaN when undefined at mu=0
  double r2 = 0;       // phi''_S(mu) / phi_S(mu); NaN when undefined at mu=0
  std::uint64_t cutoff_used = 0;  // largest degree included in the sums
  double tail_bound = 0;          // relative truncation error bound (0 if exact)
};

inline constexpr double kDefaultRelTol = 1e-12;

// Evaluates phi_S and ratio sums with relative error <= rel_tol.
// Throws std::invalid_argument for mu < 0, non-finite mu, or rel_tol
// outside (0, 1e-6].
GenFunEval eval_genfun(const DegreeSet& S, double mu, double rel_tol = kDefaultRelTol);

// Poisson(mu) conditioned on S: pmf, cdf, mean nu(mu) = mu phi'/phi.
// mu = 0 requires 0 in S (point mass at 0); otherwise throws
// std::domain_error (undefined at zero).
double pos_pmf(const DegreeSet& S, double mu, std::uint64_t k,
               double rel_tol = kDefaultRelTol);
double pos_cdf(const DegreeSet& S, double mu, std::uint64_t k,
               double rel_tol = kDefaultRelTol);
double pos_mean(const DegreeSet& S, double mu, double rel_tol = kDefaultRelTol);

// Q(mu) = (mu^2 phi'' - mu phi') / phi = sum_j j(j-2) pmf(j).
double q_value(const DegreeSet& S, double mu, double rel_tol = kDefaultRelTol);

// Selection functionals. psi is intrinsic; psi_check and psi_tilde depend on
// lambda and satisfy psi_tilde >= psi_check with equality exactly at roots of
// the characteristic equation mu phi'/phi = mu^2/lambda.
double psi(const DegreeSet& S, double mu, double rel_tol = kDefaultRelTol);
double psi_check(const DegreeSet& S, double mu, double lambda,
                 double rel_tol = kDefaultRelTol);
double psi_tilde(const DegreeSet& S, double mu, double lambda,
                 double rel_tol = kDefaultRelTol);

// lambda_hat(mu) = mu phi_S(mu) / phi'_S(mu), the lambda at which mu solves
// the characteristic equation. Throws for mu <= 0.
double lambda_hat(const DegreeSet& S, double mu, double rel_tol = kDefaultRelTol);

// Limit of lambda_hat as mu -> 0+, by the leading powers of phi and phi':
//   min S >= 1            -> 0
//   0,1 in S              -> 0
//   0 in S, 1 out, 2 in   -> 1
//   0 in S, 1,2 out       -> +inf
double lambda_hat_zero_limit(const DegreeSet& S);

}  // namespace sgraph
