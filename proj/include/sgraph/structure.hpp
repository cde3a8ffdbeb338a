#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgraph/degree_set.hpp"
#include "sgraph/genfun.hpp"

namespace sgraph {

enum class GiantCase { I, II, III };

const char* giant_case_name(GiantCase c);

// Asymptotic giant-component prediction at a root mu:
//   case i   : Q > 0 and 1 in S  -> xi* in (0,1) solves chi_mu(xi)=0
//   case ii  : Q > 0 and 1 not in S -> xi* = 0
//   case iii : Q <= 0 -> xi* = 1, no giant
// gamma* = 1 - phi_S(xi* mu)/phi_S(mu); zeta* = (nu/2)(1 - xi*^2).
struct GiantPrediction {
  double mu = 0;
  double Q = 0;
  double xi_star = 1;
  double gamma_star = 0;   // giant vertex fraction
  double zeta_star = 0;    // giant edges per vertex
  GiantCase case_id = GiantCase::III;
};

// Asymptotic k-core prediction at a root mu. r_hat is the largest r in [0,1]
// with nu r^2 = h_{mu,k}(r); degenerate_boundary marks a boundary where the
// strict inequality nu r^2 < h just below r_hat could not be verified.
struct CorePrediction {
  double mu = 0;
  int k = 0;
  double r_hat = 0;
  double vertex_fraction = 0;  // h_bar_{mu,k}(r_hat)
  double edge_fraction = 0;    // (nu/2) r_hat^2
  bool degenerate_boundary = false;
  std::string note;
};

// chi_mu(xi) = nu(mu) xi^2 - mu xi phi'_S(mu xi)/phi_S(mu).
// Vanishes at xi=0 (when defined) and xi=1.
double chi(const DegreeSet& S, double mu, double xi,
           double rel_tol = kDefaultRelTol);

// Predictions at an explicit root mu, or at mu*(lambda) (the latter throws
// TieError when the maximizer is tied). Both require S not a subset of {0,2}.
GiantPrediction giant_prediction_mu(const DegreeSet& S, double mu,
                                    double tol = 1e-10);
GiantPrediction giant_prediction(const DegreeSet& S, double lambda,
                                 double tol = 1e-10);

// Extinction probability of the branching process whose offspring law is
// Poisson(mu) conditioned on the shifted set {k : k+1 in S}: the smallest
// fixed point of its generating function in [0,1], by monotone iteration
// from 0.
double gw_extinction(const DegreeSet& S, double mu, double tol = 1e-12);

// Thinning: given a degree W ~ Po_S(mu), keep each of the W half-edges
// independently with probability r.
//   thinned_pmf : P(W_{mu,r} = l)
//   h_value     : E[ W_{mu,r} 1{W_{mu,r} >= k} ]
//   h_bar_value : P(W_{mu,r} >= k)
double thinned_pmf(const DegreeSet& S, double mu, double r, std::uint64_t l,
                   double rel_tol = kDefaultRelTol);
double h_value(const DegreeSet& S, double mu, int k, double r,
               double rel_tol = kDefaultRelTol);
double h_bar_value(const DegreeSet& S, double mu, int k, double r,
                   double rel_tol = kDefaultRelTol);

CorePrediction core_prediction_mu(const DegreeSet& S, double mu, int k,
                                  double tol = 1e-10);
CorePrediction core_prediction(const DegreeSet& S, double lambda, int k,
                               double tol = 1e-10);

struct GiantMonotoneReport {
  bool ok = true;
  std::size_t index = 0;  // grid index of the first violation
  std::string what;
};

// Verifies gamma* non-decreasing and xi* non-increasing along an ascending
// lambda grid, and that sign(Q(mu*)) matches sign(nu_{shifted}(mu*) - 1)
// pointwise.
GiantMonotoneReport giant_monotonicity_check(const DegreeSet& S,
                                             const std::vector<double>& lambda_grid);

}  // namespace sgraph
