#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgraph/degree_set.hpp"

namespace sgraph {

enum class RootFlag { Simple, SuspectedTangent };

struct CharRoot {
  double mu = 0;
  double psi = 0;
  RootFlag multiplicity_flag = RootFlag::Simple;
};

// Root set E(lambda) of mu phi'_S(mu)/phi_S(mu) = mu^2/lambda, with the
// psi-maximizing subset E_0(lambda). mu=0 is admitted as a root iff 0 in S.
struct CharEqResult {
  double lambda = 0;
  std::vector<CharRoot> roots;          // sorted by mu, ascending
  std::vector<std::size_t> maximizers;  // indices into roots, ascending
  double mu_star_min = 0;
  double mu_star_max = 0;
  bool unique = true;
};

enum class PhaseType { Jump, ContinuousZero, InflectionSuspect };

const char* phase_type_name(PhaseType t);

struct PhaseTransition {
  double lambda_c = 0;
  PhaseType type = PhaseType::Jump;
  double mu_left = 0;
  double mu_right = 0;
  std::string detail;
};

struct ScanPoint {
  double lambda = 0;
  double mu_star = 0;  // largest maximizer when tied
  double psi = 0;
  double nu = 0;
  double q = 0;
  bool unique = true;
};

struct ScanResult {
  std::vector<ScanPoint> table;
  std::vector<PhaseTransition> transitions;
  std::vector<std::string> warnings;
};

struct MonotoneReport {
  bool ok = true;
  // First violating pair when !ok:
  std::size_t index = 0;  // index of the later grid point
  double lambda_prev = 0, mu_prev = 0;
  double lambda_at = 0, mu_at = 0;
};

// Raised when a caller requires a unique maximizer but E_0(lambda) is tied.
class TieError : public std::runtime_error {
 public:
  TieError(double lambda, double mu_low, double mu_high);
  double lambda() const { return lambda_; }
  double mu_low() const { return mu_low_; }
  double mu_high() const { return mu_high_; }

 private:
  double lambda_, mu_low_, mu_high_;
};

// Locates every root in [0, mu_hi] where mu_hi is certified by checking that
// lambda*r1(mu) - mu stays negative at mu_hi and 2*mu_hi (doubling until it
// does). Sign-change brackets are refined by bisection until the residual
// |lambda_hat(mu) - lambda| <= tol*lambda; magnitude dips without a sign
// change become suspected-tangent roots.
CharEqResult solve_char_eq(const DegreeSet& S, double lambda, double tol = 1e-10);

// The unique psi-maximizing root. Throws TieError when E_0(lambda) is tied.
double mu_star(const DegreeSet& S, double lambda, double tol = 1e-10);

// Tabulates mu*(lambda) on a grid of grid_points values covering
// [lambda_lo, lambda_hi] (log-spaced when log_grid), localizes candidate
// discontinuities to lambda-width <= tol, and classifies each as a jump,
// a continuous departure of mu* from 0, or a suspected non-smooth point of
// an increasing lambda_hat (evidence only).
ScanResult scan_phases(const DegreeSet& S, double lambda_lo, double lambda_hi,
                       int grid_points, double tol = 1e-6, bool log_grid = false);

// Checks mu*(lambda) (largest maximizer under ties) is non-decreasing
// across a sorted grid.
MonotoneReport monotone_mu_star_check(const DegreeSet& S,
                                      const std::vector<double>& lambda_grid,
                                      double tol = 1e-10);

}  // namespace sgraph
