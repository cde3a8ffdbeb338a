#include "sgraph/chareq.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <limits>

#include "sgraph/genfun.hpp"

namespace sgraph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kGridPoints = 512;     // root-scan grid resolution in mu
constexpr double kTieTol = 1e-9;     // psi gap treated as a tied maximizer
constexpr double kZeroMu = 1e-7;     // mu below this counts as "at zero"
constexpr double kMinGap = 1e-4;     // smallest mu gap worth classifying

// Sign-equivalent form of the characteristic equation for mu > 0:
//   g(mu) = lambda*r1(mu) - mu  =  r1(mu) * (lambda - lambda_hat(mu)),
// so g > 0 iff lambda_hat(mu) < lambda.
double g_of_mu(const DegreeSet& S, double lambda, double mu) {
  GenFunEval ev = eval_genfun(S, mu);
  return lambda * ev.r1 - mu;
}

// Bisection refinement of a sign-change bracket of g. Returns the root.
double refine_bracket(const DegreeSet& S, double lambda, double a, double b,
                      double ga, double tol) {
  for (int it = 0; it < 300; ++it) {
    double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;  // bracket exhausted at double precision
    double gm = g_of_mu(S, lambda, mid);
    if (gm == 0.0) return mid;
    if ((gm > 0) == (ga > 0)) {
      a = mid;
      ga = gm;
    } else {
      b = mid;
    }
    if (b - a <= tol * std::max(1.0, a)) {
      double res = std::abs(lambda_hat(S, 0.5 * (a + b)) - lambda);
      if (res <= tol * lambda) break;
    }
  }
  return 0.5 * (a + b);
}

// Golden-section minimization of |g| over [a, b]; used for magnitude dips
// that never change sign (tangency candidates).
double refine_dip(const DegreeSet& S, double lambda, double a, double b) {
  const double gr = 0.6180339887498949;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = std::abs(g_of_mu(S, lambda, x1));
  double f2 = std::abs(g_of_mu(S, lambda, x2));
  for (int it = 0; it < 200 && b - a > 1e-13 * std::max(1.0, a); ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = std::abs(g_of_mu(S, lambda, x1));
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = std::abs(g_of_mu(S, lambda, x2));
    }
  }
  return 0.5 * (a + b);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

const char* phase_type_name(PhaseType t) {
  switch (t) {
    case PhaseType::Jump: return "jump";
    case PhaseType::ContinuousZero: return "continuous_zero";
    case PhaseType::InflectionSuspect: return "inflection_suspect";
  }
  return "unknown";
}

TieError::TieError(double lambda, double mu_low, double mu_high)
    : std::runtime_error("tied maximizers at lambda=" + format_double(lambda) +
                         ": mu=" + format_double(mu_low) + " and mu=" +
                         format_double(mu_high) + " share the maximal psi"),
      lambda_(lambda),
      mu_low_(mu_low),
      mu_high_(mu_high) {}

CharEqResult solve_char_eq(const DegreeSet& S, double lambda, double tol) {
  if (!(lambda > 0) || !std::isfinite(lambda))
    throw std::invalid_argument("chareq: lambda must be finite and > 0");
  if (S.is_trivial_zero())
    throw std::invalid_argument("chareq: S={0} admits no characteristic equation");
  if (!(tol > 0) || tol > 1e-3)
    throw std::invalid_argument("chareq: tol must lie in (0, 1e-3]");

  CharEqResult res;
  res.lambda = lambda;

  // Certify an upper bound mu_hi beyond which g stays negative.
  double r11 = eval_genfun(S, 1.0).r1;
  double mu_hi = std::max(1.0, 4 * lambda * std::max(1.0, r11));
  {
    int doublings = 0;
    while (!(g_of_mu(S, lambda, mu_hi) < 0 &&
             g_of_mu(S, lambda, 2 * mu_hi) < 0)) {
      mu_hi *= 2;
      if (++doublings > 100)
        throw std::runtime_error(
            "chareq: failed to certify an upper root bound for lambda=" +
            format_double(lambda));
    }
  }

  // Log-spaced scan grid for sign changes and magnitude dips of g.
  double lo = std::min(1e-6, lambda / 1000.0);
  std::vector<double> mus(kGridPoints);
  std::vector<double> gs(kGridPoints);
  double lratio = std::log(mu_hi / lo) / (kGridPoints - 1);
  for (int i = 0; i < kGridPoints; ++i) {
    mus[i] = lo * std::exp(lratio * i);
    gs[i] = g_of_mu(S, lambda, mus[i]);
  }

  std::vector<CharRoot> roots;
  if (S.contains(0)) roots.push_back({0.0, 0.0, RootFlag::Simple});

  for (int i = 0; i + 1 < kGridPoints; ++i) {
    if (gs[i] == 0.0) {
      roots.push_back({mus[i], psi(S, mus[i]), RootFlag::Simple});
      continue;
    }
    if ((gs[i] > 0) != (gs[i + 1] > 0)) {
      double mu = refine_bracket(S, lambda, mus[i], mus[i + 1], gs[i], tol);
      roots.push_back({mu, psi(S, mu), RootFlag::Simple});
    }
  }

  // Magnitude dips without sign change: candidate tangential roots.
  for (int i = 1; i + 1 < kGridPoints; ++i) {
    if (gs[i] == 0.0) continue;
    bool same_sign = (gs[i - 1] > 0) == (gs[i] > 0) &&
                     (gs[i] > 0) == (gs[i + 1] > 0);
    if (!same_sign) continue;
    if (std::abs(gs[i]) < std::abs(gs[i - 1]) &&
        std::abs(gs[i]) < std::abs(gs[i + 1])) {
      double mu = refine_dip(S, lambda, mus[i - 1], mus[i + 1]);
      GenFunEval ev = eval_genfun(S, mu);
      double resid = std::abs(mu / ev.r1 - lambda);  // |lambda_hat - lambda|
      if (resid <= std::max(1e-9, 10 * tol) * lambda)
        roots.push_back({mu, psi(S, mu), RootFlag::SuspectedTangent});
    }
  }

  std::sort(roots.begin(), roots.end(),
            [](const CharRoot& a, const CharRoot& b) { return a.mu < b.mu; });
  // Merge near-duplicates (a tangent refinement can coincide with a bracket).
  std::vector<CharRoot> dedup;
  for (const CharRoot& r : roots) {
    if (!dedup.empty() &&
        std::abs(r.mu - dedup.back().mu) <= 1e-7 * (1.0 + dedup.back().mu)) {
      if (dedup.back().multiplicity_flag == RootFlag::SuspectedTangent)
        dedup.back() = r;  // prefer the bracketed (simple) root
      continue;
    }
    dedup.push_back(r);
  }
  res.roots = std::move(dedup);

  if (res.roots.empty())
    throw std::runtime_error("chareq: no roots located for lambda=" +
                             format_double(lambda));

  double best = -kInf;
  for (const CharRoot& r : res.roots) best = std::max(best, r.psi);
  for (std::size_t i = 0; i < res.roots.size(); ++i)
    if (res.roots[i].psi >= best - kTieTol) res.maximizers.push_back(i);

  res.mu_star_min = res.roots[res.maximizers.front()].mu;
  res.mu_star_max = res.roots[res.maximizers.back()].mu;
  res.unique = res.maximizers.size() == 1;
  return res;
}

double mu_star(const DegreeSet& S, double lambda, double tol) {
  CharEqResult res = solve_char_eq(S, lambda, tol);
  if (!res.unique) throw TieError(lambda, res.mu_star_min, res.mu_star_max);
  return res.mu_star_max;
}

namespace {

// mu* for scan purposes: the largest maximizer, tie tolerated.
double mu_star_top(const DegreeSet& S, double lambda, double tol, bool* tied) {
  CharEqResult res = solve_char_eq(S, lambda, tol);
  if (tied) *tied = !res.unique;
  return res.mu_star_max;
}

struct Cell {
  double la, mu_a;
  double lb, mu_b;
  int depth;
};

}  // namespace

ScanResult scan_phases(const DegreeSet& S, double lambda_lo, double lambda_hi,
                       int grid_points, double tol, bool log_grid) {
  if (!(0 < lambda_lo && lambda_lo < lambda_hi))
    throw std::invalid_argument("scan_phases: need 0 < lambda_lo < lambda_hi");
  if (grid_points < 16)
    throw std::invalid_argument("scan_phases: need at least 16 grid points");
  if (!(tol > 0) || tol >= (lambda_hi - lambda_lo))
    throw std::invalid_argument("scan_phases: tol must be in (0, lambda_hi-lambda_lo)");

  ScanResult out;
  const double root_tol = std::min(1e-10, tol);

  std::vector<double> grid(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    double f = static_cast<double>(i) / (grid_points - 1);
    grid[i] = log_grid ? lambda_lo * std::pow(lambda_hi / lambda_lo, f)
                       : lambda_lo + f * (lambda_hi - lambda_lo);
  }

  out.table.reserve(grid_points);
  for (double la : grid) {
    CharEqResult r = solve_char_eq(S, la, root_tol);
    ScanPoint p;
    p.lambda = la;
    p.mu_star = r.mu_star_max;
    p.psi = r.roots[r.maximizers.back()].psi;
    p.nu = pos_mean(S, p.mu_star);
    p.q = q_value(S, p.mu_star);
    p.unique = r.unique;
    out.table.push_back(p);
  }

  auto mu_at = [&](double la) {
    return mu_star_top(S, la, root_tol, nullptr);
  };

  // Steepest mu* trend on the grid just outside the bracket [la, lb]; the
  // yardstick for "how much movement plain continuity could explain".
  auto slope_out_at = [&](double la, double lb, double mu_a, double mu_b) {
    auto it = std::upper_bound(grid.begin(), grid.end(), la);
    std::size_t cell = static_cast<std::size_t>(std::max<std::ptrdiff_t>(
        0, std::min<std::ptrdiff_t>(grid_points - 2, (it - grid.begin()) - 1)));
    double slope = 0;
    if (cell > 0) {
      double dl = la - grid[cell - 1];
      if (dl > 0)
        slope = std::max(slope,
                         std::abs(mu_a - out.table[cell - 1].mu_star) / dl);
    }
    if (cell + 2 < static_cast<std::size_t>(grid_points)) {
      double dl = grid[cell + 2] - lb;
      if (dl > 0)
        slope = std::max(slope,
                         std::abs(out.table[cell + 2].mu_star - mu_b) / dl);
    }
    return slope;
  };

  // A gap is "explained by drift" when it does not exceed a few times what
  // the outside slope would accumulate across the bracket width. Such cells
  // are dropped; anything larger is bisected until the jump test at final
  // width settles it. The factor is deliberately far below the jump
  // certification factor so borderline cells get refined, not discarded.
  constexpr double kDriftFactor = 4.0;
  constexpr int kMaxRespawnDepth = 8;

  std::deque<Cell> work;
  for (int i = 0; i + 1 < grid_points; ++i) {
    double mu_a = out.table[i].mu_star, mu_b = out.table[i + 1].mu_star;
    bool zero_cross = mu_a <= kZeroMu && mu_b > kZeroMu;
    if (mu_b - mu_a > kMinGap || zero_cross)
      work.push_back({grid[i], mu_a, grid[i + 1], mu_b, 0});
  }

  std::vector<PhaseTransition> found;
  while (!work.empty()) {
    Cell c = work.front();
    work.pop_front();
    for (;;) {
      double gap = c.mu_b - c.mu_a;
      double width = c.lb - c.la;
      bool zero_cross = c.mu_a <= kZeroMu && c.mu_b > kZeroMu;
      if (gap <= kMinGap && !zero_cross) break;
      double slope_out = slope_out_at(c.la, c.lb, c.mu_a, c.mu_b);

      if (width <= tol) {
        double lambda_c = 0.5 * (c.la + c.lb);
        double jump_threshold = std::max(kMinGap, 1000.0 * width * slope_out);
        if (gap > jump_threshold) {
          PhaseTransition t;
          t.lambda_c = lambda_c;
          t.type = PhaseType::Jump;
          t.mu_left = c.mu_a;
          t.mu_right = c.mu_b;
          t.detail = "mu* jumps by " + format_double(gap) +
                     " across lambda width " + format_double(width);
          found.push_back(t);
        } else if (zero_cross) {
          PhaseTransition t;
          t.lambda_c = lambda_c;
          t.type = PhaseType::ContinuousZero;
          t.mu_left = 0.0;
          t.mu_right = c.mu_b;
          bool pattern = S.contains(0) && S.contains(2) && !S.contains(1) &&
                         !S.contains(3);
          t.detail = std::string("mu* leaves 0 continuously; ") +
                     (pattern ? "set pattern {0,2 in, 1,3 out} holds"
                              : "WARNING: set pattern {0,2 in, 1,3 out} fails");
          found.push_back(t);
        } else {
          // Steep but continuous. A flat spot of an increasing lambda_hat
          // keeps most of its gap when the bracket widens; a linear segment
          // scales the gap with the width.
          double mu_lo8 = mu_at(std::max(lambda_lo, lambda_c - 4 * width));
          double mu_hi8 = mu_at(std::min(lambda_hi, lambda_c + 4 * width));
          double gap8 = mu_hi8 - mu_lo8;
          if (gap8 < 3.0 * gap) {
            PhaseTransition t;
            t.lambda_c = lambda_c;
            t.type = PhaseType::InflectionSuspect;
            t.mu_left = c.mu_a;
            t.mu_right = c.mu_b;
            t.detail =
                "evidence only: mu* continuous but steep (d lambda_hat/d mu "
                "~ " +
                format_double(width / gap) +
                "); not claimed as a proven transition type";
            found.push_back(t);
          }
        }
        break;
      }

      if (!zero_cross && gap <= kDriftFactor * width * slope_out) break;

      double lm = 0.5 * (c.la + c.lb);
      double mu_m = mu_at(lm);
      Cell keep, other;
      if (zero_cross) {
        // Follow the half where mu* leaves zero.
        bool cross_left = mu_m > kZeroMu;
        keep = cross_left ? Cell{c.la, c.mu_a, lm, mu_m, c.depth}
                          : Cell{lm, mu_m, c.lb, c.mu_b, c.depth};
        other = cross_left ? Cell{lm, mu_m, c.lb, c.mu_b, c.depth + 1}
                           : Cell{c.la, c.mu_a, lm, mu_m, c.depth + 1};
      } else if (mu_m - c.mu_a >= c.mu_b - mu_m) {
        keep = {c.la, c.mu_a, lm, mu_m, c.depth};
        other = {lm, mu_m, c.lb, c.mu_b, c.depth + 1};
      } else {
        keep = {lm, mu_m, c.lb, c.mu_b, c.depth};
        other = {c.la, c.mu_a, lm, mu_m, c.depth + 1};
      }
      // The discarded half respawns only if it looks jump-like on its own
      // (covers two transitions hiding in one grid cell).
      double other_gap = other.mu_b - other.mu_a;
      bool other_zero = other.mu_a <= kZeroMu && other.mu_b > kZeroMu;
      if (other_zero ||
          (other_gap > kMinGap &&
           other_gap > kDriftFactor * (other.lb - other.la) * slope_out)) {
        if (other.depth <= kMaxRespawnDepth)
          work.push_back(other);
        else
          out.warnings.push_back(
              "cell [" + format_double(other.la) + ", " +
              format_double(other.lb) +
              "] may hide an additional transition; split depth exhausted");
      }
      c = keep;
    }
  }

  std::sort(found.begin(), found.end(),
            [](const PhaseTransition& a, const PhaseTransition& b) {
              return a.lambda_c < b.lambda_c;
            });
  out.transitions = std::move(found);
  return out;
}

MonotoneReport monotone_mu_star_check(const DegreeSet& S,
                                      const std::vector<double>& lambda_grid,
                                      double tol) {
  MonotoneReport rep;
  double prev_mu = -kInf, prev_lambda = 0;
  for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
    double mu = mu_star_top(S, lambda_grid[i], tol, nullptr);
    if (i > 0 && mu < prev_mu - 1e-9 * (1.0 + std::abs(prev_mu))) {
      rep.ok = false;
      rep.index = i;
      rep.lambda_prev = prev_lambda;
      rep.mu_prev = prev_mu;
      rep.lambda_at = lambda_grid[i];
      rep.mu_at = mu;
      return rep;
    }
    prev_mu = mu;
    prev_lambda = lambda_grid[i];
  }
  return rep;
}

}  // namespace sgraph
