#include "sgraph/genfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sgraph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_args(double mu, double rel_tol) {
  if (!(mu >= 0) || !std::isfinite(mu))
    throw std::invalid_argument("genfun: mu must be finite and >= 0");
  if (!(rel_tol > 0) || rel_tol > 1e-6)
    throw std::invalid_argument("genfun: rel_tol must lie in (0, 1e-6]");
}

// log of the raw series term mu^k / k!
inline double log_term(double mu, std::uint64_t k) {
  return static_cast<double>(k) * std::log(mu) -
         std::lgamma(static_cast<double>(k) + 1.0);
}

// Accumulates sum t_k, sum k t_k, sum k(k-1) t_k with a running max-shift so
// that the largest term is always represented as 1.
struct ShiftedSums {
  double M = -kInf;  // current shift: true term = e^M * stored value
  double a0 = 0, a1 = 0, a2 = 0;
  double last_t = 0;  // last added term, relative to e^M

  void add(double L, double k) {
    double t;
    if (L > M) {
      double scale = (M == -kInf) ? 0.0 : std::exp(M - L);
      a0 *= scale;
      a1 *= scale;
      a2 *= scale;
      M = L;
      t = 1.0;
    } else {
      t = std::exp(L - M);
    }
    a0 += t;
    a1 += k * t;
    a2 += k * (k - 1) * t;
    last_t = t;
  }
};

}  // namespace

GenFunEval eval_genfun(const DegreeSet& S, double mu, double rel_tol) {
  check_args(mu, rel_tol);

  GenFunEval ev;
  ev.mu = mu;

  if (mu == 0.0) {
    if (S.contains(0)) {
      ev.log_phi = 0.0;
      ev.r1 = S.contains(1) ? 1.0 : 0.0;
      ev.r2 = S.contains(2) ? 1.0 : 0.0;
    } else {
      ev.log_phi = -kInf;
      ev.r1 = kNaN;
      ev.r2 = kNaN;
    }
    ev.cutoff_used = 2;
    ev.tail_bound = 0.0;
    return ev;
  }

  ShiftedSums s;

  if (S.is_finite()) {
    std::uint64_t top = *S.max_element();
    S.for_each_upto(top, [&](std::uint64_t k) {
      s.add(log_term(mu, k), static_cast<double>(k));
    });
    ev.cutoff_used = top;
    ev.tail_bound = 0.0;
  } else {
    std::uint64_t start = S.min_element();
    std::uint64_t step = (S.kind() == DegreeSet::Kind::Tail) ? 1 : 2;
    std::uint64_t k_min = std::max<std::uint64_t>(
        static_cast<std::uint64_t>(std::ceil(2 * 2.718281828459045 * mu)),
        start + 40);
    const std::uint64_t k_hard = 50'000'000;
    double tail_rel = kInf;
    std::uint64_t k = start;
    for (;; k += step) {
      if (k > k_hard)
        throw std::runtime_error("genfun: series failed to converge (cutoff guard)");
      s.add(log_term(mu, k), static_cast<double>(k));
      if (k < k_min) continue;
      // Geometric tail bound: for j > k the term ratio is <= rho = mu/(k+1),
      // and k >= 2e*mu keeps rho < 1/(2e). Bounding sum_{m>=1} (k+m)^2 rho^m
      // dominates the tails of all three accumulated sums.
      double rho = mu / (static_cast<double>(k) + 1.0);
      double g0 = rho / (1 - rho);
      double g1 = rho / ((1 - rho) * (1 - rho));
      double g2 = rho * (1 + rho) / ((1 - rho) * (1 - rho) * (1 - rho));
      double kk = static_cast<double>(k);
      double tail2 = s.last_t * (kk * kk * g0 + 2 * kk * g1 + g2);
      tail_rel = tail2 / s.a0;
      if (tail_rel < rel_tol) break;
    }
    ev.cutoff_used = k;
    ev.tail_bound = tail_rel;
  }

  ev.log_phi = s.M + std::log(s.a0);
  ev.r1 = s.a1 / (mu * s.a0);
  ev.r2 = s.a2 / (mu * mu * s.a0);
  return ev;
}

namespace {

// Shared precondition for every quantity that divides by phi_S(mu).
GenFunEval ratios(const DegreeSet& S, double mu, double rel_tol) {
  GenFunEval ev = eval_genfun(S, mu, rel_tol);
  if (mu == 0.0 && !S.contains(0))
    throw std::domain_error("genfun: undefined at mu=0 when 0 is not in S");
  return ev;
}

}  // namespace

double pos_pmf(const DegreeSet& S, double mu, std::uint64_t k, double rel_tol) {
  GenFunEval ev = ratios(S, mu, rel_tol);
  if (!S.contains(k)) return 0.0;
  if (mu == 0.0) return k == 0 ? 1.0 : 0.0;
  return std::exp(log_term(mu, k) - ev.log_phi);
}

double pos_cdf(const DegreeSet& S, double mu, std::uint64_t k, double rel_tol) {
  GenFunEval ev = ratios(S, mu, rel_tol);
  if (mu == 0.0) return 1.0;  // point mass at 0 and k >= 0
  double acc = 0.0;
  std::uint64_t hi = std::min(k, ev.cutoff_used);
  S.for_each_upto(hi, [&](std::uint64_t j) {
    acc += std::exp(log_term(mu, j) - ev.log_phi);
  });
  return std::min(acc, 1.0);
}

double pos_mean(const DegreeSet& S, double mu, double rel_tol) {
  GenFunEval ev = ratios(S, mu, rel_tol);
  return mu * ev.r1;
}

double q_value(const DegreeSet& S, double mu, double rel_tol) {
  GenFunEval ev = ratios(S, mu, rel_tol);
  return mu * mu * ev.r2 - mu * ev.r1;
}

double psi(const DegreeSet& S, double mu, double rel_tol) {
  GenFunEval ev = eval_genfun(S, mu, rel_tol);
  if (mu == 0.0) return S.contains(0) ? 0.0 : -kInf;
  return ev.log_phi - 0.5 * mu * ev.r1;
}

double psi_check(const DegreeSet& S, double mu, double lambda, double rel_tol) {
  if (!(lambda > 0)) throw std::invalid_argument("genfun: lambda must be > 0");
  GenFunEval ev = eval_genfun(S, mu, rel_tol);
  return ev.log_phi - mu * mu / (2 * lambda);
}

double psi_tilde(const DegreeSet& S, double mu, double lambda, double rel_tol) {
  if (!(lambda > 0)) throw std::invalid_argument("genfun: lambda must be > 0");
  GenFunEval ev = eval_genfun(S, mu, rel_tol);
  if (mu == 0.0) return ev.log_phi;  // continuous extension
  if (ev.r1 == 0.0) return ev.log_phi;
  return ev.log_phi + 0.5 * mu * ev.r1 * (std::log(lambda * ev.r1 / mu) - 1.0);
}

double lambda_hat(const DegreeSet& S, double mu, double rel_tol) {
  if (!(mu > 0)) throw std::invalid_argument("genfun: lambda_hat requires mu > 0");
  GenFunEval ev = eval_genfun(S, mu, rel_tol);
  if (ev.r1 == 0.0) return kInf;
  return mu / ev.r1;
}

double lambda_hat_zero_limit(const DegreeSet& S) {
  if (S.min_element() >= 1) return 0.0;
  if (S.contains(1)) return 0.0;
  if (S.contains(2)) return 1.0;
  return kInf;
}

}  // namespace sgraph
