#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "sgraph/chareq.hpp"
#include "sgraph/degree_set.hpp"
#include "sgraph/genfun.hpp"
#include "sgraph/structure.hpp"

using namespace sgraph;

namespace {

// Independent oracle: Poisson upper tail P(Po(m) >= k) in log space.
double poisson_tail(double m, int k) {
  if (k <= 0) return 1.0;
  if (m == 0.0) return 0.0;
  double sum = 0.0;
  for (int j = 0; j < k; ++j)
    sum += std::exp(j * std::log(m) - m - std::lgamma(j + 1.0));
  return 1.0 - sum;
}

}  // namespace

TEST_CASE("chi boundary zeros and a closed-form value") {
  DegreeSet all = DegreeSet::parse("ge:0");
  CHECK(chi(all, 2.0, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(chi(all, 2.0, 0.0) == 0.0);
  // nu=2: 2*(0.25) - 1*e^{1-2} = 0.5 - 1/e.
  CHECK(chi(all, 2.0, 0.5) ==
        doctest::Approx(0.5 - std::exp(-1.0)).epsilon(1e-11));

  DegreeSet even = DegreeSet::parse("even");
  CHECK(chi(even, 1.7, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(chi(even, 1.7, 0.0) == 0.0);
}

TEST_CASE("giant prediction: classical full-Poisson value") {
  DegreeSet all = DegreeSet::parse("ge:0");
  GiantPrediction g = giant_prediction(all, 2.0);
  CHECK(g.case_id == GiantCase::I);
  CHECK(g.Q == doctest::Approx(2.0).epsilon(1e-9));

  // Independent fixed-point oracle: gamma = 1 - exp(-lambda*gamma).
  double gamma = 0.5;
  for (int i = 0; i < 200; ++i) gamma = 1 - std::exp(-2.0 * gamma);
  CHECK(g.gamma_star == doctest::Approx(gamma).epsilon(1e-9));
  CHECK(g.gamma_star == doctest::Approx(0.79681).epsilon(1e-4));
  CHECK(g.xi_star == doctest::Approx(1 - gamma).epsilon(1e-8));
}

TEST_CASE("giant prediction: boundary and no-giant cases") {
  DegreeSet odd = DegreeSet::parse("odd");
  GiantPrediction crit = giant_prediction(odd, 1.0);
  CHECK(std::abs(crit.Q) < 1e-6);
  CHECK(crit.gamma_star == doctest::Approx(0.0).epsilon(1e-3));

  GiantPrediction sub = giant_prediction(odd, 0.8);
  CHECK(sub.case_id == GiantCase::III);
  CHECK(sub.gamma_star == 0.0);
  CHECK(sub.zeta_star == 0.0);
  CHECK(sub.xi_star == 1.0);

  DegreeSet s01 = DegreeSet::parse("set:0,1");
  for (double lam : {0.2, 1.0, 5.0}) {
    GiantPrediction g = giant_prediction(s01, lam);
    CHECK(g.Q < 0.0);
    CHECK(g.case_id == GiantCase::III);
    CHECK(g.gamma_star == 0.0);
  }
}

TEST_CASE("giant prediction: case ii for sets without degree 1") {
  DegreeSet even = DegreeSet::parse("even");
  GiantPrediction g = giant_prediction(even, 2.0);
  CHECK(g.case_id == GiantCase::II);
  CHECK(g.xi_star == 0.0);
  // gamma* = 1 - 1/phi(mu*) = 1 - 1/cosh(mu*).
  CHECK(g.gamma_star ==
        doctest::Approx(1 - 1 / std::cosh(g.mu)).epsilon(1e-10));
  // zeta* = nu/2 when xi*=0.
  CHECK(g.zeta_star ==
        doctest::Approx(0.5 * pos_mean(even, g.mu)).epsilon(1e-10));
}

TEST_CASE("giant refuses subsets of {0,2}") {
  CHECK_THROWS_AS(giant_prediction(DegreeSet::parse("set:0,2"), 1.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(giant_prediction(DegreeSet::parse("set:2"), 1.5),
                  std::invalid_argument);
}

TEST_CASE("gw_extinction oracles") {
  DegreeSet all = DegreeSet::parse("ge:0");
  // Po(2) extinction: iterate x <- exp(2(x-1)).
  double x = 0.0;
  for (int i = 0; i < 10000; ++i) x = std::exp(2.0 * (x - 1.0));
  CHECK(gw_extinction(all, 2.0) == doctest::Approx(x).epsilon(1e-9));
  CHECK(gw_extinction(all, 2.0) == doctest::Approx(0.20319).epsilon(1e-4));

  CHECK(gw_extinction(all, 0.5) == doctest::Approx(1.0).epsilon(1e-9));

  DegreeSet even = DegreeSet::parse("even");
  GiantPrediction g = giant_prediction(even, 3.0);
  CHECK(gw_extinction(even, g.mu) == doctest::Approx(g.xi_star).epsilon(1e-8));
}

TEST_CASE("xi* equals the extinction probability across set families") {
  struct Pair {
    const char* spec;
    double lambda;
  } pairs[] = {{"ge:0", 2.0}, {"even", 2.0}, {"odd", 2.0}, {"ge:1", 1.0}};
  for (const Pair& p : pairs) {
    DegreeSet s = DegreeSet::parse(p.spec);
    GiantPrediction g = giant_prediction(s, p.lambda);
    double xi = gw_extinction(s, g.mu);
    CHECK(std::abs(g.xi_star - xi) < 1e-8);
  }
}

TEST_CASE("chi sign structure on (0,1)") {
  struct Pair {
    const char* spec;
    double lambda;
  } pairs[] = {{"ge:0", 2.0}, {"odd", 2.0}, {"ge:1", 1.0}};
  for (const Pair& p : pairs) {
    DegreeSet s = DegreeSet::parse(p.spec);
    GiantPrediction g = giant_prediction(s, p.lambda);
    REQUIRE(g.case_id == GiantCase::I);
    for (int i = 1; i < 1000; ++i) {
      double xi = i / 1000.0;
      double v = chi(s, g.mu, xi);
      if (xi < g.xi_star - 1e-6) CHECK(v < 0.0);
      if (xi > g.xi_star + 1e-6) CHECK(v > 0.0);
    }
  }
}

TEST_CASE("giant bounds") {
  for (const char* spec : {"ge:0", "even", "odd", "ge:1", "set:0,3"}) {
    DegreeSet s = DegreeSet::parse(spec);
    for (double lam : {0.5, 1.5, 3.0}) {
      GiantPrediction g = giant_prediction(s, lam);
      CHECK(g.gamma_star >= 0.0);
      CHECK(g.gamma_star <= 1.0);
      CHECK(g.zeta_star >= 0.0);
      CHECK(g.zeta_star <= 0.5 * pos_mean(s, g.mu) + 1e-12);
      CHECK(g.xi_star >= 0.0);
      CHECK(g.xi_star <= 1.0);
    }
  }
}

TEST_CASE("thinning identities") {
  DegreeSet all = DegreeSet::parse("ge:0");
  double mu = 3.0;

  SUBCASE("r=1 reduces to the raw tail sums") {
    GenFunEval e = eval_genfun(all, mu);
    for (int k : {2, 3}) {
      double want = 0;
      all.for_each_upto(e.cutoff_used, [&](std::uint64_t l) {
        if (l >= static_cast<std::uint64_t>(k))
          want += static_cast<double>(l) * pos_pmf(all, mu, l);
      });
      CHECK(h_value(all, mu, k, 1.0) == doctest::Approx(want).epsilon(1e-10));
    }
  }

  SUBCASE("r=0 kills everything") {
    CHECK(h_value(all, mu, 3, 0.0) == 0.0);
    CHECK(h_bar_value(all, mu, 3, 0.0) == 0.0);
  }

  SUBCASE("Poisson thinning: W is Poisson(mu r)") {
    for (double r : {0.25, 0.6, 0.9}) {
      for (int k : {2, 3, 4}) {
        CHECK(h_bar_value(all, mu, k, r) ==
              doctest::Approx(poisson_tail(mu * r, k)).epsilon(1e-9));
        // h = E[W 1{W>=k}] = mu r P(Po(mu r) >= k-1).
        double want = mu * r * poisson_tail(mu * r, k - 1);
        CHECK(h_value(all, mu, k, r) == doctest::Approx(want).epsilon(1e-9));
      }
    }
  }

  SUBCASE("thinned pmf sums to one and respects support") {
    DegreeSet even = DegreeSet::parse("even");
    double sum = 0;
    for (int l = 0; l <= 60; ++l) sum += thinned_pmf(even, 2.0, 0.7, l);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("h is non-decreasing in r") {
  for (const char* spec : {"ge:0", "even", "ge:3"}) {
    DegreeSet s = DegreeSet::parse(spec);
    double prev = -1;
    for (int i = 0; i <= 50; ++i) {
      double r = i / 50.0;
      double v = h_value(s, 2.5, 3, r);
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("3-core prediction for the full Poisson set") {
  DegreeSet all = DegreeSet::parse("ge:0");
  CorePrediction empty = core_prediction(all, 1.0, 3);
  CHECK(empty.r_hat == 0.0);
  CHECK(empty.vertex_fraction == 0.0);
  CHECK(empty.edge_fraction == 0.0);

  CorePrediction full = core_prediction(all, 4.0, 3);
  CHECK(full.r_hat > 0.5);
  CHECK(full.vertex_fraction > 0.5);
  // Fixed-point residual and the two edge-fraction formulas.
  double nu = pos_mean(all, full.mu);
  CHECK(nu * full.r_hat * full.r_hat ==
        doctest::Approx(h_value(all, full.mu, 3, full.r_hat)).epsilon(1e-8));
  CHECK(full.edge_fraction ==
        doctest::Approx(0.5 * nu * full.r_hat * full.r_hat).epsilon(1e-10));
}

TEST_CASE("regular graphs are their own core") {
  DegreeSet s4 = DegreeSet::parse("set:4");
  CorePrediction c = core_prediction(s4, 2.7, 4);
  CHECK(c.r_hat == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.vertex_fraction == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("core argument validation") {
  DegreeSet all = DegreeSet::parse("ge:0");
  CHECK_THROWS_AS(core_prediction(all, 2.0, 1), std::invalid_argument);
}

TEST_CASE("giant monotonicity check across families") {
  auto grid = [](double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + i * (hi - lo) / (n - 1);
    return g;
  };
  CHECK(giant_monotonicity_check(DegreeSet::parse("odd"), grid(0.5, 3.0, 26)).ok);
  CHECK(giant_monotonicity_check(DegreeSet::parse("ge:1"), grid(0.3, 2.0, 18)).ok);
  CHECK(
      giant_monotonicity_check(DegreeSet::parse("set:0,1"), grid(0.1, 5.0, 25)).ok);
}

TEST_CASE("Q positivity persists upward in mu") {
  for (const char* spec : {"ge:0", "odd", "ge:1", "set:0,3", "set:1,4"}) {
    DegreeSet s = DegreeSet::parse(spec);
    double first_pos = -1;
    for (double mu = 0.1; mu <= 12.0; mu += 0.1) {
      double q = q_value(s, mu);
      if (first_pos < 0 && q > 1e-9) first_pos = mu;
      if (first_pos > 0 && mu > first_pos) CHECK(q > 0.0);
    }
  }
}

TEST_CASE("RS-1: sign of Q matches the shifted mean against 1") {
  for (const char* spec : {"ge:0", "even", "odd", "ge:1"}) {
    DegreeSet s = DegreeSet::parse(spec);
    DegreeSet shifted = s.shift_down();
    for (double mu : {0.4, 0.9, 1.3, 2.2, 4.0}) {
      double q = q_value(s, mu);
      double shifted_mean = pos_mean(shifted, mu);
      if (q > 1e-9) CHECK(shifted_mean > 1.0);
      if (q < -1e-9) CHECK(shifted_mean < 1.0);
    }
  }
}
