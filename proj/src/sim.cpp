#include "sgraph/sim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "sgraph/chareq.hpp"
#include "sgraph/genfun.hpp"
#include "sgraph/structure.hpp"

namespace sgraph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Sampling table for Po_S(mu): support values with pmf and cdf.
struct SampleTable {
  std::vector<std::uint32_t> values;
  std::vector<double> pmf;
  std::vector<double> cdf;
};

SampleTable build_sample_table(const DegreeSet& S, double mu) {
  GenFunEval ev = eval_genfun(S, mu);
  if (mu == 0.0 && !S.contains(0))
    throw std::domain_error("sim: degree law undefined at mu=0 when 0 not in S");
  SampleTable t;
  if (mu == 0.0) {
    t.values = {0};
    t.pmf = {1.0};
    t.cdf = {1.0};
    return t;
  }
  S.for_each_upto(ev.cutoff_used, [&](std::uint64_t k) {
    double lp = static_cast<double>(k) * std::log(mu) -
                std::lgamma(static_cast<double>(k) + 1.0) - ev.log_phi;
    t.values.push_back(static_cast<std::uint32_t>(k));
    t.pmf.push_back(std::exp(lp));
  });
  double total = std::accumulate(t.pmf.begin(), t.pmf.end(), 0.0);
  double acc = 0.0;
  for (double& p : t.pmf) {
    p /= total;  // renormalize away the truncated tail (<= rel_tol mass)
    acc += p;
    t.cdf.push_back(acc);
  }
  t.cdf.back() = 1.0;
  return t;
}

}  // namespace

double MultiGraph::log_weight() const {
  double w = -static_cast<double>(loops) * std::log(2.0);
  for (const auto& [j, m] : mult_counts)
    w -= static_cast<double>(m) * std::lgamma(static_cast<double>(j) + 1.0);
  return w;
}

std::vector<std::uint32_t> sample_degree_list(const DegreeSet& S, double mu,
                                              std::uint64_t n, Rng& rng) {
  if (!S.admissible_n(n))
    throw std::invalid_argument(
        "sim: no graph with all degrees in an all-odd set exists on an odd "
        "number of vertices");
  SampleTable table = build_sample_table(S, mu);
  std::vector<std::uint32_t> deg(n);
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    deg[i] = table.values[rng.next_from_cdf(table.cdf)];
    total += deg[i];
  }
  if (total % 2 == 1) {
    // One uniformly random vertex is resampled until the sum turns even;
    // possible exactly when S mixes parities.
    std::uint64_t idx = rng.next_below(n);
    std::uint32_t old = deg[idx];
    for (std::uint64_t guard = 0;; ++guard) {
      if (guard > 100'000'000)
        throw std::logic_error("sim: parity repair failed to terminate");
      std::uint32_t fresh = table.values[rng.next_from_cdf(table.cdf)];
      if ((fresh % 2) != (old % 2)) {
        deg[idx] = fresh;
        break;
      }
    }
  }
  return deg;
}

DegreeCounts tally_degrees(const std::vector<std::uint32_t>& degrees) {
  DegreeCounts dc;
  dc.n = degrees.size();
  std::uint32_t maxd = 0;
  for (std::uint32_t d : degrees) maxd = std::max(maxd, d);
  dc.n_j.assign(static_cast<std::size_t>(maxd) + 1, 0);
  for (std::uint32_t d : degrees) {
    dc.n_j[d] += 1;
    dc.total_degree += d;
  }
  return dc;
}

DegreeCounts sample_degree_sequence(const DegreeSet& S, double mu,
                                    std::uint64_t n, Rng& rng) {
  return tally_degrees(sample_degree_list(S, mu, n, rng));
}

MultiGraph configuration_multigraph(const std::vector<std::uint32_t>& degrees,
                                    Rng& rng) {
  MultiGraph g;
  g.n = degrees.size();
  g.degree_counts = tally_degrees(degrees);
  if (g.degree_counts.total_degree % 2 != 0)
    throw std::invalid_argument("sim: total degree must be even for a pairing");

  std::vector<std::uint32_t> stubs;
  stubs.reserve(g.degree_counts.total_degree);
  for (std::uint32_t v = 0; v < g.n; ++v)
    for (std::uint32_t i = 0; i < degrees[v]; ++i) stubs.push_back(v);

  // Fisher-Yates, then pair consecutive stubs.
  for (std::size_t i = stubs.size(); i > 1; --i) {
    std::size_t j = rng.next_below(i);
    std::swap(stubs[i - 1], stubs[j]);
  }

  g.edges.reserve(stubs.size() / 2);
  std::vector<std::uint64_t> loop_count(g.n, 0);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    std::uint32_t u = stubs[i], v = stubs[i + 1];
    if (u > v) std::swap(u, v);
    g.edges.emplace_back(u, v);
    if (u == v) {
      g.loops += 1;
      loop_count[u] += 1;
    }
  }

  // Multiplicity tallies: parallel non-loop edges by pair, loops by vertex.
  std::vector<std::uint64_t> keys;
  keys.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges)
    if (u != v) keys.push_back((static_cast<std::uint64_t>(u) << 32) | v);
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    if (j - i >= 2) g.mult_counts[j - i] += 1;
    i = j;
  }
  for (std::uint32_t v = 0; v < g.n; ++v)
    if (loop_count[v] >= 2) g.mult_counts[loop_count[v]] += 1;

  g.simple = g.loops == 0 && g.mult_counts.empty();
  return g;
}

SimpleSampleResult sample_simple_graph(const DegreeSet& S, double lambda,
                                       std::uint64_t n, Rng& rng,
                                       std::uint64_t max_attempts) {
  SimpleSampleResult res;
  res.mu = mu_star(S, lambda);  // TieError propagates to the caller
  for (std::uint64_t a = 1; a <= max_attempts; ++a) {
    std::vector<std::uint32_t> deg = sample_degree_list(S, res.mu, n, rng);
    MultiGraph g = configuration_multigraph(deg, rng);
    res.attempts = a;
    if (g.simple) {
      res.success = true;
      res.graph = std::move(g);
      return res;
    }
  }
  res.success = false;
  return res;
}

namespace {

struct Dsu {
  std::vector<std::uint32_t> parent;
  explicit Dsu(std::uint64_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the smallest vertex as the root
    parent[b] = a;
  }
};

}  // namespace

ComponentSummary components(const MultiGraph& g) {
  Dsu dsu(g.n);
  for (const auto& [u, v] : g.edges) dsu.unite(u, v);

  std::vector<std::uint64_t> verts(g.n, 0), edges(g.n, 0);
  for (std::uint32_t v = 0; v < g.n; ++v) verts[dsu.find(v)] += 1;
  for (const auto& [u, v] : g.edges) edges[dsu.find(u)] += 1;

  ComponentSummary s;
  // Largest two components; ties resolved toward the smaller root vertex,
  // which the ascending scan gives for free.
  std::uint64_t bv = 0, be = 0, sv = 0, se = 0;
  for (std::uint32_t v = 0; v < g.n; ++v) {
    if (verts[v] == 0) continue;
    s.count += 1;
    if (verts[v] > bv) {
      sv = bv;
      se = be;
      bv = verts[v];
      be = edges[v];
    } else if (verts[v] > sv) {
      sv = verts[v];
      se = edges[v];
    }
  }
  s.largest_vertices = bv;
  s.largest_edges = be;
  s.second_vertices = sv;
  s.second_edges = se;
  return s;
}

CoreResult k_core(const MultiGraph& g, int k) {
  if (k < 2) throw std::invalid_argument("sim: k_core requires k >= 2");

  std::vector<std::uint64_t> deg(g.n, 0);
  // Adjacency as (neighbor, edge id); a loop contributes two incidences.
  std::vector<std::uint32_t> head;
  std::vector<std::uint32_t> adj_v, adj_e, next;
  adj_v.reserve(2 * g.edges.size());
  head.assign(g.n, UINT32_MAX);
  auto add_inc = [&](std::uint32_t v, std::uint32_t w, std::uint32_t e) {
    adj_v.push_back(w);
    adj_e.push_back(e);
    next.push_back(head[v]);
    head[v] = static_cast<std::uint32_t>(adj_v.size() - 1);
  };
  for (std::uint32_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    add_inc(u, v, e);
    add_inc(v, u, e);
    deg[u] += 1;
    deg[v] += 1;  // a loop lands here twice: +2 on its vertex
  }

  std::vector<char> vertex_dead(g.n, 0), edge_dead(g.edges.size(), 0);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t v = 0; v < g.n; ++v)
    if (deg[v] < static_cast<std::uint64_t>(k)) {
      vertex_dead[v] = 1;
      stack.push_back(v);
    }
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::uint32_t it = head[v]; it != UINT32_MAX; it = next[it]) {
      std::uint32_t e = adj_e[it];
      if (edge_dead[e]) continue;
      edge_dead[e] = 1;
      std::uint32_t w = adj_v[it];
      if (w == v) continue;  // loop at a dead vertex
      deg[w] -= 1;
      if (!vertex_dead[w] && deg[w] < static_cast<std::uint64_t>(k)) {
        vertex_dead[w] = 1;
        stack.push_back(w);
      }
    }
  }

  CoreResult res;
  for (std::uint32_t v = 0; v < g.n; ++v)
    if (!vertex_dead[v]) res.vertices += 1;
  for (std::uint32_t e = 0; e < g.edges.size(); ++e)
    if (!edge_dead[e]) res.edges += 1;
  return res;
}

ExactEnumeration enumerate_exact(const DegreeSet& S, unsigned n, double p) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("sim: exact enumeration supports 1 <= n <= 7");
  if (!(p > 0 && p < 1))
    throw std::invalid_argument("sim: exact enumeration requires 0 < p < 1");

  const unsigned E = n * (n - 1) / 2;
  std::vector<std::pair<unsigned, unsigned>> slots;
  slots.reserve(E);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) slots.emplace_back(i, j);

  std::array<bool, 8> in_S{};
  for (unsigned d = 0; d < n; ++d) in_S[d] = S.contains(d);

  std::array<unsigned, 8> deg{};
  std::array<std::uint32_t, 8> adjbits{};
  unsigned edges = 0, tri = 0;
  unsigned good = in_S[0] ? n : 0;

  std::vector<std::uint64_t> cnt(E + 1, 0), tri_sum(E + 1, 0);
  std::vector<std::array<std::uint64_t, 8>> comp(E + 1,
                                                 std::array<std::uint64_t, 8>{});
  std::map<std::vector<std::uint8_t>, std::vector<std::uint64_t>> degree_tab;

  auto record = [&]() {
    cnt[edges] += 1;
    tri_sum[edges] += tri;

    std::vector<std::uint8_t> key(n, 0);
    for (unsigned v = 0; v < n; ++v) key[deg[v]] += 1;
    auto [it, fresh] = degree_tab.try_emplace(key);
    if (fresh) it->second.assign(E + 1, 0);
    it->second[edges] += 1;

    std::array<std::uint8_t, 8> parent{};
    for (unsigned v = 0; v < n; ++v) parent[v] = static_cast<std::uint8_t>(v);
    auto find = [&](unsigned x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (unsigned v = 0; v < n; ++v) {
      std::uint32_t bits = adjbits[v] >> (v + 1);
      for (unsigned w = v + 1; bits; ++w, bits >>= 1)
        if (bits & 1) {
          unsigned a = find(v), b = find(w);
          if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
        }
    }
    std::array<std::uint8_t, 8> size{};
    unsigned largest = 0;
    for (unsigned v = 0; v < n; ++v) {
      unsigned r = find(v);
      size[r] += 1;
      largest = std::max<unsigned>(largest, size[r]);
    }
    comp[edges][largest] += 1;
  };

  record();  // the empty graph
  const std::uint64_t total = 1ULL << E;
  for (std::uint64_t t = 1; t < total; ++t) {
    unsigned slot = static_cast<unsigned>(__builtin_ctzll(t));
    auto [a, b] = slots[slot];
    bool adding = !(adjbits[a] >> b & 1);
    unsigned common =
        static_cast<unsigned>(__builtin_popcount(adjbits[a] & adjbits[b]));
    if (adding) {
      tri += common;
      edges += 1;
      adjbits[a] |= 1u << b;
      adjbits[b] |= 1u << a;
    } else {
      tri -= common;
      edges -= 1;
      adjbits[a] &= ~(1u << b);
      adjbits[b] &= ~(1u << a);
    }
    for (unsigned v : {a, b}) {
      good -= in_S[deg[v]] ? 1 : 0;
      deg[v] += adding ? 1 : -1u;
      good += in_S[deg[v]] ? 1 : 0;
    }
    if (good == n) record();
  }

  ExactEnumeration out;
  std::vector<double> w(E + 1);
  for (unsigned e = 0; e <= E; ++e)
    w[e] = std::pow(p, e) * std::pow(1 - p, E - e);

  double z = 0, sum_e = 0, sum_tri = 0;
  for (unsigned e = 0; e <= E; ++e) {
    z += cnt[e] * w[e];
    sum_e += e * static_cast<double>(cnt[e]) * w[e];
    sum_tri += static_cast<double>(tri_sum[e]) * w[e];
  }
  out.z = z;
  if (z > 0) {
    out.expected_edges = sum_e / z;
    out.expected_triangles = sum_tri / z;
    out.edge_count_pmf.assign(E + 1, 0);
    for (unsigned e = 0; e <= E; ++e)
      out.edge_count_pmf[e] = cnt[e] * w[e] / z;
    out.largest_component_pmf.assign(n + 1, 0);
    for (unsigned e = 0; e <= E; ++e)
      for (unsigned s = 1; s <= n; ++s)
        out.largest_component_pmf[s] += comp[e][s] * w[e] / z;
    for (const auto& [key, per_e] : degree_tab) {
      double mass = 0;
      for (unsigned e = 0; e <= E; ++e) mass += per_e[e] * w[e];
      out.degree_count_law[key] = mass / z;
    }
  }
  return out;
}

bool edge_count_monotonicity_exact(const DegreeSet& S, unsigned n, double p1,
                                   double p2) {
  if (!(p1 < p2))
    throw std::invalid_argument("sim: edge-count comparison requires p1 < p2");
  ExactEnumeration a = enumerate_exact(S, n, p1);
  ExactEnumeration b = enumerate_exact(S, n, p2);
  if (a.z <= 0 || b.z <= 0)
    throw std::runtime_error("sim: no admissible graphs; laws are undefined");
  double ca = 0, cb = 0;
  for (std::size_t e = 0; e < a.edge_count_pmf.size(); ++e) {
    ca += a.edge_count_pmf[e];
    cb += b.edge_count_pmf[e];
    if (cb > ca + 1e-12) return false;  // the denser law must sit below
  }
  return true;
}

namespace {

// Truncated power series with log-space coefficients.
using LogPoly = std::vector<double>;

LogPoly log_poly_mul(const LogPoly& A, const LogPoly& B, std::size_t dmax) {
  LogPoly C(std::min(dmax + 1, A.size() + B.size() - 1), -kInf);
  for (std::size_t m = 0; m < C.size(); ++m) {
    double mx = -kInf;
    std::size_t jlo = m >= B.size() ? m - B.size() + 1 : 0;
    std::size_t jhi = std::min(m, A.size() - 1);
    for (std::size_t j = jlo; j <= jhi; ++j) {
      double v = A[j] + B[m - j];
      if (v > mx) mx = v;
    }
    if (mx == -kInf) continue;
    double acc = 0;
    for (std::size_t j = jlo; j <= jhi; ++j)
      acc += std::exp(A[j] + B[m - j] - mx);
    C[m] = mx + std::log(acc);
  }
  return C;
}

}  // namespace

PartitionSeries multigraph_partition_series(const DegreeSet& S, std::uint64_t n,
                                            double nu,
                                            std::uint64_t degree_cutoff,
                                            std::uint64_t N_cutoff) {
  if (!(nu > 0) || !std::isfinite(nu))
    throw std::invalid_argument("sim: partition series requires nu > 0");
  if (n < 1) throw std::invalid_argument("sim: partition series requires n >= 1");
  if (!S.admissible_n(n))
    throw std::invalid_argument(
        "sim: no multigraph on an odd number of vertices has all degrees odd");

  PartitionSeries out;
  std::uint64_t dc = degree_cutoff ? degree_cutoff : S.min_element() + 40;
  if (auto mx = S.max_element()) dc = std::min(dc, *mx);
  std::uint64_t Nc =
      N_cutoff ? N_cutoff
               : static_cast<std::uint64_t>(std::ceil(1.5 * nu * n * n)) + 40;
  out.degree_cutoff = dc;
  out.n_cutoff = Nc;
  const std::size_t D = static_cast<std::size_t>(2 * Nc);
  if (D > 2'000'000)
    throw std::invalid_argument("sim: N_cutoff too large for the series oracle");

  LogPoly base(dc + 1, -kInf);
  S.for_each_upto(dc, [&](std::uint64_t k) {
    base[k] = -std::lgamma(static_cast<double>(k) + 1.0);
  });

  // phi_S(x)^n by binary exponentiation, truncated at total degree D.
  LogPoly result(1, 0.0);
  LogPoly sq = base;
  std::uint64_t e = n;
  while (e > 0) {
    if (e & 1) result = log_poly_mul(result, sq, D);
    e >>= 1;
    if (e > 0) sq = log_poly_mul(sq, sq, D);
  }
  result.resize(D + 1, -kInf);

  double log_nu = std::log(nu);
  std::vector<double> terms(Nc + 1, -kInf);
  double mx = -kInf;
  for (std::uint64_t N = 0; N <= Nc; ++N) {
    double lc = result[2 * N];
    if (lc == -kInf) continue;
    double dn = static_cast<double>(N);
    // log (2N-1)!! = lgamma(2N+1) - N log 2 - lgamma(N+1)
    terms[N] = std::lgamma(2 * dn + 1) - dn * std::log(2.0) -
               std::lgamma(dn + 1) + dn * log_nu + lc;
    mx = std::max(mx, terms[N]);
  }
  if (mx == -kInf)
    throw std::runtime_error("sim: partition series vanished at the cutoffs");
  double acc = 0;
  for (double t : terms)
    if (t != -kInf) acc += std::exp(t - mx);
  out.log_z_star = mx + std::log(acc);

  // Tail control: geometric extrapolation from the trailing term ratios.
  if (terms[Nc] == -kInf) {
    out.tail_estimate = 0.0;  // the series terminated before the cutoff
    return out;
  }
  double rho = 0;
  int have = 0;
  for (std::uint64_t N = Nc; N >= Nc - 2 && N > 0; --N) {
    if (terms[N] == -kInf || terms[N - 1] == -kInf) continue;
    rho = std::max(rho, std::exp(terms[N] - terms[N - 1]));
    ++have;
  }
  if (have == 0 || rho >= 1.0)
    throw std::runtime_error(
        "sim: partition series tail is not decaying at N_cutoff; raise the cutoffs");
  double log_tail = terms[Nc] + std::log(rho) - std::log1p(-rho);
  out.tail_estimate = std::exp(log_tail - out.log_z_star);
  if (!(out.tail_estimate < 1e-6))
    throw std::runtime_error(
        "sim: partition series tail bound exceeds 1e-6 of the total; raise the cutoffs");
  return out;
}

McSummary mc_experiment(const DegreeSet& S, double lambda, std::uint64_t n,
                        std::uint64_t reps, const std::vector<int>& k_list,
                        std::uint64_t seed, bool simple_graphs,
                        std::uint64_t max_attempts) {
  McSummary sum;
  sum.k_list = k_list;
  sum.mu = mu_star(S, lambda);
  sum.nu = pos_mean(S, sum.mu);
  GiantPrediction gp = giant_prediction_mu(S, sum.mu);
  sum.gamma_star = gp.gamma_star;
  sum.zeta_star = gp.zeta_star;
  for (int k : k_list) {
    CorePrediction cp = core_prediction_mu(S, sum.mu, k);
    sum.core_vertex_pred.push_back(cp.vertex_fraction);
    sum.core_edge_pred.push_back(cp.edge_fraction);
  }
  sum.max_core_vertex_dev.assign(k_list.size(), 0.0);
  sum.max_core_edge_dev.assign(k_list.size(), 0.0);

  SampleTable table = build_sample_table(S, sum.mu);

  for (std::uint64_t r = 0; r < reps; ++r) {
    Rng rng = Rng::stream(seed, r);
    McReplicate rep;
    rep.replicate = r;

    MultiGraph g;
    if (simple_graphs) {
      SimpleSampleResult s = sample_simple_graph(S, lambda, n, rng, max_attempts);
      if (!s.success)
        throw std::runtime_error(
            "sim: no simple graph in " + std::to_string(max_attempts) +
            " attempts (estimated acceptance < " +
            std::to_string(1.0 / static_cast<double>(max_attempts)) + ")");
      g = std::move(s.graph);
      rep.attempts = s.attempts;
    } else {
      std::vector<std::uint32_t> deg = sample_degree_list(S, sum.mu, n, rng);
      g = configuration_multigraph(deg, rng);
      rep.attempts = 1;
    }

    // TV distance between the empirical degree law and Po_S(mu*).
    const std::vector<std::uint64_t>& nj = g.degree_counts.n_j;
    double tv = 0;
    std::size_t upto = std::max(nj.size(), static_cast<std::size_t>(
                                               table.values.back()) + 1);
    std::size_t ti = 0;
    for (std::size_t j = 0; j < upto; ++j) {
      double emp = j < nj.size() ? static_cast<double>(nj[j]) /
                                       static_cast<double>(n)
                                 : 0.0;
      double pm = 0.0;
      if (ti < table.values.size() && table.values[ti] == j) {
        pm = table.pmf[ti];
        ++ti;
      }
      tv += std::abs(emp - pm);
    }
    rep.tv_degree = 0.5 * tv;

    rep.edges_per_n = static_cast<double>(g.edges.size()) / static_cast<double>(n);
    ComponentSummary cs = components(g);
    rep.largest_frac =
        static_cast<double>(cs.largest_vertices) / static_cast<double>(n);
    rep.second_frac =
        static_cast<double>(cs.second_vertices) / static_cast<double>(n);

    for (int k : k_list) {
      CoreResult cr = k_core(g, k);
      rep.core_vertex_frac.push_back(static_cast<double>(cr.vertices) /
                                     static_cast<double>(n));
      rep.core_edge_frac.push_back(static_cast<double>(cr.edges) /
                                   static_cast<double>(n));
    }

    sum.max_tv = std::max(sum.max_tv, rep.tv_degree);
    sum.max_edge_dev =
        std::max(sum.max_edge_dev, std::abs(rep.edges_per_n - 0.5 * sum.nu));
    sum.max_largest_dev = std::max(sum.max_largest_dev,
                                   std::abs(rep.largest_frac - sum.gamma_star));
    sum.max_second = std::max(sum.max_second, rep.second_frac);
    for (std::size_t i = 0; i < k_list.size(); ++i) {
      sum.max_core_vertex_dev[i] =
          std::max(sum.max_core_vertex_dev[i],
                   std::abs(rep.core_vertex_frac[i] - sum.core_vertex_pred[i]));
      sum.max_core_edge_dev[i] =
          std::max(sum.max_core_edge_dev[i],
                   std::abs(rep.core_edge_frac[i] - sum.core_edge_pred[i]));
    }
    sum.replicates.push_back(std::move(rep));
  }
  return sum;
}

}  // namespace sgraph
