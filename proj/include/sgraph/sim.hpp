#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sgraph/degree_set.hpp"
#include "sgraph/rng.hpp"

namespace sgraph {

struct DegreeCounts {
  std::vector<std::uint64_t> n_j;  // n_j[j] = number of vertices of degree j
  std::uint64_t n = 0;             // total vertices
  std::uint64_t total_degree = 0;  // sum_j j*n_j; always even
};

// Half-edge pairing outcome. Loop/multiplicity bookkeeping follows the
// multigraph weight w(G) = 2^{-loops} * prod_{j>=2} (j!)^{-m_j}, where m_j
// counts j-fold multiplicities: vertex pairs joined by exactly j parallel
// edges plus vertices carrying exactly j loops.
struct MultiGraph {
  std::uint64_t n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uint64_t loops = 0;
  std::map<std::uint64_t, std::uint64_t> mult_counts;  // j -> m_j, j >= 2
  DegreeCounts degree_counts;
  bool simple = false;

  double log_weight() const;  // log w(G)
};

struct ComponentSummary {
  std::uint64_t largest_vertices = 0;
  std::uint64_t largest_edges = 0;
  std::uint64_t second_vertices = 0;
  std::uint64_t second_edges = 0;
  std::uint64_t count = 0;
};

struct CoreResult {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
};

// Degrees i.i.d. from Po_S(mu), with parity repair: if the total is odd, one
// uniformly chosen vertex is resampled until the total becomes even. Throws
// when admissible_n(S, n) fails.
std::vector<std::uint32_t> sample_degree_list(const DegreeSet& S, double mu,
                                              std::uint64_t n, Rng& rng);
DegreeCounts sample_degree_sequence(const DegreeSet& S, double mu,
                                    std::uint64_t n, Rng& rng);
DegreeCounts tally_degrees(const std::vector<std::uint32_t>& degrees);

// Uniform random pairing of the half-edges mandated by the degree list.
MultiGraph configuration_multigraph(const std::vector<std::uint32_t>& degrees,
                                    Rng& rng);

struct SimpleSampleResult {
  bool success = false;
  MultiGraph graph;        // valid only when success
  std::uint64_t attempts = 0;
  double mu = 0;           // the mu* used for degree sampling
};

// Rejection sampling: degrees and pairing are redrawn together until the
// multigraph is simple. Requires a unique mu*(lambda).
SimpleSampleResult sample_simple_graph(const DegreeSet& S, double lambda,
                                       std::uint64_t n, Rng& rng,
                                       std::uint64_t max_attempts = 200);

ComponentSummary components(const MultiGraph& g);

// Iterative peeling of vertices with degree < k (a loop adds 2).
CoreResult k_core(const MultiGraph& g, int k);

struct ExactEnumeration {
  double z = 0;  // partition function = probability that G(n,p) has every degree in S
  double prob_s_graph() const { return z; }
  double expected_edges = 0;      // conditional on that event
  double expected_triangles = 0;  // conditional
  std::vector<double> edge_count_pmf;          // conditional; index = edges
  std::vector<double> largest_component_pmf;   // conditional; index = vertices
  // Conditional law of the degree-count vector (n_0, ..., n_{n-1}).
  std::map<std::vector<std::uint8_t>, double> degree_count_law;
};

// Exact sum over all 2^{n(n-1)/2} subgraphs of the complete graph. n <= 7.
ExactEnumeration enumerate_exact(const DegreeSet& S, unsigned n, double p);

// Compares exact conditional edge-count cdfs at p1 < p2: true iff the p2 law
// stochastically dominates the p1 law.
bool edge_count_monotonicity_exact(const DegreeSet& S, unsigned n, double p1,
                                   double p2);

struct PartitionSeries {
  double log_z_star = 0;
  double tail_estimate = 0;  // relative bound on the truncated series tail
  std::uint64_t n_cutoff = 0;
  std::uint64_t degree_cutoff = 0;
};

// Weighted multigraph partition sum
//   Z* = sum_N (2N-1)!! nu^N [x^{2N}] phi_S(x)^n
// computed in log space with degrees capped at degree_cutoff and N at
// N_cutoff (0 picks defaults). Throws when the series tail cannot be
// bounded below 1e-6 relative at the given cutoffs.
PartitionSeries multigraph_partition_series(const DegreeSet& S, std::uint64_t n,
                                            double nu,
                                            std::uint64_t degree_cutoff = 0,
                                            std::uint64_t N_cutoff = 0);

struct McReplicate {
  std::uint64_t replicate = 0;
  double tv_degree = 0;      // TV(empirical degree law, Po_S(mu*))
  double edges_per_n = 0;
  double largest_frac = 0;
  double second_frac = 0;
  std::uint64_t attempts = 1;  // simple-graph rejection attempts
  std::vector<double> core_vertex_frac;  // parallel to k_list
  std::vector<double> core_edge_frac;
};

struct McSummary {
  double mu = 0;
  double nu = 0;
  double gamma_star = 0;
  double zeta_star = 0;
  std::vector<int> k_list;
  std::vector<double> core_vertex_pred;
  std::vector<double> core_edge_pred;
  std::vector<McReplicate> replicates;
  // Worst-case deviations from the predictions across replicates:
  double max_tv = 0;
  double max_edge_dev = 0;
  double max_largest_dev = 0;
  double max_second = 0;
  std::vector<double> max_core_vertex_dev;
  std::vector<double> max_core_edge_dev;
};

// Runs `reps` independent replicates (stream r of the seed drives replicate
// r) and compares each against the asymptotic predictions. When
// simple_graphs is set, graphs are rejection-sampled to simplicity;
// otherwise configuration multigraphs are measured directly.
McSummary mc_experiment(const DegreeSet& S, double lambda, std::uint64_t n,
                        std::uint64_t reps, const std::vector<int>& k_list,
                        std::uint64_t seed, bool simple_graphs = true,
                        std::uint64_t max_attempts = 200);

}  // namespace sgraph
