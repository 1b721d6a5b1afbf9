#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homforge/graph.hpp"
#include "homforge/graph_core.hpp"
#include "homforge/hypergraph.hpp"
#include "homforge/star.hpp"

namespace homforge {

double binary_entropy(double p);

/// Inverse of the binary entropy on [0, 1/2], by bisection; the result p
/// satisfies |H(p) - x| <= 1e-12.
double h_inverse(double x);

/// Entropy and mutual-information diagnostics of a map defined on a
/// label-tuple blowup. For each base vertex v, x^v is a uniform label tuple
/// and y^v the image of (v, x^v). In exact mode I(x^v; y^v) is reported as
/// H(y^v) (y is a function of x); an independent joint-entropy route is kept
/// for cross-checking, along with the per-coordinate superadditivity slack.
struct EntropyReport {
  struct PerVertex {
    int base = 0;
    double h_y_bits = 0.0;
    double i_xy_bits = 0.0;            // reported mutual information
    double i_xy_joint_route = 0.0;     // H(x) + H(y) - H(x,y), for cross-checks
    std::vector<double> per_coord;     // I(x^v_k; y^v) per copy k
    double coord_sum = 0.0;
  };
  std::vector<PerVertex> vertices;
  double total_information = 0.0;
  double max_superadditivity_excess = 0.0;  // max over v of coord_sum - i_xy
  std::vector<double> per_copy_sum;         // sum over v in copy k of I(x^v_k; y^v)
  std::vector<long long> bad_edges_per_copy;
  long long bad_edges_total = -1;
  bool exact = true;
  std::uint64_t samples = 0;
};

struct EntropyOptions {
  bool exact = true;
  std::uint64_t exact_cap = 1ULL << 20;  // max tuples per vertex in exact mode
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0;
};

/// `copies` may be null (per-copy sums are then omitted); `gamma` may be null
/// (bad-edge accounting is then omitted).
EntropyReport entropy_diagnostics(const StarGraph& star, const VertexMap& phi,
                                  const EntropyOptions& opts = {},
                                  const CopyEnumeration* copies = nullptr,
                                  const Graph* gamma = nullptr);

struct MinViolation {
  VertexMap map;
  long long violations = 0;
  bool brute_forced = false;
  std::uint64_t explored = 0;
};

/// Exact minimum of count_violations over all maps g -> gamma. Brute force
/// when gamma.n^g.n <= brute_cap, otherwise branch and bound with an
/// admissible per-vertex lower bound. Declines when both are infeasible.
MinViolation min_violation_map(const Graph& g, const Graph& gamma,
                               std::uint64_t brute_cap = 10'000'000, int bnb_vertex_cap = 40);

struct WitnessOptions {
  int n = 24;
  double edge_probability = -1.0;  // direct p for the hypergraph; derived when <= 0
  double c_override = -1.0;
  long long star_cap = 1'000'000;
  int min_edges = 1;
  int max_retries = 20;
  std::uint64_t hom_budget = kDefaultHomBudget;
};

/// Bundle produced by the star-construction witness pipeline. Every recorded
/// claim carries its verifier's verdict.
struct WitnessBundle {
  Hypergraph hypergraph;
  Graph decorated;
  CopyEnumeration copies;
  StarGraph star;
  bool unique_cover = false;
  TriState h_hom_free = TriState::Unknown;
  std::optional<int> star_odd_girth;
  std::vector<std::pair<std::string, std::string>> report;
};

/// Star-construction witness: a random high-Berge-girth hypergraph is
/// decorated with f, the unique cover is verified, and the label-tuple
/// blowup is checked hom-free of h (odd-cycle h via odd girth, otherwise
/// budgeted search). Requires f 2-connected.
WitnessBundle star_witness(const Graph& f, const Graph& h, double eps, std::uint64_t seed,
                           const WitnessOptions& opts = {});

struct RandomGirthWitness {
  Graph graph;
  int girth_floor = 0;  // verified girth > this
  TriState h_hom_free = TriState::Unknown;
  int attempts = 1;
  std::vector<std::pair<std::string, std::string>> report;
};

/// Sparse random witness: a binomial random graph at p = n^(-1+1/g)/(4g)
/// with one vertex deleted per cycle of length <= g, where g is the odd
/// girth of h. Requires h non-bipartite; retries until at least half the
/// vertices survive.
RandomGirthWitness random_girth_witness(const Graph& f, const Graph& h, double eps,
                                        std::uint64_t seed, int max_retries = 20,
                                        std::uint64_t hom_budget = kDefaultHomBudget);

}  // namespace homforge
