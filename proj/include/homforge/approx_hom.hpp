#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homforge/graph.hpp"
#include "homforge/graph_core.hpp"

namespace homforge {

struct DensityResult {
  double value = 0.0;
  bool exact = true;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

struct DensityOptions {
  std::uint64_t exact_cap = 100'000'000;  // max |V|^|H| tuples for exact mode
  bool allow_monte_carlo = false;
  std::uint64_t samples = 200'000;
  std::uint64_t seed = 0;
};

/// Homomorphism density t(H, W): the expected product of W over the edges of
/// H under independent uniform vertex choices. Exact enumeration when
/// feasible, otherwise seeded Monte Carlo (must be enabled explicitly).
DensityResult hom_density(const Graph& h, const WeightedGraph& w,
                          const DensityOptions& opts = {});

/// Partition of 0..n-1 into parts whose sizes differ by at most one.
struct EquiPartition {
  std::vector<std::vector<int>> parts;
  std::vector<int> part_of;

  int count() const { return static_cast<int>(parts.size()); }
};

EquiPartition equitable_by_id(int n, int M);

/// Reduced weighted graph: weight(i,j) is the edge density between parts i
/// and j, counting ordered pairs (so a part's loop weight is 2e(A)/|A|^2).
WeightedGraph reduced_graph(const Graph& g, const EquiPartition& p);

struct FkOptions {
  std::uint64_t seed = 0;
  int iteration_cap = -1;    // default: ceil(log2 M)
  int exhaustive_limit = 20; // exhaustive cut oracle up to this many vertices
  int restarts = 8;          // local-search restarts above the limit
};

struct FkResult {
  EquiPartition partition;
  bool converged = false;
  int rounds = 0;
  double final_discrepancy = 0.0;
};

/// Weak-regularity partition into M parts by iterative cut-discrepancy
/// refinement. The counting-lemma guarantee is re-checked by callers against
/// hom_density, not assumed.
FkResult fk_partition(const Graph& g, int M, const FkOptions& opts = {});

enum class SubgraphMode { Exact, Greedy };

/// Spanning subgraph of gamma0 that is f-hom-free. Exact mode (edge count at
/// most 20) maximizes the number of kept edges by branch and bound over edge
/// deletions; greedy mode repeatedly deletes the highest-multiplicity edge of
/// some homomorphic image of f.
Graph max_hom_free_subgraph(const Graph& gamma0, const Graph& f, SubgraphMode mode);

struct PulloutDecomposition {
  std::vector<int> centers;            // v_i, repeats allowed
  std::vector<std::vector<int>> sets;  // disjoint S_i, each of size set_size
  std::vector<int> leftover;           // X
  int set_size = 0;                    // ceil(eps * n / 3)
  long long incident_edges = 0;        // edges with an endpoint in X
  long long inside_edges = 0;          // edges inside X
};

/// Greedy pullout: repeatedly extracts a star of ceil(eps*n/3) co-neighbors
/// until at most eps*n^2/2 edges touch the leftover set. All three clauses
/// (sizes, center adjacency, leftover edge bound) are re-verified exactly.
PulloutDecomposition pullout(const Graph& g, double eps);

struct ApproxHomReport {
  long long violations = 0;
  long long threshold_num = 0;  // eps * n^2 compared as violations <= eps*n*n
  bool within_threshold = false;
  TriState target_hom_free = TriState::Unknown;
  std::vector<std::pair<std::string, std::string>> lines;
};

struct CompressionResult {
  Graph target;
  VertexMap map;
  ApproxHomReport report;
};

struct FkPipelineOptions {
  std::uint64_t hom_budget = kDefaultHomBudget;
  FkOptions fk;
  std::optional<double> removal_delta;  // caller-supplied removal-lemma constant
};

/// Regularity route: partition, threshold the reduced graph at eps/2, take a
/// maximum f-hom-free subgraph, and map each vertex to its part. The report
/// decomposes the violation count into within-part, low-density, and deleted
/// pairs exactly.
CompressionResult fk_pipeline(const Graph& g, const Graph& f, const Graph& h, double eps,
                              std::optional<int> M_override,
                              const FkPipelineOptions& opts = {});

/// Pullout route: requires g to be hom-free of the 2-subdivision of f; the
/// target has one vertex per extracted set plus one isolated vertex.
CompressionResult pullout_pipeline(const Graph& g, const Graph& f, double eps,
                                   std::uint64_t hom_budget = kDefaultHomBudget);

struct CountingCheck {
  double density_g = 0.0;
  double density_reduced = 0.0;
  double bound = 0.0;  // 4 e(H) / sqrt(log2 M)
  bool holds = false;
};

/// Re-checks the weak-regularity counting inequality
/// |t(H,G) - t(H,G_P)| <= 4 e(H) / sqrt(log2 M) for each pattern in the
/// family, using exact densities.
std::vector<CountingCheck> fk_counting_check(const Graph& g, const EquiPartition& p,
                                             const std::vector<Graph>& family);

struct VerifyReport {
  long long violations = 0;
  double threshold = 0.0;
  bool pass = false;
  TriState target_hom_free = TriState::Unknown;
};

VerifyReport verify_approx_hom(const Graph& g, const Graph& gamma, const VertexMap& map,
                               double eps, const Graph& f,
                               std::uint64_t budget = kDefaultHomBudget);

}  // namespace homforge
