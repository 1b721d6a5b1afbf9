#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homforge/graph.hpp"

namespace homforge {

inline constexpr std::uint64_t kDefaultHomBudget = 10'000'000;

/// Length of a shortest odd cycle, or nullopt when the graph is bipartite.
/// Computed via distances in the bipartite double cover.
std::optional<int> odd_girth(const Graph& g);

struct OddCycle {
  int length = 0;
  std::vector<int> vertices;  // closed walk, front() == back()
};

/// Like odd_girth, but also reconstructs a witness cycle.
std::optional<OddCycle> shortest_odd_cycle(const Graph& g);

/// Result of a budgeted homomorphism search. When `map` is empty,
/// `definitive` distinguishes an exhausted search (no homomorphism exists)
/// from a budget hit (existence unknown).
struct HomSearch {
  std::optional<VertexMap> map;
  bool definitive = false;
  std::uint64_t expanded = 0;
};

/// Backtracking search for a homomorphism src -> dst. Source vertices are
/// processed in descending-degree order; a candidate image is pruned when an
/// already-mapped neighbor's image is non-adjacent. `budget` caps the number
/// of node expansions.
HomSearch find_homomorphism(const Graph& src, const Graph& dst,
                            std::uint64_t budget = kDefaultHomBudget);

enum class TriState { Free, NotFree, Unknown };
const char* to_string(TriState s);

/// Free iff find_homomorphism(pattern, host) is a definitive none.
TriState is_hom_free(const Graph& host, const Graph& pattern,
                     std::uint64_t budget = kDefaultHomBudget);

/// Number of src edges whose images are not edges of dst (collapsed edges
/// count as violations; dst has no loops).
long long count_violations(const VertexMap& m, const Graph& src, const Graph& dst);

/// Replace vertex i by an independent set of part_sizes[i] vertices and every
/// edge by a complete bipartite graph. Parts occupy consecutive id blocks.
Graph blowup(const Graph& g, const std::vector<int>& part_sizes);
/// Map from blowup vertex id back to the base vertex.
std::vector<int> blowup_projection(const std::vector<int>& part_sizes);

/// Insert two new vertices on every edge. Edge j of f (in edges() order)
/// yields the new vertices f.n()+2j and f.n()+2j+1.
Graph two_subdivision(const Graph& f);

/// BFS layers from a seed set: result[i] holds the vertices at distance
/// exactly i, for 0 <= i <= depth.
std::vector<std::vector<int>> neighborhood_layers(const Graph& g, const std::vector<int>& seed_set,
                                                  int depth);

bool is_dominating_set(const Graph& g, const std::vector<int>& set);

/// Lexicographically least minimum dominating set, by exhaustive search over
/// increasing sizes. Throws CapError when g.n() > exact_limit.
std::vector<int> minimum_dominating_set(const Graph& g, int exact_limit = 20);
int domination_number(const Graph& g, int exact_limit = 20);

/// Greedy cover: repeatedly add the vertex dominating the most uncovered
/// vertices (smallest id on ties).
std::vector<int> greedy_dominating_set(const Graph& g);

struct VcResult {
  int dimension = 0;
  bool at_cap = false;  // some set of size d_cap is shattered
};

/// Largest set shattered by vertex neighborhoods, capped at d_cap.
VcResult vc_dimension(const Graph& g, int d_cap = 8);

/// Deterministic greedy hitting set over the neighborhoods of size
/// >= eps * n. The net property is re-verified exhaustively before returning.
std::vector<int> greedy_epsilon_net(const Graph& g, double eps);
bool is_epsilon_net(const Graph& g, double eps, const std::vector<int>& net);

bool is_connected(const Graph& g);
bool is_two_connected(const Graph& g);

/// If h is isomorphic to an odd cycle, returns its length.
std::optional<int> odd_cycle_order(const Graph& h);

/// A shortest simple cycle of any parity (vertex list, not closed).
std::optional<std::vector<int>> shortest_cycle(const Graph& g);

class Rng;
/// Binomial random graph: each pair becomes an edge independently with
/// probability p. One draw per pair, pairs in lexicographic order.
Graph random_graph(int n, double p, Rng& rng);

/// 0/1 weights from the adjacency relation.
WeightedGraph as_weighted(const Graph& g);

}  // namespace homforge
