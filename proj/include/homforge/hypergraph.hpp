#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homforge/graph.hpp"

namespace homforge {

/// f-uniform hypergraph, optionally f-partite. When partite, part_of assigns
/// each vertex its part (or -1 for spare vertices that touch no edge), and
/// every edge meets every part exactly once.
struct Hypergraph {
  int n = 0;
  int uniformity = 0;
  std::vector<int> part_of;                // empty when not partite
  std::vector<std::vector<int>> edges;     // each sorted, size == uniformity

  bool partite() const { return !part_of.empty(); }
  void validate() const;
};

/// Length of a shortest Berge cycle of length <= g_cap, or nullopt. A Berge
/// 2-cycle is two edges sharing at least two vertices.
std::optional<int> shortest_berge_cycle(const Hypergraph& h, int g_cap);

struct HyperforestCheck {
  bool is_forest = false;
  std::vector<int> build_sequence;  // edge indices in insertion order (when forest)
};

/// Peels edges meeting the rest in at most one vertex; the hypergraph is a
/// hyperforest iff the peel empties it. The reversed peel order is a valid
/// build sequence.
HyperforestCheck is_hyperforest(const Hypergraph& h);

struct HighGirthOptions {
  double c_override = -1.0;   // edge-probability constant; derived when <= 0
  double p_override = -1.0;   // direct edge probability; wins over c
  int min_edges = 1;
  int max_retries = 20;
};

struct HighGirthResult {
  Hypergraph hypergraph;
  int raw_edges = 0;
  int deleted = 0;
  double p = 0.0;
  double c = 0.0;
  int attempts = 1;
  bool reached_floor = true;  // false when retries ran out below min_edges
};

/// Random f-partite f-uniform hypergraph with all Berge cycles of length
/// <= g removed (one lexicographically-least edge deleted per discovered
/// cycle, rescanning). The Berge-girth claim is re-verified before returning.
HighGirthResult random_high_girth_hypergraph(int n, int f, int g, std::uint64_t seed,
                                             const HighGirthOptions& opts = {});

/// Places a copy of f on every hyperedge, identifying part j with pattern
/// vertex j. Requires h to be f.n()-uniform and f.n()-partite.
Graph decorate_with_f(const Hypergraph& h, const Graph& f);

}  // namespace homforge
