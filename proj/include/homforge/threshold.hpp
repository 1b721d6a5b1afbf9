#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homforge/graph.hpp"
#include "homforge/graph_core.hpp"

namespace homforge {

/// Greedy maximal family of vertices with pairwise disjoint neighborhoods,
/// plus the induced assignment of the remaining vertices.
struct LayerDecomposition {
  std::vector<int> anchors;
  std::vector<std::vector<int>> x_sets;  // x_sets[j] = N(anchors[j]), pairwise disjoint
  std::vector<std::vector<int>> y_sets;  // y_sets[j]: minimal-index rule
  std::vector<int> isolated;             // degree-0 vertices, handled separately

  /// The incremental peel sequence X_1..X_k, Y_1..Y_k.
  std::vector<std::vector<int>> incremental() const;
};

/// Anchors are scanned in ascending vertex id; a vertex becomes an anchor when
/// its neighborhood avoids all previously chosen neighborhoods. Every
/// non-isolated leftover vertex joins the Y-set of the first neighborhood its
/// own neighborhood meets.
LayerDecomposition disjoint_neighborhood_family(const Graph& g);

struct CertificateBounds {
  int odd_girth_floor = 0;       // target odd girth is >= this (or bipartite)
  long long size_bound = 0;      // promised upper bound on |target|
  long long violations = 0;      // always 0 for these pipelines
};

/// Verified output of a threshold pipeline: all claims are re-checked against
/// graph_core before the certificate is returned.
struct HomCertificate {
  Graph target;
  VertexMap map;
  CertificateBounds claimed;
  int k = 0;  // family size or dominating-set size actually used
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, std::string>> report;
};

struct PipelineOptions {
  long long size_cap = 1'000'000;
  int domination_exact_limit = 20;
  std::uint64_t hom_budget = kDefaultHomBudget;
  int vc_report_limit = 60;  // skip the VC-dimension report entry above this
};

/// Min-degree route: requires odd girth >= 2t+7 (or bipartite) and positive
/// minimum degree; produces a target with odd girth >= 2t+3 and
/// |target| = ((t+1)^{2k} - 1) / t for the achieved family size k.
HomCertificate mindeg_pipeline(const Graph& g, int t, const PipelineOptions& opts = {});

/// Domination route: requires odd girth >= 2t+5 (or bipartite); peels
/// neighborhoods of dominating vertices recursively. |target| <=
/// 3 (t+1)^{k-1} - 1 for the dominating-set size k used.
HomCertificate domination_pipeline(const Graph& g, int t,
                                   std::optional<std::vector<int>> dominating_set = std::nullopt,
                                   const PipelineOptions& opts = {});

/// VC route: requires minimum degree >= delta * n and odd girth >= 2t+5 (or
/// bipartite); builds a dominating set from the greedy epsilon-net and
/// delegates to the domination route.
HomCertificate vc_pipeline(const Graph& g, int t, double delta, int d_cap = 8,
                           const PipelineOptions& opts = {});

}  // namespace homforge
