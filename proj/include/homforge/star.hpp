#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homforge/graph.hpp"

namespace homforge {

/// One labelled pattern copy inside a host graph. Edge labels are local
/// indices: the label of an edge at a pattern vertex is the 1-based rank of
/// the other endpoint among that vertex's pattern neighbors.
struct EdgeLabelPair {
  int host_u = 0, host_v = 0;        // host endpoints
  int f_u = 0, f_v = 0;              // pattern endpoints (host_u is the image of f_u)
  int label_at_u = 0, label_at_v = 0;
};

struct LabelledCopy {
  int index = 0;
  std::vector<int> vertices;         // vertices[i] = host image of pattern vertex i
  std::vector<EdgeLabelPair> edges;  // one entry per pattern edge, in edges() order
};

struct CopyEnumeration {
  std::vector<LabelledCopy> copies;
  bool unique_cover = false;     // every host edge lies in exactly one copy
  std::vector<int> cover_count;  // per host edge id
};

/// All subgraph copies of f in g (identified by edge set), each with the
/// lexicographically least vertex tuple over the copy's isomorphisms.
/// Requires f connected with at least 2 vertices.
CopyEnumeration enumerate_f_copies(const Graph& g, const Graph& f);

/// Label-tuple blowup. Vertex (v, x) with x in {1..delta}^m is stored as
/// v * delta^m + sum_k (x_k - 1) delta^k.
struct StarGraph {
  Graph graph;
  int base_n = 0;
  int m = 0;
  int delta = 1;
  long long tuples = 1;  // delta^m

  int id(int base, long long xidx) const { return static_cast<int>(base * tuples + xidx); }
  int base_of(int v) const { return static_cast<int>(v / tuples); }
  long long tuple_of(int v) const { return v % tuples; }
  int digit(long long xidx, int k) const {
    for (int i = 0; i < k; ++i) xidx /= delta;
    return static_cast<int>(xidx % delta);
  }
  std::vector<int> coords_of(int v) const;  // 1-based coordinates, length m
};

/// Builds the label-tuple blowup of g from a unique edge cover by pattern
/// copies: the edge of copy k with labels (u,i),(v,j) joins all (u,x),(v,y)
/// with x_k = i and y_k = j. Edges are generated per host edge by enumerating
/// the free coordinate blocks.
StarGraph build_star(const Graph& g, const Graph& f, const CopyEnumeration& copies,
                     long long size_cap = 1'000'000);

/// Violations of the base-vertex projection (always 0 for a valid build).
long long star_projection_violations(const StarGraph& star, const Graph& g);

/// Checks that inside each copy's blowup sets the star restricts to a
/// disjoint union of complete bipartite graphs matched by labels. Throws on
/// any mismatch.
void star_copy_audit(const StarGraph& star, const Graph& g, const Graph& f,
                     const CopyEnumeration& copies);

/// Growth plan step: host_vertex == -1 starts a disjoint copy; otherwise
/// pattern vertex f_anchor is glued onto host_vertex.
struct FForestStep {
  int host_vertex = -1;
  int f_anchor = 0;
};

struct FForest {
  Graph graph;
  std::vector<std::vector<int>> copy_tuples;  // per step: host ids per pattern vertex
  std::vector<FForestStep> steps;
};

/// Grows a graph by repeatedly attaching pattern copies sharing at most one
/// vertex with the current graph. Requires a 2-connected pattern so every
/// edge of the result lies in a unique copy.
FForest make_f_forest(const Graph& f, const std::vector<FForestStep>& plan);

std::vector<FForestStep> random_forest_plan(const Graph& f, int copies, std::uint64_t seed);

/// Odd girth of the star graph of a triangle forest (nullopt = bipartite).
std::optional<int> star_odd_girth(const FForest& forest, const Graph& f,
                                  long long size_cap = 1'000'000);

}  // namespace homforge
