#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "homforge/errors.hpp"

namespace homforge {

/// Total map between vertex sets. image[v] is the target vertex of source
/// vertex v; every value must lie in [0, target_n).
struct VertexMap {
  int source_n = 0;
  int target_n = 0;
  std::vector<int> image;

  bool operator==(const VertexMap&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. No loops, no multi-edges.
/// Immutable after construction; edges are normalized (u < v) and sorted.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;
  /// Index of edge {u, v} in edges(), or nullopt.
  std::optional<int> edge_id(int u, int v) const;
  int min_degree() const;
  int max_degree() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

Graph make_empty(int n);
Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_star(int leaves);

/// Induced subgraph; `vertices` must be sorted and duplicate-free. Vertex i of
/// the result corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Symmetric edge-weight function into [0,1]; loops allowed.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n)
      : n_(n), w_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

  int n() const { return n_; }
  double weight(int i, int j) const {
    return w_[static_cast<std::size_t>(i) * n_ + j];
  }
  void set_weight(int i, int j, double w);

 private:
  int n_ = 0;
  std::vector<double> w_;
};

}  // namespace homforge
