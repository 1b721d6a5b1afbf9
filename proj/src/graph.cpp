#include "homforge/graph.hpp"

#include <algorithm>
#include <string>

namespace homforge {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw PreconditionError("graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw PreconditionError("graph: edge endpoint out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
    if (u == v) throw PreconditionError("graph: loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw PreconditionError("graph: duplicate edge " + std::to_string(edges[i].first) + " " +
                              std::to_string(edges[i].second));
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(int u, int v) const {
  if (u == v) return false;
  const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(nb.begin(), nb.end(), other);
}

std::optional<int> Graph::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it != edges_.end() && *it == std::make_pair(u, v))
    return static_cast<int>(it - edges_.begin());
  return std::nullopt;
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

Graph make_empty(int n) { return Graph(n, {}); }

Graph make_complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph make_cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(e));
}

Graph make_path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, std::move(e));
}

Graph make_complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph(a + b, std::move(e));
}

Graph make_star(int leaves) { return make_complete_bipartite(1, leaves); }

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.n())
      throw PreconditionError("induced_subgraph: vertex out of range");
    if (i > 0 && vertices[i] <= vertices[i - 1])
      throw PreconditionError("induced_subgraph: vertices must be sorted and distinct");
  }
  std::vector<int> local(g.n(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges())
    if (local[u] >= 0 && local[v] >= 0) e.emplace_back(local[u], local[v]);
  return Graph(static_cast<int>(vertices.size()), std::move(e));
}

void WeightedGraph::set_weight(int i, int j, double w) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw PreconditionError("weighted graph: index out of range");
  if (!(w >= 0.0 && w <= 1.0))
    throw PreconditionError("weighted graph: weight outside [0,1]");
  w_[static_cast<std::size_t>(i) * n_ + j] = w;
  w_[static_cast<std::size_t>(j) * n_ + i] = w;
}

}  // namespace homforge
