#include "homforge/mycielski.hpp"

#include <algorithm>
#include <string>

#include "homforge/graph_core.hpp"

namespace homforge {

MycielskiGraph t_fold_mycielskian(const Graph& gamma, int t) {
  if (t < 1) throw PreconditionError("t_fold_mycielskian: t must be at least 1");
  MycielskiGraph result;
  result.t = t;
  result.base_n = gamma.n();
  int n = (t + 1) * gamma.n() + 1;
  int root = result.root_id();

  std::vector<std::pair<int, int>> edges;
  for (auto [v, w] : gamma.edges()) {
    edges.emplace_back(result.id_of(v, t + 1), result.id_of(w, t + 1));
    for (int i = 1; i <= t; ++i) {
      edges.emplace_back(result.id_of(v, i), result.id_of(w, i + 1));
      edges.emplace_back(result.id_of(w, i), result.id_of(v, i + 1));
    }
  }
  for (int v = 0; v < gamma.n(); ++v) edges.emplace_back(root, result.id_of(v, 1));

  result.graph = Graph(n, std::move(edges));
  result.labels.assign(n, {});
  for (int i = 1; i <= t + 1; ++i)
    for (int v = 0; v < gamma.n(); ++v)
      result.labels[result.id_of(v, i)] = MycielskiVertex{false, v, i};
  result.labels[root] = MycielskiVertex{true, -1, 0};
  return result;
}

Extension extend_homomorphism(const Graph& g, const std::vector<int>& u_set,
                              const std::vector<int>& phi_on_u, const Graph& gamma, int t) {
  if (u_set.size() != phi_on_u.size())
    throw PreconditionError("extend_homomorphism: u_set and phi_on_u sizes differ");
  std::vector<int> phi(g.n(), -1);
  std::vector<char> in_u(g.n(), 0);
  for (std::size_t i = 0; i < u_set.size(); ++i) {
    int v = u_set[i];
    if (v < 0 || v >= g.n()) throw PreconditionError("extend_homomorphism: u_set vertex out of range");
    if (in_u[v]) throw PreconditionError("extend_homomorphism: duplicate vertex in u_set");
    if (phi_on_u[i] < 0 || phi_on_u[i] >= gamma.n())
      throw PreconditionError("extend_homomorphism: phi image out of range");
    in_u[v] = 1;
    phi[v] = phi_on_u[i];
  }

  std::vector<int> complement;
  for (int v = 0; v < g.n(); ++v)
    if (!in_u[v]) complement.push_back(v);

  // Layer independence: I and N^1(I)..N^t(I) must all be independent.
  auto layers = neighborhood_layers(g, complement, t);
  std::vector<int> layer_of(g.n(), -1);
  for (int i = 0; i <= t; ++i)
    for (int v : layers[i]) layer_of[v] = i;
  for (auto [u, v] : g.edges())
    if (layer_of[u] >= 0 && layer_of[u] == layer_of[v])
      throw PreconditionError("extend_homomorphism: layer " + std::to_string(layer_of[u]) +
                              " is not independent, edge " + std::to_string(u) + " " +
                              std::to_string(v));

  // phi must be a homomorphism on the induced subgraph g[u_set].
  for (auto [u, v] : g.edges())
    if (in_u[u] && in_u[v] && !gamma.adjacent(phi[u], phi[v]))
      throw PreconditionError("extend_homomorphism: phi violates edge " + std::to_string(u) + " " +
                              std::to_string(v));

  Extension ext;
  ext.target = t_fold_mycielskian(gamma, t);
  ext.psi.source_n = g.n();
  ext.psi.target_n = ext.target.graph.n();
  ext.psi.image.assign(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    if (!in_u[v]) {
      ext.psi.image[v] = ext.target.root_id();
    } else if (layer_of[v] >= 1) {
      ext.psi.image[v] = ext.target.id_of(phi[v], layer_of[v]);
    } else {
      ext.psi.image[v] = ext.target.id_of(phi[v], t + 1);
    }
  }
  if (count_violations(ext.psi, g, ext.target.graph) != 0)
    throw Error("extend_homomorphism: internal consistency failure");
  return ext;
}

}  // namespace homforge
