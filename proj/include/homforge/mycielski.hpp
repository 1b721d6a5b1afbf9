#pragma once

#include <vector>

#include "homforge/graph.hpp"

namespace homforge {

struct MycielskiVertex {
  bool root = false;
  int base = -1;  // vertex of the base graph; -1 for the root
  int layer = 0;  // 1..t+1; 0 for the root
};

/// Layered Mycielskian with a fixed vertex layout: (v, i) gets id
/// (i-1) * base_n + v, the root comes last. Layer t+1 induces a copy of the
/// base graph, layers 1..t are independent sets, the root sees exactly
/// layer 1, and (v,i) ~ (w,i+1) iff vw is a base edge.
struct MycielskiGraph {
  Graph graph;
  std::vector<MycielskiVertex> labels;
  int t = 0;
  int base_n = 0;

  int id_of(int v, int layer) const { return (layer - 1) * base_n + v; }
  int root_id() const { return (t + 1) * base_n; }
};

MycielskiGraph t_fold_mycielskian(const Graph& gamma, int t);

struct Extension {
  MycielskiGraph target;
  VertexMap psi;
};

/// Extends a homomorphism g[u_set] -> gamma (phi_on_u[i] is the image of
/// u_set[i]) to a homomorphism g -> M_t(gamma). Requires the complement
/// I = V(g) \ u_set and its neighborhood layers N^1(I)..N^t(I) to be
/// independent sets; both preconditions and the output are verified.
Extension extend_homomorphism(const Graph& g, const std::vector<int>& u_set,
                              const std::vector<int>& phi_on_u, const Graph& gamma, int t);

}  // namespace homforge
