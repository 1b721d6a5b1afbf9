#include "homforge/graph_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "homforge/rng.hpp"

namespace homforge {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// BFS in the bipartite double cover from (src, 0). dist has size 2n:
// vertex (v, parity) lives at 2v + parity. Stops expanding beyond `cap`.
void double_cover_bfs(const Graph& g, int src, int cap, std::vector<int>& dist,
                      std::vector<int>* parent) {
  dist.assign(2 * static_cast<std::size_t>(g.n()), kInf);
  if (parent) parent->assign(2 * static_cast<std::size_t>(g.n()), -1);
  std::deque<int> queue;
  dist[2 * src] = 0;
  queue.push_back(2 * src);
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    int v = cur / 2, parity = cur % 2;
    if (dist[cur] >= cap) continue;
    for (int w : g.neighbors(v)) {
      int nxt = 2 * w + (1 - parity);
      if (dist[nxt] == kInf) {
        dist[nxt] = dist[cur] + 1;
        if (parent) (*parent)[nxt] = cur;
        queue.push_back(nxt);
      }
    }
  }
}

}  // namespace

std::optional<int> odd_girth(const Graph& g) {
  int best = kInf;
  std::vector<int> dist;
  for (int v = 0; v < g.n(); ++v) {
    double_cover_bfs(g, v, best == kInf ? kInf : best - 1, dist, nullptr);
    if (dist[2 * v + 1] < best) best = dist[2 * v + 1];
  }
  if (best == kInf) return std::nullopt;
  return best;
}

std::optional<OddCycle> shortest_odd_cycle(const Graph& g) {
  int best = kInf, best_v = -1;
  std::vector<int> dist;
  for (int v = 0; v < g.n(); ++v) {
    double_cover_bfs(g, v, best == kInf ? kInf : best - 1, dist, nullptr);
    if (dist[2 * v + 1] < best) {
      best = dist[2 * v + 1];
      best_v = v;
    }
  }
  if (best_v < 0) return std::nullopt;
  std::vector<int> parent;
  double_cover_bfs(g, best_v, best, dist, &parent);
  OddCycle cycle;
  cycle.length = best;
  int cur = 2 * best_v + 1;
  while (cur != -1) {
    cycle.vertices.push_back(cur / 2);
    cur = parent[cur];
  }
  std::reverse(cycle.vertices.begin(), cycle.vertices.end());
  return cycle;
}

HomSearch find_homomorphism(const Graph& src, const Graph& dst, std::uint64_t budget) {
  HomSearch result;
  if (src.n() == 0) {
    result.map = VertexMap{0, dst.n(), {}};
    result.definitive = true;
    return result;
  }
  if (dst.n() == 0) {
    result.definitive = true;
    return result;
  }
  if (src.edge_count() > 0 && dst.edge_count() == 0) {
    result.definitive = true;
    return result;
  }

  std::vector<int> order(src.n());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (src.degree(a) != src.degree(b)) return src.degree(a) > src.degree(b);
    return a < b;
  });
  std::vector<int> position(src.n());
  for (int i = 0; i < src.n(); ++i) position[order[i]] = i;

  // Neighbors already placed when a vertex comes up in the search.
  std::vector<std::vector<int>> earlier(src.n());
  for (int v = 0; v < src.n(); ++v)
    for (int w : src.neighbors(v))
      if (position[w] < position[v]) earlier[v].push_back(w);

  const bool use_matrix = dst.n() <= 4096;
  std::vector<std::uint8_t> matrix;
  if (use_matrix) {
    matrix.assign(static_cast<std::size_t>(dst.n()) * dst.n(), 0);
    for (auto [u, v] : dst.edges()) {
      matrix[static_cast<std::size_t>(u) * dst.n() + v] = 1;
      matrix[static_cast<std::size_t>(v) * dst.n() + u] = 1;
    }
  }
  auto dst_adjacent = [&](int a, int b) {
    return use_matrix ? matrix[static_cast<std::size_t>(a) * dst.n() + b] != 0
                      : dst.adjacent(a, b);
  };

  std::vector<int> image(src.n(), -1);
  std::uint64_t expanded = 0;
  bool exhausted = true;

  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == src.n()) return true;
    int v = order[depth];
    for (int c = 0; c < dst.n(); ++c) {
      if (expanded >= budget) {
        exhausted = false;
        return false;
      }
      ++expanded;
      bool ok = true;
      for (int w : earlier[v]) {
        if (!dst_adjacent(image[w], c)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[v] = c;
      if (self(self, depth + 1)) return true;
      image[v] = -1;
      if (!exhausted) return false;
    }
    return false;
  };

  bool found = search(search, 0);
  result.expanded = expanded;
  if (found) {
    result.map = VertexMap{src.n(), dst.n(), image};
    result.definitive = true;
  } else {
    result.definitive = exhausted;
  }
  return result;
}

const char* to_string(TriState s) {
  switch (s) {
    case TriState::Free:
      return "free";
    case TriState::NotFree:
      return "not-free";
    default:
      return "unknown";
  }
}

TriState is_hom_free(const Graph& host, const Graph& pattern, std::uint64_t budget) {
  HomSearch search = find_homomorphism(pattern, host, budget);
  if (search.map) return TriState::NotFree;
  return search.definitive ? TriState::Free : TriState::Unknown;
}

long long count_violations(const VertexMap& m, const Graph& src, const Graph& dst) {
  if (m.source_n != src.n() || m.target_n != dst.n() ||
      static_cast<int>(m.image.size()) != src.n())
    throw PreconditionError("count_violations: dimension mismatch");
  for (int v = 0; v < src.n(); ++v)
    if (m.image[v] < 0 || m.image[v] >= dst.n())
      throw PreconditionError("count_violations: image value out of range");
  long long bad = 0;
  for (auto [u, v] : src.edges())
    if (!dst.adjacent(m.image[u], m.image[v])) ++bad;
  return bad;
}

Graph blowup(const Graph& g, const std::vector<int>& part_sizes) {
  if (static_cast<int>(part_sizes.size()) != g.n())
    throw PreconditionError("blowup: part_sizes length must equal vertex count");
  std::vector<int> offset(g.n() + 1, 0);
  for (int v = 0; v < g.n(); ++v) {
    if (part_sizes[v] <= 0) throw PreconditionError("blowup: part sizes must be positive");
    offset[v + 1] = offset[v] + part_sizes[v];
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    for (int a = offset[u]; a < offset[u + 1]; ++a)
      for (int b = offset[v]; b < offset[v + 1]; ++b) edges.emplace_back(a, b);
  return Graph(offset[g.n()], std::move(edges));
}

std::vector<int> blowup_projection(const std::vector<int>& part_sizes) {
  std::vector<int> proj;
  for (std::size_t v = 0; v < part_sizes.size(); ++v)
    proj.insert(proj.end(), part_sizes[v], static_cast<int>(v));
  return proj;
}

Graph two_subdivision(const Graph& f) {
  std::vector<std::pair<int, int>> edges;
  int next = f.n();
  for (auto [u, v] : f.edges()) {
    int a = next++, b = next++;
    edges.emplace_back(u, a);
    edges.emplace_back(a, b);
    edges.emplace_back(b, v);
  }
  return Graph(f.n() + 2 * f.edge_count(), std::move(edges));
}

std::vector<std::vector<int>> neighborhood_layers(const Graph& g, const std::vector<int>& seed_set,
                                                  int depth) {
  if (depth < 0) throw PreconditionError("neighborhood_layers: negative depth");
  std::vector<int> dist(g.n(), kInf);
  std::deque<int> queue;
  for (int v : seed_set) {
    if (v < 0 || v >= g.n()) throw PreconditionError("neighborhood_layers: seed out of range");
    if (dist[v] == kInf) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (dist[v] >= depth) continue;
    for (int w : g.neighbors(v))
      if (dist[w] == kInf) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  std::vector<std::vector<int>> layers(depth + 1);
  for (int v = 0; v < g.n(); ++v)
    if (dist[v] <= depth) layers[dist[v]].push_back(v);
  return layers;
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits closed_neighborhood_bits(const Graph& g, int v) {
  Bits bits((g.n() + 63) / 64, 0);
  bits[v / 64] |= 1ULL << (v % 64);
  for (int w : g.neighbors(v)) bits[w / 64] |= 1ULL << (w % 64);
  return bits;
}

bool covers_all(const Bits& acc, int n) {
  for (int v = 0; v < n; ++v)
    if (!(acc[v / 64] >> (v % 64) & 1)) return false;
  return true;
}

}  // namespace

bool is_dominating_set(const Graph& g, const std::vector<int>& set) {
  std::vector<char> covered(g.n(), 0);
  for (int v : set) {
    if (v < 0 || v >= g.n()) throw PreconditionError("dominating set: vertex out of range");
    covered[v] = 1;
    for (int w : g.neighbors(v)) covered[w] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

std::vector<int> minimum_dominating_set(const Graph& g, int exact_limit) {
  if (g.n() == 0) return {};
  if (g.n() > exact_limit)
    throw CapError("minimum_dominating_set: " + std::to_string(g.n()) + " vertices exceeds exact limit " +
                   std::to_string(exact_limit) + "; use greedy_dominating_set");
  std::vector<Bits> closed(g.n());
  for (int v = 0; v < g.n(); ++v) closed[v] = closed_neighborhood_bits(g, v);
  int words = (g.n() + 63) / 64;
  for (int k = 1; k <= g.n(); ++k) {
    // lexicographic enumeration of k-subsets
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      Bits acc(words, 0);
      for (int v : pick)
        for (int w = 0; w < words; ++w) acc[w] |= closed[v][w];
      if (covers_all(acc, g.n())) return pick;
      int i = k - 1;
      while (i >= 0 && pick[i] == g.n() - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};  // unreachable: the full vertex set dominates
}

int domination_number(const Graph& g, int exact_limit) {
  return static_cast<int>(minimum_dominating_set(g, exact_limit).size());
}

std::vector<int> greedy_dominating_set(const Graph& g) {
  std::vector<char> covered(g.n(), 0);
  std::vector<int> set;
  int remaining = g.n();
  while (remaining > 0) {
    int best = -1, best_gain = -1;
    for (int v = 0; v < g.n(); ++v) {
      int gain = covered[v] ? 0 : 1;
      for (int w : g.neighbors(v)) gain += covered[w] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    set.push_back(best);
    if (!covered[best]) {
      covered[best] = 1;
      --remaining;
    }
    for (int w : g.neighbors(best))
      if (!covered[w]) {
        covered[w] = 1;
        --remaining;
      }
  }
  return set;
}

namespace {

bool has_shattered_set(const Graph& g, int d) {
  if (d == 0) return true;
  if (d > g.n()) return false;
  std::vector<int> pick(d);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<char> seen;
  while (true) {
    seen.assign(std::size_t{1} << d, 0);
    int found = 0;
    for (int v = 0; v < g.n() && found < (1 << d); ++v) {
      unsigned trace = 0;
      for (int i = 0; i < d; ++i)
        if (g.adjacent(v, pick[i])) trace |= 1u << i;
      if (!seen[trace]) {
        seen[trace] = 1;
        ++found;
      }
    }
    if (found == (1 << d)) return true;
    int i = d - 1;
    while (i >= 0 && pick[i] == g.n() - d + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

VcResult vc_dimension(const Graph& g, int d_cap) {
  VcResult result;
  for (int d = 1; d <= d_cap; ++d) {
    if (!has_shattered_set(g, d)) return result;
    result.dimension = d;
  }
  result.at_cap = true;
  return result;
}

bool is_epsilon_net(const Graph& g, double eps, const std::vector<int>& net) {
  std::vector<char> in_net(g.n(), 0);
  for (int v : net) in_net[v] = 1;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) < eps * g.n()) continue;
    bool hit = false;
    for (int w : g.neighbors(v))
      if (in_net[w]) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

std::vector<int> greedy_epsilon_net(const Graph& g, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw PreconditionError("greedy_epsilon_net: eps must be in (0,1]");
  std::vector<int> targets;  // vertices whose neighborhoods must be hit
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) >= eps * g.n()) targets.push_back(v);
  std::vector<char> covered(targets.size(), 0);
  std::size_t remaining = targets.size();
  std::vector<int> net;
  while (remaining > 0) {
    int best = -1;
    long long best_gain = -1;
    for (int u = 0; u < g.n(); ++u) {
      long long gain = 0;
      for (std::size_t i = 0; i < targets.size(); ++i)
        if (!covered[i] && g.adjacent(u, targets[i])) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = u;
      }
    }
    net.push_back(best);
    for (std::size_t i = 0; i < targets.size(); ++i)
      if (!covered[i] && g.adjacent(best, targets[i])) {
        covered[i] = 1;
        --remaining;
      }
  }
  if (!is_epsilon_net(g, eps, net))
    throw Error("greedy_epsilon_net: internal consistency failure");
  return net;
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<char> seen(g.n(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        queue.push_back(w);
      }
  }
  return count == g.n();
}

bool is_two_connected(const Graph& g) {
  if (g.n() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> rest;
    for (int u = 0; u < g.n(); ++u)
      if (u != v) rest.push_back(u);
    if (!is_connected(induced_subgraph(g, rest))) return false;
  }
  return true;
}

std::optional<int> odd_cycle_order(const Graph& h) {
  if (h.n() < 3 || h.n() % 2 == 0 || h.n() != h.edge_count()) return std::nullopt;
  for (int v = 0; v < h.n(); ++v)
    if (h.degree(v) != 2) return std::nullopt;
  if (!is_connected(h)) return std::nullopt;
  return h.n();
}

std::optional<std::vector<int>> shortest_cycle(const Graph& g) {
  int best_len = kInf;
  std::vector<int> best_cycle;
  std::vector<int> dist(g.n()), parent(g.n());
  for (int root = 0; root < g.n(); ++root) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(parent.begin(), parent.end(), -1);
    dist[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (2 * dist[v] >= best_len) break;
      for (int w : g.neighbors(v)) {
        if (dist[w] == kInf) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (w != parent[v] && parent[w] != v) {
          // non-tree edge: cycle through the BFS tree
          std::vector<int> pv, pw;
          for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
          for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
          std::reverse(pv.begin(), pv.end());
          std::reverse(pw.begin(), pw.end());
          std::size_t lca = 0;
          while (lca + 1 < pv.size() && lca + 1 < pw.size() && pv[lca + 1] == pw[lca + 1]) ++lca;
          std::vector<int> cycle(pv.begin() + lca, pv.end());
          for (std::size_t i = pw.size(); i-- > lca + 1;) cycle.push_back(pw[i]);
          int len = static_cast<int>(cycle.size());
          if (len < best_len) {
            best_len = len;
            best_cycle = cycle;
          }
        }
      }
    }
  }
  if (best_cycle.empty()) return std::nullopt;
  return best_cycle;
}

Graph random_graph(int n, double p, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

WeightedGraph as_weighted(const Graph& g) {
  WeightedGraph w(g.n());
  for (auto [u, v] : g.edges()) w.set_weight(u, v, 1.0);
  return w;
}

}  // namespace homforge
