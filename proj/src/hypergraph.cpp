#include "homforge/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "homforge/rng.hpp"

namespace homforge {

void Hypergraph::validate() const {
  if (n < 0 || uniformity < 0) throw PreconditionError("hypergraph: negative sizes");
  if (partite() && static_cast<int>(part_of.size()) != n)
    throw PreconditionError("hypergraph: part assignment does not cover the vertices");
  std::set<std::vector<int>> seen;
  for (const auto& e : edges) {
    if (static_cast<int>(e.size()) != uniformity)
      throw PreconditionError("hypergraph: edge of wrong size");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= n) throw PreconditionError("hypergraph: edge vertex out of range");
      if (i > 0 && e[i] <= e[i - 1])
        throw PreconditionError("hypergraph: edge vertices must be sorted and distinct");
    }
    if (!seen.insert(e).second) throw PreconditionError("hypergraph: duplicate edge");
    if (partite()) {
      std::vector<char> hit(uniformity, 0);
      for (int v : e) {
        if (part_of[v] < 0 || part_of[v] >= uniformity || hit[part_of[v]])
          throw PreconditionError("hypergraph: edge does not meet every part exactly once");
        hit[part_of[v]] = 1;
      }
    }
  }
}

namespace {

// Depth-bounded search for a Berge cycle of exactly k edges. Vertices are
// canonicalized so the start vertex is the smallest on the cycle.
struct BergeSearch {
  const Hypergraph& h;
  std::vector<std::vector<int>> incident;  // vertex -> edge indices
  std::vector<char> used_vertex;
  std::vector<char> used_edge;
  std::vector<int> vertex_seq;
  std::vector<int> edge_seq;
  int k;

  explicit BergeSearch(const Hypergraph& hg, int length) : h(hg), k(length) {
    incident.assign(h.n, {});
    for (std::size_t e = 0; e < h.edges.size(); ++e)
      for (int v : h.edges[e]) incident[v].push_back(static_cast<int>(e));
    used_vertex.assign(h.n, 0);
    used_edge.assign(h.edges.size(), 0);
  }

  bool extend(int depth) {
    int cur = vertex_seq.back();
    for (int e : incident[cur]) {
      if (used_edge[e]) continue;
      if (depth == k) {
        // closing edge must also contain the start vertex
        const auto& verts = h.edges[e];
        if (std::binary_search(verts.begin(), verts.end(), vertex_seq.front())) {
          edge_seq.push_back(e);
          return true;
        }
        continue;
      }
      used_edge[e] = 1;
      edge_seq.push_back(e);
      for (int w : h.edges[e]) {
        if (used_vertex[w] || w <= vertex_seq.front()) continue;
        used_vertex[w] = 1;
        vertex_seq.push_back(w);
        if (extend(depth + 1)) return true;
        vertex_seq.pop_back();
        used_vertex[w] = 0;
      }
      edge_seq.pop_back();
      used_edge[e] = 0;
    }
    return false;
  }

  bool find(int start) {
    vertex_seq = {start};
    used_vertex[start] = 1;
    bool found = extend(1);
    if (!found) used_vertex[start] = 0;
    return found;
  }
};

}  // namespace

std::optional<int> shortest_berge_cycle(const Hypergraph& h, int g_cap) {
  if (g_cap < 2) throw PreconditionError("shortest_berge_cycle: cap must be at least 2");
  for (int k = 2; k <= g_cap; ++k) {
    for (int start = 0; start < h.n; ++start) {
      BergeSearch search(h, k);
      if (search.find(start)) return k;
    }
  }
  return std::nullopt;
}

namespace {

std::optional<std::vector<int>> find_berge_cycle_edges(const Hypergraph& h, int g_cap) {
  for (int k = 2; k <= g_cap; ++k)
    for (int start = 0; start < h.n; ++start) {
      BergeSearch search(h, k);
      if (search.find(start)) return search.edge_seq;
    }
  return std::nullopt;
}

}  // namespace

HyperforestCheck is_hyperforest(const Hypergraph& h) {
  HyperforestCheck check;
  std::vector<char> removed(h.edges.size(), 0);
  std::vector<int> cover(h.n, 0);
  for (const auto& e : h.edges)
    for (int v : e) cover[v] += 1;
  std::size_t remaining = h.edges.size();
  std::vector<int> peel_order;
  bool progress = true;
  while (remaining > 0 && progress) {
    progress = false;
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      if (removed[e]) continue;
      int shared = 0;
      for (int v : h.edges[e])
        if (cover[v] >= 2) ++shared;
      if (shared <= 1) {
        removed[e] = 1;
        for (int v : h.edges[e]) cover[v] -= 1;
        peel_order.push_back(static_cast<int>(e));
        --remaining;
        progress = true;
        break;
      }
    }
  }
  check.is_forest = remaining == 0;
  if (check.is_forest) {
    check.build_sequence.assign(peel_order.rbegin(), peel_order.rend());
  }
  return check;
}

HighGirthResult random_high_girth_hypergraph(int n, int f, int g, std::uint64_t seed,
                                             const HighGirthOptions& opts) {
  if (n < f || f < 2 || g < 2)
    throw PreconditionError("random_high_girth_hypergraph: need n >= f >= 2 and g >= 2");
  HighGirthResult result;
  double c = opts.c_override > 0
                 ? opts.c_override
                 : 1.0 / (4.0 * g * std::pow(static_cast<double>(f), static_cast<double>(f)));
  double p = opts.p_override > 0
                 ? opts.p_override
                 : c * std::pow(static_cast<double>(n), -f + 1.0 + 1.0 / g);
  p = std::min(p, 1.0);
  result.c = c;
  result.p = p;

  int part_size = n / f;
  std::vector<int> part_of(n, -1);
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < part_size; ++j) part_of[i * part_size + j] = i;

  HighGirthResult best;
  bool have_best = false;
  for (int attempt = 0; attempt < std::max(1, opts.max_retries); ++attempt) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(attempt));
    Hypergraph h;
    h.n = n;
    h.uniformity = f;
    h.part_of = part_of;
    // every transversal tuple gets one Bernoulli draw, lexicographic order
    std::vector<int> idx(f, 0);
    while (true) {
      bool take = rng.next_bernoulli(p);
      if (take) {
        std::vector<int> edge(f);
        for (int i = 0; i < f; ++i) edge[i] = i * part_size + idx[i];
        h.edges.push_back(std::move(edge));
      }
      int i = f - 1;
      while (i >= 0 && idx[i] == part_size - 1) {
        idx[i] = 0;
        --i;
      }
      if (i < 0) break;
      ++idx[i];
    }
    int raw = static_cast<int>(h.edges.size());
    int deleted = 0;
    while (true) {
      auto cycle_edges = find_berge_cycle_edges(h, g);
      if (!cycle_edges) break;
      std::size_t victim = *std::min_element(
          cycle_edges->begin(), cycle_edges->end(), [&](int a, int b) {
            return h.edges[a] < h.edges[b];
          });
      h.edges.erase(h.edges.begin() + static_cast<long>(victim));
      ++deleted;
    }
    if (shortest_berge_cycle(h, g))
      throw Error("random_high_girth_hypergraph: girth check failed after deletion");
    h.validate();

    HighGirthResult candidate;
    candidate.hypergraph = std::move(h);
    candidate.raw_edges = raw;
    candidate.deleted = deleted;
    candidate.p = p;
    candidate.c = c;
    candidate.attempts = attempt + 1;
    candidate.reached_floor =
        static_cast<int>(candidate.hypergraph.edges.size()) >= opts.min_edges;
    if (!have_best ||
        candidate.hypergraph.edges.size() > best.hypergraph.edges.size()) {
      best = std::move(candidate);
      have_best = true;
    }
    if (best.reached_floor) break;
  }
  return best;
}

Graph decorate_with_f(const Hypergraph& h, const Graph& f) {
  h.validate();
  if (!h.partite() || h.uniformity != f.n())
    throw PreconditionError("decorate_with_f: hypergraph must be partite with uniformity |f|");
  std::set<std::pair<int, int>> edges;
  for (const auto& e : h.edges) {
    std::vector<int> by_part(f.n(), -1);
    for (int v : e) by_part[h.part_of[v]] = v;
    for (auto [a, b] : f.edges()) {
      int u = by_part[a], v = by_part[b];
      if (u > v) std::swap(u, v);
      edges.emplace(u, v);
    }
  }
  return Graph(h.n, {edges.begin(), edges.end()});
}

}  // namespace homforge
