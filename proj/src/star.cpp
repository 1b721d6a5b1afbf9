#include "homforge/star.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "homforge/graph_core.hpp"
#include "homforge/rng.hpp"

namespace homforge {

namespace {

// 1-based rank of `other` among v's pattern neighbors (sorted by id).
int label_in_pattern(const Graph& f, int v, int other) {
  const auto& nb = f.neighbors(v);
  auto it = std::lower_bound(nb.begin(), nb.end(), other);
  return static_cast<int>(it - nb.begin()) + 1;
}

}  // namespace

CopyEnumeration enumerate_f_copies(const Graph& g, const Graph& f) {
  if (f.n() < 2) throw PreconditionError("enumerate_f_copies: pattern needs at least 2 vertices");
  if (!is_connected(f)) throw PreconditionError("enumerate_f_copies: pattern must be connected");

  // Search order: BFS from pattern vertex 0, so each vertex after the first
  // has an already-placed neighbor.
  std::vector<int> order;
  {
    std::vector<char> seen(f.n(), 0);
    order.push_back(0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int w : f.neighbors(order[i]))
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
  }
  std::vector<std::vector<int>> earlier(f.n());
  {
    std::vector<int> pos(f.n());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    for (int v = 0; v < f.n(); ++v)
      for (int w : f.neighbors(v))
        if (pos[w] < pos[v]) earlier[v].push_back(w);
  }

  std::map<std::vector<int>, std::vector<int>> by_edge_set;  // edge ids -> min vertex tuple
  std::vector<int> image(f.n(), -1);
  std::vector<char> used(g.n(), 0);

  auto record = [&]() {
    std::vector<int> edge_ids;
    edge_ids.reserve(f.edge_count());
    for (auto [a, b] : f.edges()) {
      auto id = g.edge_id(image[a], image[b]);
      if (!id) throw Error("enumerate_f_copies: internal edge lookup failure");
      edge_ids.push_back(*id);
    }
    std::sort(edge_ids.begin(), edge_ids.end());
    std::vector<int> tuple(image.begin(), image.end());
    auto [it, inserted] = by_edge_set.emplace(std::move(edge_ids), tuple);
    if (!inserted && tuple < it->second) it->second = tuple;
  };

  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      record();
      return;
    }
    int v = order[depth];
    for (int c = 0; c < g.n(); ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int w : earlier[v])
        if (!g.adjacent(image[w], c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      image[v] = c;
      used[c] = 1;
      self(self, depth + 1);
      image[v] = -1;
      used[c] = 0;
    }
  };
  search(search, 0);

  CopyEnumeration result;
  result.cover_count.assign(g.edge_count(), 0);
  int index = 0;
  for (const auto& [edge_ids, tuple] : by_edge_set) {
    LabelledCopy copy;
    copy.index = index++;
    copy.vertices = tuple;
    for (auto [a, b] : f.edges()) {
      EdgeLabelPair label;
      label.f_u = a;
      label.f_v = b;
      label.host_u = tuple[a];
      label.host_v = tuple[b];
      label.label_at_u = label_in_pattern(f, a, b);
      label.label_at_v = label_in_pattern(f, b, a);
      copy.edges.push_back(label);
    }
    for (int eid : edge_ids) result.cover_count[eid] += 1;
    result.copies.push_back(std::move(copy));
  }
  result.unique_cover =
      std::all_of(result.cover_count.begin(), result.cover_count.end(), [](int c) { return c == 1; });
  return result;
}

std::vector<int> StarGraph::coords_of(int v) const {
  std::vector<int> coords(m);
  long long x = tuple_of(v);
  for (int k = 0; k < m; ++k) {
    coords[k] = static_cast<int>(x % delta) + 1;
    x /= delta;
  }
  return coords;
}

StarGraph build_star(const Graph& g, const Graph& f, const CopyEnumeration& copies,
                     long long size_cap) {
  if (!copies.unique_cover)
    throw PreconditionError("build_star: host edges are not uniquely covered by pattern copies");
  StarGraph star;
  star.base_n = g.n();
  star.m = static_cast<int>(copies.copies.size());
  star.delta = std::max(f.max_degree(), 1);
  star.tuples = 1;
  for (int k = 0; k < star.m; ++k) {
    star.tuples *= star.delta;
    if (star.tuples > size_cap)
      throw CapError("build_star: delta^m = " + std::to_string(star.delta) + "^" +
                     std::to_string(star.m) + " exceeds size cap " + std::to_string(size_cap));
  }
  long long total = static_cast<long long>(g.n()) * star.tuples;
  if (total > size_cap || total > 2'000'000'000LL)
    throw CapError("build_star: size " + std::to_string(g.n()) + " * " +
                   std::to_string(star.tuples) + " exceeds cap " + std::to_string(size_cap));

  long long rest = star.tuples / star.delta;  // delta^(m-1)
  std::vector<long long> pow_delta(star.m + 1, 1);
  for (int k = 1; k <= star.m; ++k) pow_delta[k] = pow_delta[k - 1] * star.delta;
  auto insert_digit = [&](long long r, int k, int d) {
    long long low = r % pow_delta[k];
    long long high = r / pow_delta[k];
    return low + d * pow_delta[k] + high * pow_delta[k + 1];
  };

  std::vector<std::pair<int, int>> edges;
  if (star.m > 0) edges.reserve(static_cast<std::size_t>(g.edge_count()) * rest * rest);
  for (const auto& copy : copies.copies) {
    int k = copy.index;
    for (const auto& label : copy.edges) {
      for (long long r = 0; r < rest; ++r) {
        long long x = insert_digit(r, k, label.label_at_u - 1);
        for (long long s = 0; s < rest; ++s) {
          long long y = insert_digit(s, k, label.label_at_v - 1);
          edges.emplace_back(star.id(label.host_u, x), star.id(label.host_v, y));
        }
      }
    }
  }
  star.graph = Graph(static_cast<int>(total), std::move(edges));
  return star;
}

long long star_projection_violations(const StarGraph& star, const Graph& g) {
  VertexMap proj{star.graph.n(), g.n(), {}};
  proj.image.resize(star.graph.n());
  for (int v = 0; v < star.graph.n(); ++v) proj.image[v] = star.base_of(v);
  return count_violations(proj, star.graph, g);
}

void star_copy_audit(const StarGraph& star, const Graph& g, const Graph& f,
                     const CopyEnumeration& copies) {
  if (star_projection_violations(star, g) != 0)
    throw Error("star audit: base projection is not a homomorphism");
  long long rest = star.m == 0 ? 1 : star.tuples / star.delta;
  long long expected = rest * rest;

  // Bucket star edges by base pair.
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> by_base;
  for (auto [x, y] : star.graph.edges()) {
    int bx = star.base_of(x), by = star.base_of(y);
    if (bx == by) throw Error("star audit: edge inside a blowup set");
    auto key = std::minmax(bx, by);
    by_base[{key.first, key.second}].emplace_back(x, y);
  }

  for (const auto& copy : copies.copies) {
    int k = copy.index;
    for (std::size_t a = 0; a < copy.vertices.size(); ++a)
      for (std::size_t b = a + 1; b < copy.vertices.size(); ++b) {
        int ha = copy.vertices[a], hb = copy.vertices[b];
        auto key = std::minmax(ha, hb);
        auto it = by_base.find({key.first, key.second});
        long long count = it == by_base.end() ? 0 : static_cast<long long>(it->second.size());
        if (!f.adjacent(static_cast<int>(a), static_cast<int>(b))) {
          if (count != 0) throw Error("star audit: edges between unmatched blowup sets");
          continue;
        }
        const EdgeLabelPair* label = nullptr;
        for (const auto& e : copy.edges)
          if ((e.f_u == static_cast<int>(a) && e.f_v == static_cast<int>(b)) ||
              (e.f_u == static_cast<int>(b) && e.f_v == static_cast<int>(a)))
            label = &e;
        if (!label) throw Error("star audit: missing label for a copy edge");
        if (count != expected)
          throw Error("star audit: wrong bipartite block size between bases " +
                      std::to_string(ha) + " and " + std::to_string(hb));
        for (auto [x, y] : it->second) {
          int xu = star.base_of(x) == label->host_u ? x : y;
          int yv = xu == x ? y : x;
          if (star.digit(star.tuple_of(xu), k) != label->label_at_u - 1 ||
              star.digit(star.tuple_of(yv), k) != label->label_at_v - 1)
            throw Error("star audit: edge digits do not match the copy labels");
        }
      }
  }
}

FForest make_f_forest(const Graph& f, const std::vector<FForestStep>& plan) {
  if (!is_two_connected(f))
    throw PreconditionError("make_f_forest: pattern must be 2-connected");
  if (plan.empty()) throw PreconditionError("make_f_forest: empty plan");
  if (plan[0].host_vertex != -1)
    throw PreconditionError("make_f_forest: first copy cannot attach to an existing vertex");

  FForest forest;
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  for (const auto& step : plan) {
    std::vector<int> tuple(f.n(), -1);
    if (step.host_vertex >= 0) {
      if (step.host_vertex >= n)
        throw PreconditionError("make_f_forest: attachment vertex out of range");
      if (step.f_anchor < 0 || step.f_anchor >= f.n())
        throw PreconditionError("make_f_forest: anchor out of range");
      tuple[step.f_anchor] = step.host_vertex;
    } else if (step.host_vertex != -1) {
      throw PreconditionError("make_f_forest: attachment vertex out of range");
    }
    for (int i = 0; i < f.n(); ++i)
      if (tuple[i] < 0) tuple[i] = n++;
    for (auto [a, b] : f.edges()) edges.emplace_back(tuple[a], tuple[b]);
    forest.copy_tuples.push_back(std::move(tuple));
    forest.steps.push_back(step);
  }
  forest.graph = Graph(n, std::move(edges));
  return forest;
}

std::vector<FForestStep> random_forest_plan(const Graph& f, int copies, std::uint64_t seed) {
  if (copies < 1) throw PreconditionError("random_forest_plan: need at least one copy");
  Rng rng(seed);
  std::vector<FForestStep> plan;
  plan.push_back(FForestStep{-1, 0});
  int n = f.n();
  for (int i = 1; i < copies; ++i) {
    FForestStep step;
    step.host_vertex = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(n)));
    step.f_anchor = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(f.n())));
    plan.push_back(step);
    n += f.n() - 1;
  }
  return plan;
}

std::optional<int> star_odd_girth(const FForest& forest, const Graph& f, long long size_cap) {
  if (f.n() != 3 || f.edge_count() != 3)
    throw PreconditionError("star_odd_girth: defined for triangle forests");
  CopyEnumeration copies = enumerate_f_copies(forest.graph, f);
  if (!copies.unique_cover)
    throw Error("star_odd_girth: forest edges are not uniquely covered (internal)");
  StarGraph star = build_star(forest.graph, f, copies, size_cap);
  return odd_girth(star.graph);
}

}  // namespace homforge
