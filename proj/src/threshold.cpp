#include "homforge/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "homforge/mycielski.hpp"

namespace homforge {

namespace {

std::string join_ints(const std::vector<int>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ",";
    out << xs[i];
  }
  return out.str();
}

std::string cycle_to_string(const OddCycle& c) {
  std::ostringstream out;
  out << "length " << c.length << " through";
  for (int v : c.vertices) out << " " << v;
  return out.str();
}

// Odd girth must be >= floor (or the graph bipartite); throws with the
// witness cycle otherwise.
void require_odd_girth(const Graph& g, int floor, const std::string& who) {
  auto cyc = shortest_odd_cycle(g);
  if (cyc && cyc->length < floor)
    throw PreconditionError(who + ": graph has an odd cycle shorter than " + std::to_string(floor) +
                            " (" + cycle_to_string(*cyc) + ")");
}

long long power_capped(long long base, long long exponent, long long cap) {
  long long r = 1;
  for (long long i = 0; i < exponent; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

struct PartialHom {
  Graph target;
  std::vector<int> image;  // over the vertices of the current graph
};

// One layered-extension step: graph g is split into u_set (already mapped by
// phi into `target`) and its complement; the map is pushed into M_t(target).
PartialHom extend_step(const Graph& g, const std::vector<int>& u_set,
                       const std::vector<int>& phi_on_u, const Graph& target, int t) {
  Extension ext = extend_homomorphism(g, u_set, phi_on_u, target, t);
  return PartialHom{std::move(ext.target.graph), std::move(ext.psi.image)};
}

void finalize_certificate(HomCertificate& cert, const Graph& g, int t) {
  if (count_violations(cert.map, g, cert.target) != 0)
    throw Error("threshold pipeline: emitted map has violations");
  auto og = odd_girth(cert.target);
  if (og && *og < 2 * t + 3)
    throw Error("threshold pipeline: target odd girth " + std::to_string(*og) +
                " below promised " + std::to_string(2 * t + 3));
  if (cert.target.n() > cert.claimed.size_bound)
    throw Error("threshold pipeline: target size " + std::to_string(cert.target.n()) +
                " exceeds promised bound " + std::to_string(cert.claimed.size_bound));
  cert.claimed.odd_girth_floor = 2 * t + 3;
  cert.claimed.violations = 0;
  cert.report.emplace_back("target_size", std::to_string(cert.target.n()));
  cert.report.emplace_back("target_odd_girth", og ? std::to_string(*og) : std::string("bipartite"));
  cert.report.emplace_back("odd_girth_floor", std::to_string(2 * t + 3));
  cert.report.emplace_back("violations", "0");
  cert.report.emplace_back("verified", "map, odd girth, size bound");
  for (const auto& note : cert.notes) cert.report.emplace_back("note", note);
}

}  // namespace

std::vector<std::vector<int>> LayerDecomposition::incremental() const {
  std::vector<std::vector<int>> seq;
  seq.insert(seq.end(), x_sets.begin(), x_sets.end());
  seq.insert(seq.end(), y_sets.begin(), y_sets.end());
  return seq;
}

LayerDecomposition disjoint_neighborhood_family(const Graph& g) {
  LayerDecomposition d;
  std::vector<char> blocked(g.n(), 0);  // vertices inside some chosen X
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) {
      d.isolated.push_back(v);
      continue;
    }
    bool disjoint = true;
    for (int w : g.neighbors(v))
      if (blocked[w]) {
        disjoint = false;
        break;
      }
    if (!disjoint) continue;
    d.anchors.push_back(v);
    d.x_sets.push_back(g.neighbors(v));
    for (int w : g.neighbors(v)) blocked[w] = 1;
  }
  d.y_sets.assign(d.anchors.size(), {});
  for (int v = 0; v < g.n(); ++v) {
    if (blocked[v] || g.degree(v) == 0) continue;
    int j = -1;
    for (std::size_t i = 0; i < d.x_sets.size() && j < 0; ++i)
      for (int w : g.neighbors(v))
        if (std::binary_search(d.x_sets[i].begin(), d.x_sets[i].end(), w)) {
          j = static_cast<int>(i);
          break;
        }
    if (j < 0) throw Error("disjoint_neighborhood_family: maximality violated");
    d.y_sets[j].push_back(v);
  }
  return d;
}

HomCertificate mindeg_pipeline(const Graph& g, int t, const PipelineOptions& opts) {
  if (t < 1) throw PreconditionError("mindeg pipeline: t must be at least 1");
  if (g.n() == 0 || g.min_degree() == 0) {
    int witness = 0;
    for (int v = 0; v < g.n(); ++v)
      if (g.degree(v) == 0) witness = v;
    throw PreconditionError("mindeg pipeline: positive minimum degree required (vertex " +
                            std::to_string(witness) + " is isolated)");
  }
  require_odd_girth(g, 2 * t + 7, "mindeg pipeline");

  LayerDecomposition decomp = disjoint_neighborhood_family(g);
  int k = static_cast<int>(decomp.anchors.size());
  long long predicted = (power_capped(t + 1, 2LL * k, opts.size_cap * (t + 1)) - 1) / t;
  if (predicted > opts.size_cap)
    throw CapError("mindeg pipeline: predicted target size ((t+1)^(2k)-1)/t with k=" +
                   std::to_string(k) + " exceeds cap " + std::to_string(opts.size_cap));

  auto sequence = decomp.incremental();
  // Seed: the first neighborhood maps to the one-vertex graph.
  std::vector<int> covered = sequence[0];
  std::sort(covered.begin(), covered.end());
  Graph target = make_empty(1);
  std::vector<int> image(g.n(), -1);
  for (int v : covered) image[v] = 0;
  {
    VertexMap seed{static_cast<int>(covered.size()), 1,
                   std::vector<int>(covered.size(), 0)};
    if (count_violations(seed, induced_subgraph(g, covered), target) != 0)
      throw Error("mindeg pipeline: first neighborhood is not independent");
  }

  for (std::size_t step = 1; step < sequence.size(); ++step) {
    std::vector<int> merged = covered;
    merged.insert(merged.end(), sequence[step].begin(), sequence[step].end());
    std::sort(merged.begin(), merged.end());
    Graph g_cur = induced_subgraph(g, merged);
    std::vector<int> u_local, phi_local;
    for (std::size_t i = 0; i < merged.size(); ++i)
      if (image[merged[i]] >= 0) {
        u_local.push_back(static_cast<int>(i));
        phi_local.push_back(image[merged[i]]);
      }
    PartialHom next = extend_step(g_cur, u_local, phi_local, target, t);
    target = std::move(next.target);
    for (std::size_t i = 0; i < merged.size(); ++i) image[merged[i]] = next.image[i];
    covered = std::move(merged);
  }
  for (int v : decomp.isolated) image[v] = 0;

  HomCertificate cert;
  cert.target = std::move(target);
  cert.map = VertexMap{g.n(), cert.target.n(), std::move(image)};
  cert.k = k;
  cert.claimed.size_bound = predicted;
  double delta = static_cast<double>(g.min_degree()) / g.n();
  cert.report.emplace_back("pipeline", "mindeg");
  cert.report.emplace_back("n", std::to_string(g.n()));
  cert.report.emplace_back("edges", std::to_string(g.edge_count()));
  cert.report.emplace_back("t", std::to_string(t));
  cert.report.emplace_back("min_degree", std::to_string(g.min_degree()));
  {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", delta);
    cert.report.emplace_back("delta", buf);
  }
  cert.report.emplace_back("k", std::to_string(k));
  cert.report.emplace_back("anchors", join_ints(decomp.anchors));
  for (std::size_t j = 0; j < decomp.x_sets.size(); ++j)
    cert.report.emplace_back("x_size_" + std::to_string(j + 1),
                             std::to_string(decomp.x_sets[j].size()));
  for (std::size_t j = 0; j < decomp.y_sets.size(); ++j)
    cert.report.emplace_back("y_size_" + std::to_string(j + 1),
                             std::to_string(decomp.y_sets[j].size()));
  cert.report.emplace_back("size_formula", "((t+1)^(2k)-1)/t = " + std::to_string(predicted));
  if (cert.target.n() != predicted)
    throw Error("mindeg pipeline: target size does not match the formula");
  finalize_certificate(cert, g, t);
  return cert;
}

namespace {

struct DomLevel {
  Graph target;
  std::vector<int> image;
};

// Recursive peel: remove the closed neighborhood of one dominating vertex,
// solve the rest with a dominating set that is one smaller, then extend the
// homomorphism through one Mycielskian layer block.
DomLevel dom_solve(const Graph& g, const std::vector<int>& dom, int t, const PipelineOptions& opts,
                   std::vector<std::string>& notes, int depth) {
  int k = static_cast<int>(dom.size());
  if (g.n() == 0) return DomLevel{make_complete(2), {}};
  if (k <= 1) {
    // Dominated by one vertex and odd-girth-clean, so the graph is a star.
    int center = k == 1 ? dom[0] : 0;
    DomLevel level;
    level.target = make_complete(2);
    level.image.assign(g.n(), 1);
    level.image[center] = 0;
    VertexMap m{g.n(), 2, level.image};
    if (count_violations(m, g, level.target) != 0)
      throw Error("domination pipeline: base case is not a star");
    return level;
  }

  // A peel candidate works when the remaining dominating set stays valid on
  // g minus the closed neighborhood; otherwise re-dominate the remainder.
  int chosen = -1;
  std::vector<int> next_dom;
  Graph rest_graph;
  std::vector<int> rest_vertices;
  for (int pass = 0; pass < 2 && chosen < 0; ++pass) {
    for (int idx = k - 1; idx >= 0 && chosen < 0; --idx) {
      int a = dom[idx];
      std::vector<char> removed(g.n(), 0);
      removed[a] = 1;
      for (int w : g.neighbors(a)) removed[w] = 1;
      std::vector<int> rest;
      for (int v = 0; v < g.n(); ++v)
        if (!removed[v]) rest.push_back(v);
      Graph sub = induced_subgraph(g, rest);
      std::vector<int> local_dom;
      if (pass == 0) {
        bool ok = true;
        for (int j = 0; j < k && ok; ++j) {
          if (j == idx) continue;
          auto it = std::lower_bound(rest.begin(), rest.end(), dom[j]);
          if (it == rest.end() || *it != dom[j])
            ok = false;
          else
            local_dom.push_back(static_cast<int>(it - rest.begin()));
        }
        if (!ok || !is_dominating_set(sub, local_dom)) continue;
      } else {
        if (sub.n() <= opts.domination_exact_limit) {
          local_dom = minimum_dominating_set(sub, opts.domination_exact_limit);
        } else {
          local_dom = greedy_dominating_set(sub);
        }
        if (static_cast<int>(local_dom.size()) > k - 1) continue;
        notes.push_back("re-dominated remainder at depth " + std::to_string(depth) + " (size " +
                        std::to_string(local_dom.size()) + ")");
      }
      chosen = a;
      next_dom = std::move(local_dom);
      rest_graph = std::move(sub);
      rest_vertices = std::move(rest);
    }
  }
  if (chosen < 0)
    throw Error("domination pipeline: no peel candidate keeps a dominating set of size " +
                std::to_string(k - 1) + " at depth " + std::to_string(depth));

  DomLevel inner = dom_solve(rest_graph, next_dom, t, opts, notes, depth + 1);

  // U = V minus N(chosen); `chosen` is isolated inside g[U] and maps to an
  // arbitrary fixed vertex of the inner target.
  std::vector<char> in_nbhd(g.n(), 0);
  for (int w : g.neighbors(chosen)) in_nbhd[w] = 1;
  std::vector<int> u_set;
  std::vector<int> phi_on_u;
  std::size_t rest_pos = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (in_nbhd[v]) continue;
    u_set.push_back(v);
    if (v == chosen) {
      phi_on_u.push_back(0);
    } else {
      while (rest_vertices[rest_pos] != v) ++rest_pos;
      phi_on_u.push_back(inner.image[rest_pos]);
    }
  }
  Extension ext = extend_homomorphism(g, u_set, phi_on_u, inner.target, t);
  return DomLevel{std::move(ext.target.graph), std::move(ext.psi.image)};
}

}  // namespace

HomCertificate domination_pipeline(const Graph& g, int t,
                                   std::optional<std::vector<int>> dominating_set,
                                   const PipelineOptions& opts) {
  if (t < 1) throw PreconditionError("domination pipeline: t must be at least 1");
  require_odd_girth(g, 2 * t + 5, "domination pipeline");

  std::vector<std::string> notes;
  std::vector<int> dom;
  if (dominating_set) {
    dom = *dominating_set;
    std::vector<int> sorted = dom;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw PreconditionError("domination pipeline: dominating set has duplicates");
    if (!is_dominating_set(g, dom))
      throw PreconditionError("domination pipeline: supplied set is not dominating");
  } else if (g.n() <= opts.domination_exact_limit) {
    dom = minimum_dominating_set(g, opts.domination_exact_limit);
  } else {
    dom = greedy_dominating_set(g);
    notes.push_back("dominating set computed greedily (graph too large for exact search)");
  }

  int k = static_cast<int>(dom.size());
  long long bound = k == 0 ? 2 : 3 * power_capped(t + 1, k - 1, opts.size_cap) - 1;
  if (bound > opts.size_cap)
    throw CapError("domination pipeline: bound 3(t+1)^(k-1)-1 with k=" + std::to_string(k) +
                   " exceeds cap " + std::to_string(opts.size_cap));

  DomLevel top = dom_solve(g, dom, t, opts, notes, 0);

  HomCertificate cert;
  cert.target = std::move(top.target);
  cert.map = VertexMap{g.n(), cert.target.n(), std::move(top.image)};
  cert.k = k;
  cert.claimed.size_bound = bound;
  cert.notes = std::move(notes);
  cert.report.emplace_back("pipeline", "domination");
  cert.report.emplace_back("n", std::to_string(g.n()));
  cert.report.emplace_back("edges", std::to_string(g.edge_count()));
  cert.report.emplace_back("t", std::to_string(t));
  cert.report.emplace_back("k", std::to_string(k));
  cert.report.emplace_back("dominating_set", join_ints(dom));
  cert.report.emplace_back("size_formula", "3(t+1)^(k-1)-1 = " + std::to_string(bound));
  finalize_certificate(cert, g, t);
  return cert;
}

HomCertificate vc_pipeline(const Graph& g, int t, double delta, int d_cap,
                           const PipelineOptions& opts) {
  if (!(delta > 0.0 && delta <= 1.0))
    throw PreconditionError("vc pipeline: delta must be in (0,1]");
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) < delta * g.n())
      throw PreconditionError("vc pipeline: vertex " + std::to_string(v) + " has degree " +
                              std::to_string(g.degree(v)) + " below delta*n");
  require_odd_girth(g, 2 * t + 5, "vc pipeline");

  std::vector<int> net = greedy_epsilon_net(g, delta);
  if (!is_dominating_set(g, net))
    throw Error("vc pipeline: epsilon-net failed to dominate despite the degree bound");

  HomCertificate cert = domination_pipeline(g, t, net, opts);
  std::vector<std::pair<std::string, std::string>> extra;
  extra.emplace_back("pipeline", "vc");
  extra.emplace_back("net_size", std::to_string(net.size()));
  extra.emplace_back("net", join_ints(net));
  if (g.n() <= opts.vc_report_limit) {
    VcResult vc = vc_dimension(g, d_cap);
    extra.emplace_back("vc_dimension",
                       vc.at_cap ? ">=" + std::to_string(vc.dimension) : std::to_string(vc.dimension));
    double ratio = 8.0 * std::max(vc.dimension, 1) / delta;
    char buf[96];
    std::snprintf(buf, sizeof buf, "3(t+1)^((8d/delta)log2(8d/delta)) with 8d/delta = %.12g", ratio);
    extra.emplace_back("theoretical_bound", buf);
  } else {
    extra.emplace_back("vc_dimension", "not computed (n over report limit)");
  }
  cert.report.insert(cert.report.begin(), extra.begin(), extra.end());
  return cert;
}

}  // namespace homforge
