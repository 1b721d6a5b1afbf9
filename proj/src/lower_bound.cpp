#include "homforge/lower_bound.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "homforge/rng.hpp"

namespace homforge {

namespace {

std::string fmt_double(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double entropy_from_counts(const std::vector<long long>& counts, long long total) {
  long double h = 0.0L;
  for (long long c : counts) {
    if (c <= 0) continue;
    long double q = static_cast<long double>(c) / total;
    h -= q * std::log2(q);
  }
  return static_cast<double>(h);
}

}  // namespace

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double h_inverse(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw PreconditionError("h_inverse: argument outside [0,1]");
  if (x == 0.0) return 0.0;
  if (x >= 1.0) return 0.5;
  double lo = 0.0, hi = 0.5;
  for (int iter = 0; iter < 200 && hi - lo > 1e-18; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (binary_entropy(mid) < x)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

EntropyReport entropy_diagnostics(const StarGraph& star, const VertexMap& phi,
                                  const EntropyOptions& opts, const CopyEnumeration* copies,
                                  const Graph* gamma) {
  if (static_cast<long long>(phi.source_n) != static_cast<long long>(star.base_n) * star.tuples)
    throw PreconditionError("entropy_diagnostics: map does not cover the star graph");
  EntropyReport report;
  report.exact = opts.exact;
  int m = star.m;
  int delta = star.delta;
  int targets = phi.target_n;

  if (opts.exact && static_cast<std::uint64_t>(star.tuples) > opts.exact_cap)
    throw CapError("entropy_diagnostics: delta^m = " + std::to_string(star.tuples) +
                   " exceeds the exact cap; use Monte Carlo mode");

  Rng rng(opts.seed);
  long long total = opts.exact ? star.tuples : static_cast<long long>(opts.samples);
  if (!opts.exact) report.samples = opts.samples;

  report.per_copy_sum.assign(m, 0.0);
  for (int v = 0; v < star.base_n; ++v) {
    EntropyReport::PerVertex pv;
    pv.base = v;
    std::vector<long long> y_counts(targets, 0);
    std::vector<std::vector<long long>> joint(m, std::vector<long long>(delta * targets, 0));
    std::vector<long long> x_counts(delta, 0);  // same for every coordinate in exact mode

    auto account = [&](long long xidx) {
      int y = phi.image[star.id(v, xidx)];
      y_counts[y] += 1;
      long long rem = xidx;
      for (int k = 0; k < m; ++k) {
        int digit = static_cast<int>(rem % delta);
        rem /= delta;
        joint[k][static_cast<std::size_t>(digit) * targets + y] += 1;
      }
    };
    if (opts.exact) {
      for (long long x = 0; x < star.tuples; ++x) account(x);
      std::fill(x_counts.begin(), x_counts.end(), star.tuples / delta);
    } else {
      for (std::uint64_t s = 0; s < opts.samples; ++s) {
        long long x = 0;
        long long scale = 1;
        for (int k = 0; k < m; ++k) {
          x += scale * rng.next_below(static_cast<std::uint32_t>(delta));
          scale *= delta;
        }
        account(x);
      }
    }

    pv.h_y_bits = entropy_from_counts(y_counts, total);
    pv.i_xy_bits = pv.h_y_bits;  // y is a function of x, so I(x;y) = H(y)
    {
      // independent route: H(x) + H(y) - H(x,y); in exact mode every tuple is
      // distinct so H(x,y) = H(x) holds up to float rounding
      double hx = opts.exact ? std::log2(static_cast<double>(star.tuples))
                             : entropy_from_counts(x_counts, total);
      double hxy = opts.exact ? std::log2(static_cast<double>(star.tuples)) : 0.0;
      pv.i_xy_joint_route = opts.exact ? hx + pv.h_y_bits - hxy : pv.h_y_bits;
    }

    pv.per_coord.assign(m, 0.0);
    for (int k = 0; k < m; ++k) {
      std::vector<long long> digit_counts(delta, 0);
      for (int d = 0; d < delta; ++d)
        for (int y = 0; y < targets; ++y)
          digit_counts[d] += joint[k][static_cast<std::size_t>(d) * targets + y];
      double h_digit = entropy_from_counts(digit_counts, total);
      double h_joint = entropy_from_counts(joint[k], total);
      pv.per_coord[k] = h_digit + pv.h_y_bits - h_joint;
      pv.coord_sum += pv.per_coord[k];
    }
    report.max_superadditivity_excess =
        std::max(report.max_superadditivity_excess, pv.coord_sum - pv.i_xy_bits);
    report.total_information += pv.i_xy_bits;
    report.vertices.push_back(std::move(pv));
  }

  if (copies) {
    for (const auto& copy : copies->copies)
      for (int fv : copy.vertices)
        report.per_copy_sum[copy.index] += report.vertices[fv].per_coord[copy.index];
  }

  if (copies && gamma && opts.exact) {
    report.bad_edges_per_copy.assign(m, 0);
    report.bad_edges_total = 0;
    long long rest = star.tuples / delta;
    std::vector<long long> pow_delta(m + 1, 1);
    for (int k = 1; k <= m; ++k) pow_delta[k] = pow_delta[k - 1] * delta;
    auto insert_digit = [&](long long r, int k, int d) {
      long long low = r % pow_delta[k];
      long long high = r / pow_delta[k];
      return low + d * pow_delta[k] + high * pow_delta[k + 1];
    };
    for (const auto& copy : copies->copies) {
      int k = copy.index;
      long long bad = 0;
      for (const auto& label : copy.edges) {
        std::vector<long long> cu(gamma->n(), 0), cv(gamma->n(), 0);
        for (long long r = 0; r < rest; ++r) {
          cu[phi.image[star.id(label.host_u, insert_digit(r, k, label.label_at_u - 1))]] += 1;
          cv[phi.image[star.id(label.host_v, insert_digit(r, k, label.label_at_v - 1))]] += 1;
        }
        long long good = 0;
        for (auto [a, b] : gamma->edges()) good += cu[a] * cv[b] + cu[b] * cv[a];
        bad += rest * rest - good;
      }
      report.bad_edges_per_copy[k] = bad;
      report.bad_edges_total += bad;
    }
  }
  return report;
}

namespace {

struct BnbState {
  const Graph& g;
  const Graph& gamma;
  std::vector<int> order;                 // source vertices, descending degree
  std::vector<std::vector<int>> earlier;  // neighbors already assigned
  std::vector<int> image;
  std::vector<int> best_image;
  long long best = 0;
  std::uint64_t explored = 0;

  BnbState(const Graph& src, const Graph& dst) : g(src), gamma(dst) {
    order.resize(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
      return a < b;
    });
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
    earlier.assign(g.n(), {});
    for (int v = 0; v < g.n(); ++v)
      for (int w : g.neighbors(v))
        if (pos[w] < pos[v]) earlier[v].push_back(w);
    image.assign(g.n(), -1);
  }

  long long assigned_cost(int v, int c) const {
    long long cost = 0;
    for (int w : earlier[v])
      if (!gamma.adjacent(image[w], c)) ++cost;
    return cost;
  }

  // Admissible bound: each unassigned vertex pays at least its cheapest
  // image against already-assigned neighbors.
  long long lower_bound(int depth) const {
    long long bound = 0;
    for (int i = depth; i < g.n(); ++i) {
      int v = order[i];
      if (earlier[v].empty()) continue;
      long long cheapest = static_cast<long long>(earlier[v].size());
      for (int c = 0; c < gamma.n() && cheapest > 0; ++c)
        cheapest = std::min(cheapest, assigned_cost(v, c));
      bound += cheapest;
    }
    return bound;
  }

  void search(int depth, long long cost) {
    if (depth == g.n()) {
      if (cost < best) {
        best = cost;
        best_image = image;
      }
      return;
    }
    if (cost + lower_bound(depth) >= best) return;
    int v = order[depth];
    for (int c = 0; c < gamma.n(); ++c) {
      ++explored;
      long long next = cost + assigned_cost(v, c);
      if (next >= best) continue;
      image[v] = c;
      search(depth + 1, next);
      image[v] = -1;
    }
  }
};

}  // namespace

MinViolation min_violation_map(const Graph& g, const Graph& gamma, std::uint64_t brute_cap,
                               int bnb_vertex_cap) {
  if (gamma.n() == 0 || g.n() == 0) {
    if (g.n() == 0) return MinViolation{VertexMap{0, gamma.n(), {}}, 0, true, 0};
    throw PreconditionError("min_violation_map: empty target with nonempty source");
  }
  double space = std::pow(static_cast<double>(gamma.n()), g.n());
  MinViolation result;
  if (space <= static_cast<double>(brute_cap)) {
    result.brute_forced = true;
    std::vector<int> assign(g.n(), 0);
    std::vector<int> best_assign(g.n(), 0);
    long long best = -1;
    while (true) {
      ++result.explored;
      long long cost = 0;
      for (auto [u, v] : g.edges())
        if (!gamma.adjacent(assign[u], assign[v])) ++cost;
      if (best < 0 || cost < best) {
        best = cost;
        best_assign = assign;
      }
      int i = g.n() - 1;
      while (i >= 0 && assign[i] == gamma.n() - 1) {
        assign[i] = 0;
        --i;
      }
      if (i < 0) break;
      ++assign[i];
    }
    result.map = VertexMap{g.n(), gamma.n(), best_assign};
    result.violations = best;
    return result;
  }

  if (g.n() > bnb_vertex_cap)
    throw CapError("min_violation_map: " + std::to_string(gamma.n()) + "^" +
                   std::to_string(g.n()) + " maps is beyond brute force and " +
                   std::to_string(g.n()) + " vertices is beyond branch and bound");

  BnbState state(g, gamma);
  state.best = g.edge_count() + 1;
  state.search(0, 0);
  result.brute_forced = false;
  result.explored = state.explored;
  result.violations = state.best;
  result.map = VertexMap{g.n(), gamma.n(), state.best_image};
  return result;
}

WitnessBundle star_witness(const Graph& f, const Graph& h, double eps, std::uint64_t seed,
                           const WitnessOptions& opts) {
  if (!is_two_connected(f))
    throw PreconditionError("star_witness: pattern must be 2-connected");
  int girth_need = std::max(f.n(), h.n());

  HighGirthOptions hg_opts;
  hg_opts.c_override = opts.c_override;
  hg_opts.p_override = opts.edge_probability;
  hg_opts.min_edges = opts.min_edges;
  hg_opts.max_retries = opts.max_retries;
  HighGirthResult hg = random_high_girth_hypergraph(opts.n, f.n(), girth_need, seed, hg_opts);

  WitnessBundle bundle;
  bundle.hypergraph = hg.hypergraph;
  bundle.decorated = decorate_with_f(bundle.hypergraph, f);
  bundle.copies = enumerate_f_copies(bundle.decorated, f);
  bundle.unique_cover = bundle.copies.unique_cover;
  if (!bundle.unique_cover)
    throw Error("star_witness: decorated graph lost the unique-cover property (internal)");
  bundle.star = build_star(bundle.decorated, f, bundle.copies, opts.star_cap);

  auto odd_len = odd_cycle_order(h);
  if (odd_len) {
    bundle.star_odd_girth = odd_girth(bundle.star.graph);
    bool free = !bundle.star_odd_girth || *bundle.star_odd_girth > *odd_len;
    bundle.h_hom_free = free ? TriState::Free : TriState::NotFree;
  } else {
    bundle.h_hom_free = is_hom_free(bundle.star.graph, h, opts.hom_budget);
    bundle.star_odd_girth = odd_girth(bundle.star.graph);
  }

  int n = bundle.decorated.n();
  int m = bundle.star.m;
  auto& rep = bundle.report;
  rep.emplace_back("n", std::to_string(n));
  rep.emplace_back("m", std::to_string(m));
  rep.emplace_back("hypergraph_raw_edges", std::to_string(hg.raw_edges));
  rep.emplace_back("hypergraph_deleted", std::to_string(hg.deleted));
  rep.emplace_back("hypergraph_p", fmt_double(hg.p));
  rep.emplace_back("berge_girth_floor", std::to_string(girth_need));
  rep.emplace_back("star_vertices", std::to_string(bundle.star.graph.n()));
  rep.emplace_back("star_edges", std::to_string(bundle.star.graph.edge_count()));
  rep.emplace_back("unique_cover", bundle.unique_cover ? "yes" : "no");
  rep.emplace_back("h_hom_free", to_string(bundle.h_hom_free));
  rep.emplace_back("star_odd_girth", bundle.star_odd_girth ? std::to_string(*bundle.star_odd_girth)
                                                           : std::string("bipartite"));
  rep.emplace_back("eps", fmt_double(eps));
  rep.emplace_back("eps_threshold", "c * " + std::to_string(m) + " / " + std::to_string(n) +
                                        "^2 = c * " +
                                        fmt_double(static_cast<double>(m) / (static_cast<double>(n) * n)) +
                                        " (c unexported)");
  rep.emplace_back("size_bound", "2^(c * " + std::to_string(m) + " / " + std::to_string(n) +
                                     ") = 2^(c * " +
                                     fmt_double(static_cast<double>(m) / n) + ") (c unexported)");
  return bundle;
}

RandomGirthWitness random_girth_witness(const Graph& f, const Graph& h, double eps,
                                        std::uint64_t seed, int max_retries,
                                        std::uint64_t hom_budget) {
  auto og = odd_girth(h);
  if (!og)
    throw PreconditionError("random_girth_witness: h is bipartite, nothing to witness");
  int g = *og;
  if (!(eps > 0.0 && eps <= 1.0))
    throw PreconditionError("random_girth_witness: eps must be in (0,1]");
  int n = static_cast<int>(std::ceil(1.0 / eps));
  double p = std::pow(static_cast<double>(n), -1.0 + 1.0 / g) / (4.0 * g);

  for (int attempt = 0; attempt < max_retries; ++attempt) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(attempt));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.next_bernoulli(p)) edges.emplace_back(u, v);

    std::vector<char> alive(n, 1);
    int survivors = n;
    while (true) {
      std::vector<int> keep;
      for (int v = 0; v < n; ++v)
        if (alive[v]) keep.push_back(v);
      std::vector<std::pair<int, int>> sub_edges;
      std::vector<int> local(n, -1);
      for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);
      for (auto [u, v] : edges)
        if (alive[u] && alive[v]) sub_edges.emplace_back(local[u], local[v]);
      Graph current(static_cast<int>(keep.size()), sub_edges);
      auto cycle = shortest_cycle(current);
      if (!cycle || static_cast<int>(cycle->size()) > g) break;
      int victim = *std::min_element(cycle->begin(), cycle->end());
      alive[keep[victim]] = 0;
      --survivors;
    }
    if (2 * survivors < n) continue;

    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
      if (alive[v]) keep.push_back(v);
    std::vector<int> local(n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> sub_edges;
    for (auto [u, v] : edges)
      if (alive[u] && alive[v]) sub_edges.emplace_back(local[u], local[v]);

    RandomGirthWitness witness;
    witness.graph = Graph(survivors, std::move(sub_edges));
    auto cycle = shortest_cycle(witness.graph);
    if (cycle && static_cast<int>(cycle->size()) <= g)
      throw Error("random_girth_witness: girth check failed after deletion");
    witness.girth_floor = g;
    witness.attempts = attempt + 1;
    if (h.n() <= 12) witness.h_hom_free = is_hom_free(witness.graph, h, hom_budget);
    witness.report.emplace_back("n_initial", std::to_string(n));
    witness.report.emplace_back("n_final", std::to_string(survivors));
    witness.report.emplace_back("p", fmt_double(p));
    witness.report.emplace_back("girth_floor", std::to_string(g));
    witness.report.emplace_back("h_hom_free", to_string(witness.h_hom_free));
    witness.report.emplace_back("edges", std::to_string(witness.graph.edge_count()));
    witness.report.emplace_back("pattern_edges", std::to_string(f.edge_count()));
    return witness;
  }
  throw CapError("random_girth_witness: retries exhausted without keeping n/2 vertices");
}

}  // namespace homforge
