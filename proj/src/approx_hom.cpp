#include "homforge/approx_hom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "homforge/rng.hpp"

namespace homforge {

namespace {

std::string fmt_double(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

long long int_ceil(double x) {
  long long c = static_cast<long long>(std::ceil(x));
  while (static_cast<double>(c - 1) >= x) --c;
  while (static_cast<double>(c) < x) ++c;
  return c;
}

}  // namespace

DensityResult hom_density(const Graph& h, const WeightedGraph& w, const DensityOptions& opts) {
  DensityResult result;
  int hv = h.n();
  int n = w.n();
  if (hv == 0) {
    result.value = 1.0;
    return result;
  }
  if (n == 0) throw PreconditionError("hom_density: empty weighted graph");

  double tuples = std::pow(static_cast<double>(n), hv);
  if (tuples <= static_cast<double>(opts.exact_cap)) {
    // Exact average over all |V|^|H| assignments, with zero-product pruning.
    long double total = 0.0L;
    std::vector<int> assign(hv, 0);
    std::vector<std::vector<int>> earlier(hv);
    for (auto [a, b] : h.edges()) {
      if (a > b) std::swap(a, b);
      earlier[b].push_back(a);
    }
    std::vector<long double> partial(hv + 1, 1.0L);
    int depth = 0;
    while (depth >= 0) {
      if (assign[depth] >= n) {
        assign[depth] = 0;
        --depth;
        if (depth >= 0) ++assign[depth];
        continue;
      }
      long double prod = partial[depth];
      for (int a : earlier[depth]) prod *= w.weight(assign[a], assign[depth]);
      if (prod == 0.0L) {
        // every completion contributes zero
        ++assign[depth];
        continue;
      }
      if (depth + 1 == hv) {
        total += prod;
        ++assign[depth];
      } else {
        partial[depth + 1] = prod;
        ++depth;
      }
    }
    long double denom = 1.0L;
    for (int i = 0; i < hv; ++i) denom *= static_cast<long double>(n);
    result.value = static_cast<double>(total / denom);
    result.exact = true;
    return result;
  }

  if (!opts.allow_monte_carlo)
    throw CapError("hom_density: |V|^|H| = " + fmt_double(tuples) +
                   " exceeds exact cap; enable Monte Carlo mode");
  Rng rng(opts.seed);
  long double sum = 0.0L, sumsq = 0.0L;
  std::vector<int> assign(hv);
  for (std::uint64_t s = 0; s < opts.samples; ++s) {
    for (int i = 0; i < hv; ++i) assign[i] = static_cast<int>(rng.next_below(n));
    long double prod = 1.0L;
    for (auto [a, b] : h.edges()) prod *= w.weight(assign[a], assign[b]);
    sum += prod;
    sumsq += prod * prod;
  }
  double mean = static_cast<double>(sum / opts.samples);
  double var = static_cast<double>(sumsq / opts.samples) - mean * mean;
  result.value = mean;
  result.exact = false;
  result.samples = opts.samples;
  result.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(opts.samples));
  return result;
}

EquiPartition equitable_by_id(int n, int M) {
  if (M < 1 || M > std::max(n, 1))
    throw PreconditionError("equitable partition: need 1 <= M <= n");
  EquiPartition p;
  p.parts.assign(M, {});
  p.part_of.assign(n, 0);
  int q = n / M, r = n % M;
  int v = 0;
  for (int i = 0; i < M; ++i) {
    int size = q + (i < r ? 1 : 0);
    for (int j = 0; j < size; ++j) {
      p.parts[i].push_back(v);
      p.part_of[v] = i;
      ++v;
    }
  }
  return p;
}

WeightedGraph reduced_graph(const Graph& g, const EquiPartition& p) {
  int M = p.count();
  if (static_cast<int>(p.part_of.size()) != g.n())
    throw PreconditionError("reduced_graph: partition does not cover the graph");
  std::vector<long long> pair_edges(static_cast<std::size_t>(M) * M, 0);
  for (auto [u, v] : g.edges()) {
    int i = p.part_of[u], j = p.part_of[v];
    pair_edges[static_cast<std::size_t>(i) * M + j] += 1;
    pair_edges[static_cast<std::size_t>(j) * M + i] += 1;
  }
  WeightedGraph w(M);
  for (int i = 0; i < M; ++i)
    for (int j = i; j < M; ++j) {
      double denom = static_cast<double>(p.parts[i].size()) * p.parts[j].size();
      double d = denom == 0.0 ? 0.0 : pair_edges[static_cast<std::size_t>(i) * M + j] / denom;
      w.set_weight(i, j, d);
    }
  return w;
}

namespace {

// Signed discrepancy matrix B = adjacency - reduced densities, flattened.
std::vector<double> discrepancy_matrix(const Graph& g, const EquiPartition& p) {
  WeightedGraph r = reduced_graph(g, p);
  int n = g.n();
  std::vector<double> b(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      b[static_cast<std::size_t>(u) * n + v] =
          (g.adjacent(u, v) ? 1.0 : 0.0) - r.weight(p.part_of[u], p.part_of[v]);
  return b;
}

// Best |disc(S,T)| for fixed S with T chosen optimally per sign; returns the
// magnitude and fills T-membership.
double best_t_for_s(const std::vector<double>& rowsum, std::vector<char>& t_set) {
  double pos = 0.0, neg = 0.0;
  for (double r : rowsum) {
    if (r > 0) pos += r;
    if (r < 0) neg += r;
  }
  if (pos >= -neg) {
    for (std::size_t v = 0; v < rowsum.size(); ++v) t_set[v] = rowsum[v] > 0 ? 1 : 0;
    return pos;
  }
  for (std::size_t v = 0; v < rowsum.size(); ++v) t_set[v] = rowsum[v] < 0 ? 1 : 0;
  return -neg;
}

struct CutWitness {
  std::vector<char> s, t;
  double value = 0.0;
};

CutWitness max_discrepancy_cut(const Graph& g, const EquiPartition& p, const FkOptions& opts,
                               std::uint64_t round) {
  int n = g.n();
  std::vector<double> b = discrepancy_matrix(g, p);
  CutWitness best;
  best.s.assign(n, 0);
  best.t.assign(n, 0);
  std::vector<double> rowsum(n, 0.0);
  std::vector<char> t_set(n, 0);
  std::vector<char> s_set(n, 0);

  auto consider = [&]() {
    double value = best_t_for_s(rowsum, t_set);
    if (value > best.value) {
      best.value = value;
      best.s = s_set;
      best.t = t_set;
    }
  };
  auto flip = [&](int v) {
    double sign = s_set[v] ? -1.0 : 1.0;
    s_set[v] = !s_set[v];
    const double* row = &b[static_cast<std::size_t>(v) * n];
    for (int u = 0; u < n; ++u) rowsum[u] += sign * row[u];
  };

  if (n <= opts.exhaustive_limit) {
    // Gray-code walk over all S; T is optimal per sign.
    consider();
    std::uint64_t total = 1ULL << n;
    for (std::uint64_t i = 1; i < total; ++i) {
      int v = __builtin_ctzll(i);
      flip(v);
      consider();
    }
    return best;
  }

  Rng rng = Rng::stream(opts.seed, round);
  for (int restart = 0; restart < opts.restarts; ++restart) {
    std::fill(s_set.begin(), s_set.end(), 0);
    std::fill(rowsum.begin(), rowsum.end(), 0.0);
    for (int v = 0; v < n; ++v)
      if (rng.next_bernoulli(0.5)) flip(v);
    bool improved = true;
    while (improved) {
      improved = false;
      double current = best_t_for_s(rowsum, t_set);
      for (int v = 0; v < n; ++v) {
        flip(v);
        double candidate = best_t_for_s(rowsum, t_set);
        if (candidate > current + 1e-12) {
          current = candidate;
          improved = true;
        } else {
          flip(v);
        }
      }
    }
    consider();
  }
  return best;
}

EquiPartition refine_rebalance(const EquiPartition& p, const std::vector<char>& s,
                               const std::vector<char>& t, int M) {
  int n = static_cast<int>(p.part_of.size());
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    auto key = [&](int v) {
      return std::tuple<int, int, int, int>(p.part_of[v], s[v] ? 0 : 1, t[v] ? 0 : 1, v);
    };
    return key(a) < key(b);
  });
  EquiPartition next;
  next.parts.assign(M, {});
  next.part_of.assign(n, 0);
  int q = n / M, r = n % M;
  int pos = 0;
  for (int i = 0; i < M; ++i) {
    int size = q + (i < r ? 1 : 0);
    for (int j = 0; j < size; ++j) {
      next.parts[i].push_back(order[pos]);
      next.part_of[order[pos]] = i;
      ++pos;
    }
  }
  for (auto& part : next.parts) std::sort(part.begin(), part.end());
  return next;
}

}  // namespace

FkResult fk_partition(const Graph& g, int M, const FkOptions& opts) {
  if (M < 1 || M > std::max(g.n(), 1))
    throw PreconditionError("fk_partition: need 1 <= M <= n");
  FkResult result;
  result.partition = equitable_by_id(g.n(), M);
  if (M == 1 || g.n() <= 1) {
    result.converged = true;
    return result;
  }
  double gamma = 1.0 / std::sqrt(std::log2(static_cast<double>(M)));
  int cap = opts.iteration_cap > 0
                ? opts.iteration_cap
                : static_cast<int>(std::ceil(std::log2(static_cast<double>(M)))) + 1;
  double threshold = gamma * static_cast<double>(g.n()) * g.n();
  for (int round = 0; round < cap; ++round) {
    CutWitness cut = max_discrepancy_cut(g, result.partition, opts, round);
    result.final_discrepancy = cut.value;
    result.rounds = round + 1;
    if (cut.value <= threshold) {
      result.converged = true;
      return result;
    }
    result.partition = refine_rebalance(result.partition, cut.s, cut.t, M);
  }
  CutWitness cut = max_discrepancy_cut(g, result.partition, opts, cap);
  result.final_discrepancy = cut.value;
  result.converged = cut.value <= threshold;
  return result;
}

namespace {

std::vector<std::pair<int, int>> image_edges(const Graph& f, const VertexMap& hom) {
  std::set<std::pair<int, int>> edges;
  for (auto [a, b] : f.edges()) {
    int u = hom.image[a], v = hom.image[b];
    if (u > v) std::swap(u, v);
    edges.emplace(u, v);
  }
  return {edges.begin(), edges.end()};
}

void exact_max_subgraph(const Graph& base_vertices, const Graph& f,
                        std::vector<std::pair<int, int>> current, std::set<std::vector<std::pair<int, int>>>& seen,
                        std::vector<std::pair<int, int>>& best) {
  if (current.size() <= best.size()) return;
  if (!seen.insert(current).second) return;
  Graph candidate(base_vertices.n(), current);
  HomSearch hom = find_homomorphism(f, candidate);
  if (!hom.definitive) throw CapError("max_hom_free_subgraph: search budget exhausted");
  if (!hom.map) {
    best = current;
    return;
  }
  for (auto edge : image_edges(f, *hom.map)) {
    std::vector<std::pair<int, int>> next;
    next.reserve(current.size() - 1);
    for (auto e : current)
      if (e != edge) next.push_back(e);
    exact_max_subgraph(base_vertices, f, std::move(next), seen, best);
  }
}

}  // namespace

Graph max_hom_free_subgraph(const Graph& gamma0, const Graph& f, SubgraphMode mode) {
  if (f.edge_count() == 0)
    throw PreconditionError("max_hom_free_subgraph: pattern has no edges");
  if (mode == SubgraphMode::Exact) {
    if (gamma0.edge_count() > 20)
      throw CapError("max_hom_free_subgraph: exact mode limited to 20 edges, got " +
                     std::to_string(gamma0.edge_count()));
    std::vector<std::pair<int, int>> best;  // the empty subgraph is always hom-free here
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<std::pair<int, int>> all = gamma0.edges();
    // kick off with best = empty so pruning has a floor
    exact_max_subgraph(gamma0, f, all, seen, best);
    return Graph(gamma0.n(), best);
  }

  std::vector<std::pair<int, int>> edges = gamma0.edges();
  while (true) {
    Graph current(gamma0.n(), edges);
    HomSearch hom = find_homomorphism(f, current);
    if (!hom.definitive) throw CapError("max_hom_free_subgraph: search budget exhausted");
    if (!hom.map) return current;
    std::map<std::pair<int, int>, int> multiplicity;
    for (auto [a, b] : f.edges()) {
      int u = hom.map->image[a], v = hom.map->image[b];
      if (u > v) std::swap(u, v);
      multiplicity[{u, v}] += 1;
    }
    std::pair<int, int> victim{-1, -1};
    int best_mult = -1;
    for (const auto& [edge, mult] : multiplicity)
      if (mult > best_mult) {
        best_mult = mult;
        victim = edge;
      }
    edges.erase(std::find(edges.begin(), edges.end(), victim));
  }
}

PulloutDecomposition pullout(const Graph& g, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw PreconditionError("pullout: eps must be in (0,1]");
  PulloutDecomposition d;
  int n = g.n();
  d.set_size = n == 0 ? 0 : static_cast<int>(int_ceil(eps * n / 3.0));
  std::vector<char> pulled(n, 0);  // inside some S_i

  auto edge_counts = [&]() {
    long long incident = 0, inside = 0;
    for (auto [u, v] : g.edges()) {
      bool xu = !pulled[u], xv = !pulled[v];
      if (xu || xv) ++incident;
      if (xu && xv) ++inside;
    }
    return std::pair<long long, long long>(incident, inside);
  };

  while (true) {
    auto [incident, inside] = edge_counts();
    d.incident_edges = incident;
    d.inside_edges = inside;
    double half = eps * static_cast<double>(n) * n / 2.0;
    if (static_cast<double>(incident) <= half) break;

    double sixth = eps * static_cast<double>(n) * n / 6.0;
    bool from_inside = static_cast<double>(inside) >= sixth;
    int best = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (from_inside ? pulled[v] : !pulled[v]) continue;
      int deg = 0;
      for (int w : g.neighbors(v))
        if (!pulled[w]) ++deg;
      if (deg > best_deg) {
        best_deg = deg;
        best = v;
      }
    }
    if (best < 0 || best_deg < d.set_size)
      throw Error("pullout: no eligible center found (internal)");
    std::vector<int> chosen;
    for (int w : g.neighbors(best)) {
      if (!pulled[w]) {
        chosen.push_back(w);
        if (static_cast<int>(chosen.size()) == d.set_size) break;
      }
    }
    for (int w : chosen) pulled[w] = 1;
    d.centers.push_back(best);
    d.sets.push_back(std::move(chosen));
  }

  for (int v = 0; v < n; ++v)
    if (!pulled[v]) d.leftover.push_back(v);

  // Re-verify the three clauses before returning.
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < d.sets.size(); ++i) {
    if (static_cast<int>(d.sets[i].size()) != d.set_size)
      throw Error("pullout: set size clause failed");
    for (int w : d.sets[i]) {
      if (seen[w]) throw Error("pullout: sets are not disjoint");
      seen[w] = 1;
      if (!g.adjacent(d.centers[i], w)) throw Error("pullout: center adjacency clause failed");
    }
  }
  long long incident = 0;
  for (auto [u, v] : g.edges())
    if (!pulled[u] || !pulled[v]) ++incident;
  if (static_cast<double>(incident) > eps * static_cast<double>(n) * n / 2.0)
    throw Error("pullout: leftover edge bound clause failed");
  d.incident_edges = incident;
  return d;
}

namespace {

void fill_verification(ApproxHomReport& report, const Graph& g, const Graph& target,
                       const VertexMap& map, double eps, const Graph& f, std::uint64_t budget) {
  report.violations = count_violations(map, g, target);
  double threshold = eps * static_cast<double>(g.n()) * g.n();
  report.within_threshold = static_cast<double>(report.violations) <= threshold;
  report.target_hom_free = is_hom_free(target, f, budget);
  report.lines.emplace_back("violations", std::to_string(report.violations));
  report.lines.emplace_back("threshold", fmt_double(threshold));
  report.lines.emplace_back("within_threshold", report.within_threshold ? "yes" : "no");
  report.lines.emplace_back("target_hom_free", to_string(report.target_hom_free));
}

}  // namespace

CompressionResult fk_pipeline(const Graph& g, const Graph& f, const Graph& h, double eps,
                              std::optional<int> M_override, const FkPipelineOptions& opts) {
  if (!(eps > 0.0 && eps <= 1.0)) throw PreconditionError("fk pipeline: eps must be in (0,1]");
  if (g.n() == 0) throw PreconditionError("fk pipeline: empty input graph");
  TriState h_free = is_hom_free(g, h, opts.hom_budget);
  if (h_free == TriState::NotFree)
    throw PreconditionError("fk pipeline: input graph is not hom-free of the forbidden pattern");

  int M = M_override.value_or(g.n());
  if (M < 1 || M > g.n()) throw PreconditionError("fk pipeline: M must be in [1, n]");

  FkResult fk = fk_partition(g, M, opts.fk);
  WeightedGraph reduced = reduced_graph(g, fk.partition);
  std::vector<std::pair<int, int>> threshold_edges;
  for (int i = 0; i < M; ++i)
    for (int j = i + 1; j < M; ++j)
      if (reduced.weight(i, j) >= eps / 2.0) threshold_edges.emplace_back(i, j);
  Graph gamma0(M, std::move(threshold_edges));

  SubgraphMode mode = gamma0.edge_count() <= 20 ? SubgraphMode::Exact : SubgraphMode::Greedy;
  Graph target = max_hom_free_subgraph(gamma0, f, mode);

  CompressionResult result;
  result.map = VertexMap{g.n(), M, fk.partition.part_of};
  result.target = std::move(target);

  long long within_part = 0, low_density = 0, deleted = 0;
  for (auto [u, v] : g.edges()) {
    int i = fk.partition.part_of[u], j = fk.partition.part_of[v];
    if (i == j)
      ++within_part;
    else if (!gamma0.adjacent(i, j))
      ++low_density;
    else if (!result.target.adjacent(i, j))
      ++deleted;
  }

  fill_verification(result.report, g, result.target, result.map, eps, f, opts.hom_budget);
  if (within_part + low_density + deleted != result.report.violations)
    throw Error("fk pipeline: violation decomposition does not sum to the total");

  auto& lines = result.report.lines;
  lines.emplace_back("route", "fk");
  lines.emplace_back("M", std::to_string(M));
  lines.emplace_back("input_hom_free", to_string(h_free));
  lines.emplace_back("fk_converged", fk.converged ? "yes" : "no");
  lines.emplace_back("fk_rounds", std::to_string(fk.rounds));
  lines.emplace_back("fk_final_discrepancy", fmt_double(fk.final_discrepancy));
  lines.emplace_back("violations_within_part", std::to_string(within_part));
  lines.emplace_back("violations_low_density", std::to_string(low_density));
  lines.emplace_back("violations_deleted_pair", std::to_string(deleted));
  lines.emplace_back("subgraph_mode", mode == SubgraphMode::Exact ? "exact" : "greedy");
  if (opts.removal_delta) {
    double K = 5.0 * f.edge_count() * std::pow(2.0 / eps, h.edge_count()) / *opts.removal_delta;
    lines.emplace_back("K_removal", fmt_double(K));
  }
  lines.emplace_back("K_formula", "5 e(H) (2/eps)^{e(H)} / delta(eps/2), delta supplied by caller");
  return result;
}

CompressionResult pullout_pipeline(const Graph& g, const Graph& f, double eps,
                                   std::uint64_t hom_budget) {
  if (!(eps > 0.0 && eps <= 1.0)) throw PreconditionError("pullout pipeline: eps must be in (0,1]");
  Graph subdivided = two_subdivision(f);
  // For a triangle pattern the subdivision test is exactly an odd-girth bound.
  if (f.n() == 3 && f.edge_count() == 3) {
    auto og = odd_girth(g);
    if (og && *og <= 9)
      throw PreconditionError(
          "pullout pipeline: graph contains an odd cycle of length " + std::to_string(*og) +
          " <= 9, so it is not hom-free of the subdivided pattern");
  } else {
    TriState free = is_hom_free(g, subdivided, hom_budget);
    if (free == TriState::NotFree)
      throw PreconditionError("pullout pipeline: graph is not hom-free of the subdivided pattern");
    if (free == TriState::Unknown)
      throw CapError("pullout pipeline: subdivision hom-freeness undecided within budget");
  }

  PulloutDecomposition d = pullout(g, eps);
  int k = static_cast<int>(d.sets.size());
  std::vector<int> set_of(g.n(), -1);
  for (int i = 0; i < k; ++i)
    for (int w : d.sets[i]) set_of[w] = i;

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool any = false;
      for (int w : d.sets[i]) {
        for (int x : g.neighbors(w))
          if (set_of[x] == j) {
            any = true;
            break;
          }
        if (any) break;
      }
      if (any) edges.emplace_back(i, j);
    }
  Graph target(k + 1, std::move(edges));  // vertex k is the isolated leftover image

  CompressionResult result;
  result.target = std::move(target);
  result.map.source_n = g.n();
  result.map.target_n = k + 1;
  result.map.image.assign(g.n(), k);
  for (int v = 0; v < g.n(); ++v)
    if (set_of[v] >= 0) result.map.image[v] = set_of[v];

  long long inside_sets = 0;
  for (auto [u, v] : g.edges())
    if (set_of[u] >= 0 && set_of[u] == set_of[v]) ++inside_sets;

  fill_verification(result.report, g, result.target, result.map, eps, f, hom_budget);
  if (result.report.violations != d.incident_edges + inside_sets)
    throw Error("pullout pipeline: violation decomposition does not sum to the total");
  if (!result.report.within_threshold)
    throw Error("pullout pipeline: violations exceed eps*n^2 (internal)");
  if (result.report.target_hom_free != TriState::Free)
    throw Error("pullout pipeline: target is not hom-free (internal)");

  auto& lines = result.report.lines;
  lines.emplace_back("route", "pullout");
  lines.emplace_back("k", std::to_string(k));
  lines.emplace_back("set_size", std::to_string(d.set_size));
  lines.emplace_back("target_size", std::to_string(k + 1));
  lines.emplace_back("size_bound", fmt_double(1.0 + 3.0 / eps));
  lines.emplace_back("violations_incident_leftover", std::to_string(d.incident_edges));
  lines.emplace_back("violations_inside_sets", std::to_string(inside_sets));
  return result;
}

std::vector<CountingCheck> fk_counting_check(const Graph& g, const EquiPartition& p,
                                             const std::vector<Graph>& family) {
  WeightedGraph reduced = reduced_graph(g, p);
  WeightedGraph full = as_weighted(g);
  int M = p.count();
  double bound_scale = M >= 2 ? 1.0 / std::sqrt(std::log2(static_cast<double>(M))) : 1e18;
  std::vector<CountingCheck> checks;
  for (const Graph& h : family) {
    CountingCheck check;
    check.density_g = hom_density(h, full).value;
    check.density_reduced = hom_density(h, reduced).value;
    check.bound = 4.0 * h.edge_count() * bound_scale;
    check.holds = std::abs(check.density_g - check.density_reduced) <= check.bound + 1e-12;
    checks.push_back(check);
  }
  return checks;
}

VerifyReport verify_approx_hom(const Graph& g, const Graph& gamma, const VertexMap& map,
                               double eps, const Graph& f, std::uint64_t budget) {
  VerifyReport report;
  report.violations = count_violations(map, g, gamma);
  report.threshold = eps * static_cast<double>(g.n()) * g.n();
  report.pass = static_cast<double>(report.violations) <= report.threshold;
  report.target_hom_free = is_hom_free(gamma, f, budget);
  return report;
}

}  // namespace homforge
