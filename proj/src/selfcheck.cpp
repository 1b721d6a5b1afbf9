#include "homforge/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "homforge/approx_hom.hpp"
#include "homforge/graph_core.hpp"
#include "homforge/hypergraph.hpp"
#include "homforge/lower_bound.hpp"
#include "homforge/mycielski.hpp"
#include "homforge/rng.hpp"
#include "homforge/star.hpp"
#include "homforge/threshold.hpp"

namespace homforge {

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void note(const std::string& msg) {
    if (!detail.empty()) detail += "; ";
    detail += msg;
  }
  void require(bool cond, const std::string& msg) {
    if (!cond) {
      ok = false;
      note("FAILED: " + msg);
    }
  }
};

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

Graph bowtie() {
  return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

// exhaustive existence oracle over all dst.n^src.n maps
bool exhaustive_hom_exists(const Graph& src, const Graph& dst) {
  if (src.n() == 0) return true;
  if (dst.n() == 0) return false;
  std::vector<int> assign(src.n(), 0);
  while (true) {
    bool good = true;
    for (auto [u, v] : src.edges())
      if (!dst.adjacent(assign[u], assign[v])) {
        good = false;
        break;
      }
    if (good) return true;
    int i = src.n() - 1;
    while (i >= 0 && assign[i] == dst.n() - 1) {
      assign[i] = 0;
      --i;
    }
    if (i < 0) return false;
    ++assign[i];
  }
}

Check c_mycielskian_figure() {
  Check c;
  MycielskiGraph m = t_fold_mycielskian(make_cycle(7), 2);
  c.require(m.graph.n() == 22, "expected 22 vertices, got " + std::to_string(m.graph.n()));
  auto og = odd_girth(m.graph);
  c.require(og && *og == 7, "expected odd girth 7");
  c.note("n=22, odd girth 7");
  return c;
}

Check c_mycielskian_odd_girth() {
  Check c;
  Rng rng(2024001);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 3 + static_cast<int>(rng.next_below(6));
    double p = 0.15 + 0.1 * rng.next_below(6);
    Graph gamma = random_graph(n, p, rng);
    auto og = odd_girth(gamma);
    for (int t = 1; t <= 3; ++t) {
      if (og && *og < 2 * t + 3) continue;
      ++checked;
      auto mg = t_fold_mycielskian(gamma, t);
      auto og2 = odd_girth(mg.graph);
      c.require(!og2 || *og2 >= 2 * t + 3,
                "odd girth dropped below " + std::to_string(2 * t + 3) + " at instance " +
                    std::to_string(i) + ", t=" + std::to_string(t));
      if (og && og2) c.require(*og2 >= std::min(*og, 2 * t + 3), "sanity");
    }
  }
  c.note("checked " + std::to_string(checked) + " graph/t pairs");
  return c;
}

Check c_mindeg_certificate() {
  Check c;
  Graph g = blowup(make_cycle(9), std::vector<int>(9, 10));
  HomCertificate cert = mindeg_pipeline(g, 1);
  c.require(count_violations(cert.map, g, cert.target) == 0, "map has violations");
  c.require(is_hom_free(cert.target, make_complete(3)) == TriState::Free,
            "target is not triangle-free");
  c.require(cert.k <= 4, "family size k=" + std::to_string(cert.k) + " exceeds 4");
  long long expected = (1LL << (2 * cert.k)) - 1;
  c.require(cert.target.n() == expected, "target size is not ((t+1)^(2k)-1)/t");
  c.require(cert.target.n() <= 255 && 255 <= 512, "size bound chain broken");
  c.note("k=" + std::to_string(cert.k) + ", |target|=" + std::to_string(cert.target.n()));
  return c;
}

Check c_domination_certificate() {
  Check c;
  Graph g = make_cycle(7);
  HomCertificate cert = domination_pipeline(g, 1);
  c.require(cert.k == 3, "domination number of the 7-cycle should be 3");
  c.require(count_violations(cert.map, g, cert.target) == 0, "map has violations");
  c.require(is_hom_free(cert.target, make_complete(3)) == TriState::Free,
            "target is not triangle-free");
  c.require(cert.target.n() <= 11, "target exceeds 3*2^2-1 = 11 vertices");
  c.note("|target|=" + std::to_string(cert.target.n()));
  return c;
}

Check c_pullout_clauses() {
  Check c;
  Rng rng(2024005);
  for (int i = 0; i < 1000 && c.ok; ++i) {
    int n = 1 + static_cast<int>(rng.next_below(60));
    double density = 0.05 + 0.9 * rng.next_unit();
    Graph g = random_graph(n, density, rng);
    double eps = 0.05 + 0.9 * rng.next_unit();
    PulloutDecomposition d = pullout(g, eps);
    // d.set_size must be the ceiling of eps*n/3
    c.require(static_cast<double>(d.set_size) >= eps * n / 3.0 &&
                  static_cast<double>(d.set_size - 1) < eps * n / 3.0,
              "set size is not ceil(eps*n/3) at instance " + std::to_string(i));
    std::vector<char> seen(n, 0);
    for (std::size_t j = 0; j < d.sets.size(); ++j) {
      c.require(static_cast<int>(d.sets[j].size()) == d.set_size,
                "set size clause at instance " + std::to_string(i));
      for (int w : d.sets[j]) {
        c.require(!seen[w], "sets overlap at instance " + std::to_string(i));
        seen[w] = 1;
        c.require(g.adjacent(d.centers[j], w), "center adjacency at instance " + std::to_string(i));
      }
    }
    long long incident = 0;
    for (auto [u, v] : g.edges())
      if (!seen[u] || !seen[v]) ++incident;
    c.require(static_cast<double>(incident) <= eps * static_cast<double>(n) * n / 2.0,
              "leftover edge bound at instance " + std::to_string(i));
    c.require(static_cast<double>(d.sets.size()) <= 3.0 / eps + 1e-9,
              "k exceeds 3/eps at instance " + std::to_string(i));
  }
  c.note("1000 random (g, eps) instances");
  return c;
}

Check c_pullout_compression() {
  Check c;
  Graph g = blowup(make_cycle(11), std::vector<int>(11, 5));
  CompressionResult r = pullout_pipeline(g, make_complete(3), 0.2);
  c.require(is_hom_free(r.target, make_complete(3)) == TriState::Free,
            "target is not triangle-free");
  c.require(r.target.n() <= 16, "target exceeds 1 + 3/eps = 16 vertices");
  c.require(static_cast<double>(r.report.violations) <= 0.2 * 55.0 * 55.0,
            "violations exceed eps*n^2");
  c.note("|target|=" + std::to_string(r.target.n()) + ", violations=" +
         std::to_string(r.report.violations));
  return c;
}

Check c_fk_compression() {
  Check c;
  Graph g = blowup(make_cycle(5), std::vector<int>(5, 4));
  Graph f = make_complete(3);
  Graph h = make_cycle(5);
  for (int M : {2, 5, 10}) {
    CompressionResult r = fk_pipeline(g, f, h, 0.2, M);
    c.require(r.report.target_hom_free == TriState::Free,
              "target not verified hom-free at M=" + std::to_string(M));
    long long within = -1, low = -1, deleted = -1;
    for (const auto& [key, value] : r.report.lines) {
      if (key == "violations_within_part") within = std::stoll(value);
      if (key == "violations_low_density") low = std::stoll(value);
      if (key == "violations_deleted_pair") deleted = std::stoll(value);
    }
    c.require(within >= 0 && low >= 0 && deleted >= 0, "missing decomposition lines");
    c.require(within + low + deleted == r.report.violations,
              "decomposition does not sum at M=" + std::to_string(M));
    if (M == 5) {
      c.require(r.report.violations == 0, "balanced blowup at M=5 should have zero violations");
      c.note("M=5 gives zero violations");
    }
  }
  return c;
}

Check c_star_figures() {
  Check c;
  {
    Graph k3 = make_complete(3);
    CopyEnumeration copies = enumerate_f_copies(k3, k3);
    c.require(copies.copies.size() == 1 && copies.unique_cover, "triangle self-cover");
    StarGraph star = build_star(k3, k3, copies);
    c.require(star.graph.n() == 6 && star.graph.edge_count() == 3, "expected 6 vertices, 3 edges");
    bool matching = true;
    for (int v = 0; v < 6; ++v)
      if (star.graph.degree(v) != 1) matching = false;
    c.require(matching, "triangle star is not a perfect matching");
    star_copy_audit(star, k3, k3, copies);
  }
  {
    Graph g = bowtie();
    Graph f = make_complete(3);
    CopyEnumeration copies = enumerate_f_copies(g, f);
    c.require(copies.copies.size() == 2 && copies.unique_cover, "bowtie has 2 triangle copies");
    StarGraph star = build_star(g, f, copies);
    c.require(star.graph.n() == 20, "bowtie star should have 20 vertices");
    c.require(star.graph.edge_count() == 24, "bowtie star should have 24 edges");
    star_copy_audit(star, g, f, copies);
    c.note("matching 6/3 and bowtie 20/24 audits pass");
  }
  return c;
}

Check c_triangle_forest_star() {
  Check c;
  Graph f = make_complete(3);
  Rng rng(2024009);
  for (int i = 0; i < 50 && c.ok; ++i) {
    int copies = 1 + static_cast<int>(rng.next_below(5));
    FForest forest = make_f_forest(f, random_forest_plan(f, copies, rng.next()));
    auto og = star_odd_girth(forest, f);
    c.require(!og || *og >= 9,
              "triangle-forest star has odd girth " + std::to_string(og ? *og : -1) +
                  " at instance " + std::to_string(i));
  }
  c.note("50 random triangle forests with <= 5 copies");
  return c;
}

Check c_star_witness() {
  Check c;
  WitnessOptions opts;
  opts.n = 24;
  opts.edge_probability = 0.012;
  opts.min_edges = 3;
  {
    WitnessBundle b = star_witness(make_complete(3), make_cycle(5), 0.01, 97, opts);
    c.require(b.unique_cover, "unique cover failed for the 5-cycle witness");
    c.require(b.h_hom_free == TriState::Free, "5-cycle maps into the star graph");
    c.require(!b.star_odd_girth || *b.star_odd_girth >= 7, "odd girth below 7");
    c.note("C5 witness: m=" + std::to_string(b.star.m) + ", odd girth " +
           (b.star_odd_girth ? std::to_string(*b.star_odd_girth) : std::string("bipartite")));
  }
  {
    WitnessBundle b = star_witness(make_complete(3), make_cycle(7), 0.01, 131, opts);
    c.require(b.unique_cover, "unique cover failed for the 7-cycle witness");
    c.require(b.h_hom_free == TriState::Free, "7-cycle maps into the star graph");
    c.require(!b.star_odd_girth || *b.star_odd_girth >= 9, "odd girth below 9");
    c.note("C7 witness: m=" + std::to_string(b.star.m) + ", odd girth " +
           (b.star_odd_girth ? std::to_string(*b.star_odd_girth) : std::string("bipartite")));
  }
  return c;
}

Check c_entropy_identities() {
  Check c;
  Graph f = make_complete(3);
  Rng rng(2024011);
  for (int i = 0; i < 20 && c.ok; ++i) {
    int copies = 3 + static_cast<int>(rng.next_below(3));
    FForest forest = make_f_forest(f, random_forest_plan(f, copies, rng.next()));
    CopyEnumeration enumeration = enumerate_f_copies(forest.graph, f);
    StarGraph star = build_star(forest.graph, f, enumeration);
    int target_n = 4 + static_cast<int>(rng.next_below(4));
    VertexMap phi{star.graph.n(), target_n, {}};
    phi.image.resize(star.graph.n());
    for (int v = 0; v < star.graph.n(); ++v)
      phi.image[v] = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(target_n)));
    EntropyReport report = entropy_diagnostics(star, phi, {}, &enumeration);
    for (const auto& pv : report.vertices) {
      c.require(pv.i_xy_bits == pv.h_y_bits, "reported I(x;y) differs from H(y)");
      c.require(std::abs(pv.i_xy_joint_route - pv.h_y_bits) <= 1e-9,
                "joint-entropy route disagrees with H(y)");
    }
    c.require(report.max_superadditivity_excess <= 1e-9,
              "coordinate informations exceed the total at instance " + std::to_string(i));
  }
  double worst = 0.0;
  for (int i = 0; i <= 1'000'000; ++i) {
    double x = static_cast<double>(i) / 1'000'000.0;
    worst = std::max(worst, std::abs(binary_entropy(h_inverse(x)) - x));
  }
  c.require(worst <= 1e-12, "binary entropy inverse error " + fmt(worst));
  c.note("20 star maps, inverse-entropy worst error " + fmt(worst));
  return c;
}

Check c_hypergraph_appendix() {
  Check c;
  // exhaustive equivalence: peelability iff no Berge cycle
  std::vector<std::vector<int>> candidates;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) candidates.push_back({a, b});
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int d = b + 1; d < 5; ++d) candidates.push_back({a, b, d});
  int total = static_cast<int>(candidates.size());
  long long tested = 0;
  std::function<void(int, std::vector<int>&)> walk = [&](int start, std::vector<int>& picked) {
    if (!c.ok) return;
    if (picked.size() <= 4 && !picked.empty()) {
      Hypergraph h;
      h.n = 5;
      h.uniformity = 0;  // mixed edge sizes, uniformity unused here
      for (int e : picked) h.edges.push_back(candidates[e]);
      ++tested;
      bool forest = is_hyperforest(h).is_forest;
      bool acyclic = !shortest_berge_cycle(h, 4).has_value();
      c.require(forest == acyclic, "peel/cycle mismatch on instance " + std::to_string(tested));
    }
    if (picked.size() == 4) return;
    for (int e = start; e < total; ++e) {
      picked.push_back(e);
      walk(e + 1, picked);
      picked.pop_back();
    }
  };
  std::vector<int> picked;
  walk(0, picked);
  c.note(std::to_string(tested) + " hypergraphs checked exhaustively");

  // seeded generator sweep: hard girth check, logged edge scaling
  std::vector<int> edge_counts;
  HighGirthOptions opts;
  opts.c_override = 3.7;
  for (int s = 0; s < 20 && c.ok; ++s) {
    HighGirthResult r = random_high_girth_hypergraph(60, 3, 3, 4000 + s, opts);
    c.require(!shortest_berge_cycle(r.hypergraph, 3).has_value(),
              "short Berge cycle survived at seed " + std::to_string(4000 + s));
    edge_counts.push_back(static_cast<int>(r.hypergraph.edges.size()));
  }
  std::sort(edge_counts.begin(), edge_counts.end());
  double median = edge_counts.empty()
                      ? 0.0
                      : 0.5 * (edge_counts[9] + edge_counts[10]);
  double floor = 0.1 * std::pow(60.0, 4.0 / 3.0);
  c.note("median edges " + fmt(median) + " vs scaling floor " + fmt(floor) +
         " (log-only, constants are not pinned)");
  return c;
}

Check c_oracle_agreement() {
  Check c;
  Rng rng(2024013);
  for (int i = 0; i < 100 && c.ok; ++i) {
    int gn = 3 + static_cast<int>(rng.next_below(3));       // 3..5
    int tn = 2 + static_cast<int>(rng.next_below(3));       // 2..4
    if (std::pow(static_cast<double>(tn), gn) > 1e5) continue;
    Graph g = random_graph(gn, 0.3 + 0.5 * rng.next_unit(), rng);
    Graph gamma = random_graph(tn, 0.3 + 0.5 * rng.next_unit(), rng);
    MinViolation brute = min_violation_map(g, gamma, 10'000'000);
    MinViolation bnb = min_violation_map(g, gamma, 0);
    c.require(brute.brute_forced && !bnb.brute_forced, "route selection failed");
    c.require(brute.violations == bnb.violations,
              "minimum violation mismatch at instance " + std::to_string(i) + " (" +
                  std::to_string(brute.violations) + " vs " + std::to_string(bnb.violations) + ")");
  }
  int homs = 0;
  for (int i = 0; i < 300 && c.ok; ++i) {
    int sn = 3 + static_cast<int>(rng.next_below(4));   // 3..6
    int dn = 3 + static_cast<int>(rng.next_below(8));   // 3..10
    if (std::pow(static_cast<double>(dn), sn) > 1e6) {
      dn = 5;
    }
    Graph src = random_graph(sn, 0.3 + 0.5 * rng.next_unit(), rng);
    Graph dst = random_graph(dn, 0.3 + 0.5 * rng.next_unit(), rng);
    HomSearch search = find_homomorphism(src, dst);
    bool exists = exhaustive_hom_exists(src, dst);
    c.require(search.definitive, "budget unexpectedly exhausted at instance " + std::to_string(i));
    if (search.map) {
      ++homs;
      c.require(exists, "solver found a map the oracle says cannot exist");
      c.require(count_violations(*search.map, src, dst) == 0, "found map has violations");
    } else {
      c.require(!exists, "solver missed a homomorphism at instance " + std::to_string(i));
    }
  }
  c.note("100 min-violation pairs, 300 existence checks (" + std::to_string(homs) + " positive)");
  return c;
}

struct Criterion {
  const char* id;
  const char* name;
  Check (*run)();
};

const Criterion kCriteria[] = {
    {"1", "mycielskian-figure", c_mycielskian_figure},
    {"2", "mycielskian-odd-girth", c_mycielskian_odd_girth},
    {"3", "mindeg-certificate", c_mindeg_certificate},
    {"4", "domination-certificate", c_domination_certificate},
    {"5", "pullout-clauses", c_pullout_clauses},
    {"6", "pullout-compression", c_pullout_compression},
    {"7", "fk-compression", c_fk_compression},
    {"8", "star-figures", c_star_figures},
    {"9", "triangle-forest-star", c_triangle_forest_star},
    {"10", "star-witness", c_star_witness},
    {"11", "entropy-identities", c_entropy_identities},
    {"12", "hypergraph-appendix", c_hypergraph_appendix},
    {"13", "oracle-agreement", c_oracle_agreement},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& filter) {
  std::vector<CriterionResult> results;
  for (const Criterion& criterion : kCriteria) {
    std::string id = criterion.id;
    std::string name = criterion.name;
    if (!filter.empty() && id.find(filter) == std::string::npos &&
        name.find(filter) == std::string::npos)
      continue;
    CriterionResult result;
    result.id = id;
    result.name = name;
    try {
      Check check = criterion.run();
      result.pass = check.ok;
      result.detail = check.detail;
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace homforge
