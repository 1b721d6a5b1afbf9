// homforge: constructive homomorphism pipelines with exact verification.
//
// Exit codes: 0 verified success, 2 precondition/verification failure,
// 3 budget or size-cap decline. Failure reasons are printed as
// "FAIL <code>: <detail>". All outputs are byte-deterministic given the
// same flags and seed.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homforge/approx_hom.hpp"
#include "homforge/graph_core.hpp"
#include "homforge/graph_io.hpp"
#include "homforge/hypergraph.hpp"
#include "homforge/lower_bound.hpp"
#include "homforge/mycielski.hpp"
#include "homforge/selfcheck.hpp"
#include "homforge/star.hpp"
#include "homforge/threshold.hpp"

namespace hf = homforge;

namespace {

long long env_cap(long long fallback) {
  const char* cap = std::getenv("HOMFORGE_CAP");
  if (!cap) return fallback;
  try {
    return std::stoll(cap);
  } catch (...) {
    throw hf::PreconditionError("HOMFORGE_CAP is not an integer");
  }
}

std::string tri(hf::TriState s) { return hf::to_string(s); }

int run(int argc, char** argv) {
  CLI::App app{"homforge: graph homomorphism construction and verification toolkit"};
  app.require_subcommand(1);

  // odd-girth
  std::string og_in;
  auto* odd = app.add_subcommand("odd-girth", "shortest odd cycle length of a graph");
  odd->add_option("--in", og_in, "input graph (.el)")->required();

  // hom
  std::string hom_src, hom_dst, hom_out;
  std::uint64_t hom_budget = hf::kDefaultHomBudget;
  auto* hom = app.add_subcommand("hom", "search for a homomorphism src -> dst");
  hom->add_option("--src", hom_src)->required();
  hom->add_option("--dst", hom_dst)->required();
  hom->add_option("--out", hom_out, "write the map when found");
  hom->add_option("--budget", hom_budget, "node expansion budget");

  // hom-free
  std::string hf_host, hf_pattern;
  std::uint64_t hf_budget = hf::kDefaultHomBudget;
  auto* homfree = app.add_subcommand("hom-free", "decide pattern-hom-freeness of a host graph");
  homfree->add_option("--host", hf_host)->required();
  homfree->add_option("--pattern", hf_pattern)->required();
  homfree->add_option("--budget", hf_budget);

  // mycielski
  std::string myc_in, myc_out, myc_labels;
  int myc_t = 1;
  auto* myc = app.add_subcommand("mycielski", "layered Mycielskian of a graph");
  myc->add_option("--t", myc_t)->required();
  myc->add_option("--in", myc_in)->required();
  myc->add_option("--out", myc_out)->required();
  myc->add_option("--labels", myc_labels, "sidecar labelling path (default <out>.lab)");

  // threshold-hom
  std::string th_mode, th_in, th_target, th_map, th_report, th_domset;
  int th_t = 1, th_dcap = 8;
  double th_delta = 0.0;
  long long th_cap = 0;
  auto* th = app.add_subcommand("threshold-hom", "certificate pipelines for sparse-odd-girth graphs");
  th->add_option("--t", th_t)->required();
  th->add_option("--mode", th_mode, "mindeg | domination | vc")->required();
  th->add_option("--in", th_in)->required();
  th->add_option("--out-target", th_target)->required();
  th->add_option("--out-map", th_map)->required();
  th->add_option("--report", th_report)->required();
  th->add_option("--dom-set", th_domset, "vertex-set file for domination mode");
  th->add_option("--delta", th_delta, "minimum-degree fraction for vc mode");
  th->add_option("--d-cap", th_dcap);
  th->add_option("--cap", th_cap, "target size cap (default 10^6 or HOMFORGE_CAP)");

  // approx-hom
  std::string ah_route, ah_f, ah_h, ah_in, ah_target, ah_map, ah_report;
  double ah_eps = 0.0;
  int ah_m = 0;
  std::uint64_t ah_budget = hf::kDefaultHomBudget;
  auto* ah = app.add_subcommand("approx-hom", "approximate homomorphism compression");
  ah->add_option("--route", ah_route, "fk | pullout")->required();
  ah->add_option("--f", ah_f, "pattern the target must avoid")->required();
  ah->add_option("--h", ah_h, "pattern the input is hom-free of (fk route)");
  ah->add_option("--eps", ah_eps)->required();
  ah->add_option("--M", ah_m, "part count override (fk route)");
  ah->add_option("--in", ah_in)->required();
  ah->add_option("--out-target", ah_target)->required();
  ah->add_option("--out-map", ah_map)->required();
  ah->add_option("--report", ah_report)->required();
  ah->add_option("--budget", ah_budget);

  // star
  std::string st_f, st_in, st_out, st_labels;
  long long st_cap = 0;
  auto* st = app.add_subcommand("star", "label-tuple blowup of a uniquely covered graph");
  st->add_option("--f", st_f)->required();
  st->add_option("--in", st_in)->required();
  st->add_option("--cap", st_cap, "size cap (default 10^6 or HOMFORGE_CAP)");
  st->add_option("--out", st_out)->required();
  st->add_option("--labels", st_labels)->required();

  // hypergraph-gen
  int hg_n = 0, hg_f = 0, hg_g = 0, hg_min_edges = 1, hg_retries = 20;
  std::uint64_t hg_seed = 0;
  double hg_c = -1.0, hg_p = -1.0;
  std::string hg_out;
  auto* hg = app.add_subcommand("hypergraph-gen", "random partite hypergraph with high Berge girth");
  hg->add_option("--n", hg_n)->required();
  hg->add_option("--f", hg_f)->required();
  hg->add_option("--g", hg_g)->required();
  hg->add_option("--seed", hg_seed)->required();
  hg->add_option("--c", hg_c, "edge probability constant override");
  hg->add_option("--p", hg_p, "edge probability override");
  hg->add_option("--min-edges", hg_min_edges);
  hg->add_option("--retries", hg_retries);
  hg->add_option("--out", hg_out)->required();

  // witness
  std::string wt_mode, wt_f, wt_h, wt_dir;
  double wt_eps = 0.0, wt_p = -1.0;
  std::uint64_t wt_seed = 0;
  int wt_n = 24;
  long long wt_cap = 0;
  auto* wt = app.add_subcommand("witness", "lower-bound witness bundles");
  wt->add_option("--mode", wt_mode, "star | random-girth")->required();
  wt->add_option("--f", wt_f)->required();
  wt->add_option("--h", wt_h)->required();
  wt->add_option("--eps", wt_eps)->required();
  wt->add_option("--seed", wt_seed)->required();
  wt->add_option("--out-dir", wt_dir)->required();
  wt->add_option("--n", wt_n, "hypergraph vertex count (star mode)");
  wt->add_option("--p", wt_p, "hypergraph edge probability (star mode)");
  wt->add_option("--cap", wt_cap, "star size cap (default 10^6 or HOMFORGE_CAP)");

  // entropy
  std::string en_labels, en_map, en_report;
  std::uint64_t en_samples = 0, en_seed = 0;
  auto* en = app.add_subcommand("entropy", "entropy/mutual-information diagnostics of a star map");
  en->add_option("--labels", en_labels)->required();
  en->add_option("--map", en_map)->required();
  en->add_option("--report", en_report)->required();
  en->add_option("--mc-samples", en_samples, "sample count for Monte Carlo mode");
  en->add_option("--seed", en_seed, "seed for Monte Carlo mode");

  // verify
  std::string vf_g, vf_target, vf_map, vf_f;
  double vf_eps = 0.0;
  std::uint64_t vf_budget = hf::kDefaultHomBudget;
  auto* vf = app.add_subcommand("verify", "check an approximate homomorphism certificate");
  vf->add_option("--g", vf_g)->required();
  vf->add_option("--target", vf_target)->required();
  vf->add_option("--map", vf_map)->required();
  vf->add_option("--eps", vf_eps)->required();
  vf->add_option("--f", vf_f)->required();
  vf->add_option("--budget", vf_budget);

  // selfcheck
  std::string sc_filter;
  auto* sc = app.add_subcommand("selfcheck", "run the embedded acceptance suite");
  sc->add_option("--filter", sc_filter, "only criteria whose id or name matches");

  CLI11_PARSE(app, argc, argv);

  if (odd->parsed()) {
    auto og = hf::odd_girth(hf::read_graph_file(og_in));
    std::cout << (og ? std::to_string(*og) : std::string("none")) << "\n";
    return 0;
  }

  if (hom->parsed()) {
    hf::Graph src = hf::read_graph_file(hom_src);
    hf::Graph dst = hf::read_graph_file(hom_dst);
    hf::HomSearch search = hf::find_homomorphism(src, dst, hom_budget);
    if (search.map) {
      std::cout << "hom: found\n";
      if (!hom_out.empty()) hf::write_vertex_map_file(hom_out, *search.map);
      return 0;
    }
    std::cout << (search.definitive ? "hom: none\n" : "hom: unknown\n");
    if (!search.definitive) {
      std::cout << "FAIL budget: search budget exhausted after " << search.expanded
                << " expansions\n";
      return 3;
    }
    return 0;
  }

  if (homfree->parsed()) {
    hf::TriState state =
        hf::is_hom_free(hf::read_graph_file(hf_host), hf::read_graph_file(hf_pattern), hf_budget);
    std::cout << tri(state) << "\n";
    if (state == hf::TriState::Unknown) {
      std::cout << "FAIL budget: hom-freeness undecided within budget\n";
      return 3;
    }
    return 0;
  }

  if (myc->parsed()) {
    hf::MycielskiGraph m = hf::t_fold_mycielskian(hf::read_graph_file(myc_in), myc_t);
    hf::write_graph_file(myc_out, m.graph);
    hf::write_mycielski_labels_file(myc_labels.empty() ? myc_out + ".lab" : myc_labels, m);
    std::cout << "mycielski: " << m.graph.n() << " vertices, " << m.graph.edge_count()
              << " edges\n";
    return 0;
  }

  if (th->parsed()) {
    hf::Graph g = hf::read_graph_file(th_in);
    hf::PipelineOptions opts;
    opts.size_cap = th_cap > 0 ? th_cap : env_cap(opts.size_cap);
    hf::HomCertificate cert;
    if (th_mode == "mindeg") {
      cert = hf::mindeg_pipeline(g, th_t, opts);
    } else if (th_mode == "domination") {
      std::optional<std::vector<int>> dom;
      if (!th_domset.empty()) dom = hf::read_vertex_set_file(th_domset);
      cert = hf::domination_pipeline(g, th_t, dom, opts);
    } else if (th_mode == "vc") {
      if (th_delta <= 0.0)
        throw hf::PreconditionError("vc mode requires --delta");
      cert = hf::vc_pipeline(g, th_t, th_delta, th_dcap, opts);
    } else {
      throw hf::PreconditionError("unknown mode " + th_mode);
    }
    hf::write_graph_file(th_target, cert.target);
    hf::write_vertex_map_file(th_map, cert.map);
    hf::write_report_file(th_report, cert.report);
    std::cout << "threshold-hom: target " << cert.target.n() << " vertices, bound "
              << cert.claimed.size_bound << ", violations 0\n";
    return 0;
  }

  if (ah->parsed()) {
    hf::Graph g = hf::read_graph_file(ah_in);
    hf::Graph f = hf::read_graph_file(ah_f);
    hf::CompressionResult result;
    if (ah_route == "fk") {
      if (ah_h.empty()) throw hf::PreconditionError("fk route requires --h");
      hf::Graph h = hf::read_graph_file(ah_h);
      hf::FkPipelineOptions opts;
      opts.hom_budget = ah_budget;
      result = hf::fk_pipeline(g, f, h, ah_eps,
                               ah_m > 0 ? std::optional<int>(ah_m) : std::nullopt, opts);
    } else if (ah_route == "pullout") {
      result = hf::pullout_pipeline(g, f, ah_eps, ah_budget);
    } else {
      throw hf::PreconditionError("unknown route " + ah_route);
    }
    hf::write_graph_file(ah_target, result.target);
    hf::write_vertex_map_file(ah_map, result.map);
    hf::write_report_file(ah_report, result.report.lines);
    std::cout << "approx-hom: target " << result.target.n() << " vertices, violations "
              << result.report.violations << " (" << (result.report.within_threshold ? "within" : "over")
              << " eps*n^2), target " << tri(result.report.target_hom_free) << "\n";
    return 0;
  }

  if (st->parsed()) {
    hf::Graph g = hf::read_graph_file(st_in);
    hf::Graph f = hf::read_graph_file(st_f);
    hf::CopyEnumeration copies = hf::enumerate_f_copies(g, f);
    if (!copies.unique_cover) {
      int covered_twice = 0, uncovered = 0;
      for (int count : copies.cover_count) {
        if (count == 0) ++uncovered;
        if (count > 1) ++covered_twice;
      }
      throw hf::PreconditionError("star: host edges are not uniquely covered (" +
                                  std::to_string(uncovered) + " uncovered, " +
                                  std::to_string(covered_twice) + " multiply covered)");
    }
    long long cap = st_cap > 0 ? st_cap : env_cap(1'000'000);
    hf::StarGraph star = hf::build_star(g, f, copies, cap);
    hf::write_graph_file(st_out, star.graph);
    hf::write_star_labels_file(st_labels, star);
    std::cout << "star: " << star.graph.n() << " vertices, " << star.graph.edge_count()
              << " edges, " << star.m << " copies\n";
    return 0;
  }

  if (hg->parsed()) {
    hf::HighGirthOptions opts;
    opts.c_override = hg_c;
    opts.p_override = hg_p;
    opts.min_edges = hg_min_edges;
    opts.max_retries = hg_retries;
    hf::HighGirthResult result = hf::random_high_girth_hypergraph(hg_n, hg_f, hg_g, hg_seed, opts);
    hf::write_hypergraph_file(hg_out, result.hypergraph);
    std::cout << "hypergraph-gen: " << result.hypergraph.edges.size() << " edges (raw "
              << result.raw_edges << ", deleted " << result.deleted << ", p " << result.p
              << ", attempts " << result.attempts << ")\n";
    return 0;
  }

  if (wt->parsed()) {
    hf::Graph f = hf::read_graph_file(wt_f);
    hf::Graph h = hf::read_graph_file(wt_h);
    std::filesystem::create_directories(wt_dir);
    if (wt_mode == "star") {
      hf::WitnessOptions opts;
      opts.n = wt_n;
      opts.edge_probability = wt_p;
      opts.star_cap = wt_cap > 0 ? wt_cap : env_cap(opts.star_cap);
      hf::WitnessBundle bundle = hf::star_witness(f, h, wt_eps, wt_seed, opts);
      hf::write_hypergraph_file(wt_dir + "/h.hg", bundle.hypergraph);
      hf::write_graph_file(wt_dir + "/g.el", bundle.decorated);
      hf::write_graph_file(wt_dir + "/gstar.el", bundle.star.graph);
      hf::write_star_labels_file(wt_dir + "/gstar.lab", bundle.star);
      hf::write_report_file(wt_dir + "/report.txt", bundle.report);
      std::cout << "witness: star bundle in " << wt_dir << " (unique cover "
                << (bundle.unique_cover ? "yes" : "no") << ", h-hom-free "
                << tri(bundle.h_hom_free) << ")\n";
      if (bundle.h_hom_free == hf::TriState::Unknown) {
        std::cout << "FAIL budget: h-hom-freeness undecided within budget\n";
        return 3;
      }
      return 0;
    }
    if (wt_mode == "random-girth") {
      hf::RandomGirthWitness witness = hf::random_girth_witness(f, h, wt_eps, wt_seed);
      hf::write_graph_file(wt_dir + "/g.el", witness.graph);
      hf::write_report_file(wt_dir + "/report.txt", witness.report);
      std::cout << "witness: random-girth graph with " << witness.graph.n()
                << " vertices, girth > " << witness.girth_floor << "\n";
      return 0;
    }
    throw hf::PreconditionError("unknown mode " + wt_mode);
  }

  if (en->parsed()) {
    hf::StarGraph star = hf::read_star_labels_file(en_labels);
    hf::VertexMap phi = hf::read_vertex_map_file(en_map, star.graph.n());
    hf::EntropyOptions opts;
    if (en_samples > 0) {
      opts.exact = false;
      opts.samples = en_samples;
      opts.seed = en_seed;
    }
    hf::EntropyReport report = hf::entropy_diagnostics(star, phi, opts);
    std::vector<std::pair<std::string, std::string>> lines;
    char buf[64];
    lines.emplace_back("mode", report.exact ? "exact" : "mc");
    if (!report.exact) {
      lines.emplace_back("samples", std::to_string(report.samples));
      lines.emplace_back("seed", std::to_string(en_seed));
    }
    for (const auto& pv : report.vertices) {
      std::snprintf(buf, sizeof buf, "%.12g", pv.h_y_bits);
      lines.emplace_back("H_y_" + std::to_string(pv.base), buf);
      std::snprintf(buf, sizeof buf, "%.12g", pv.i_xy_bits);
      lines.emplace_back("I_xy_" + std::to_string(pv.base), buf);
      std::snprintf(buf, sizeof buf, "%.12g", pv.coord_sum);
      lines.emplace_back("coord_sum_" + std::to_string(pv.base), buf);
    }
    std::snprintf(buf, sizeof buf, "%.12g", report.total_information);
    lines.emplace_back("total_information", buf);
    std::snprintf(buf, sizeof buf, "%.3g", report.max_superadditivity_excess);
    lines.emplace_back("max_superadditivity_excess", buf);
    hf::write_report_file(en_report, lines);
    std::cout << "entropy: " << report.vertices.size() << " base vertices, total information "
              << report.total_information << " bits\n";
    return 0;
  }

  if (vf->parsed()) {
    hf::Graph g = hf::read_graph_file(vf_g);
    hf::Graph target = hf::read_graph_file(vf_target);
    hf::VertexMap map = hf::read_vertex_map_file(vf_map, g.n(), target.n());
    hf::Graph f = hf::read_graph_file(vf_f);
    hf::VerifyReport report = hf::verify_approx_hom(g, target, map, vf_eps, f, vf_budget);
    std::cout << "violations = " << report.violations << "\n";
    std::cout << "threshold = " << report.threshold << "\n";
    std::cout << "target_hom_free = " << tri(report.target_hom_free) << "\n";
    if (!report.pass) {
      std::cout << "FAIL verify: " << report.violations << " violations exceed eps*n^2 = "
                << report.threshold << "\n";
      return 2;
    }
    std::cout << "PASS\n";
    return 0;
  }

  if (sc->parsed()) {
    auto results = hf::run_acceptance(sc_filter);
    bool all = true;
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name;
      if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << "\n";
      all = all && r.pass;
    }
    if (results.empty()) {
      std::cout << "FAIL precondition: no criterion matches filter '" << sc_filter << "'\n";
      return 2;
    }
    if (!all) {
      std::cout << "FAIL selfcheck: some criteria failed\n";
      return 2;
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hf::CapError& e) {
    std::cout << "FAIL cap: " << e.what() << "\n";
    return 3;
  } catch (const hf::PreconditionError& e) {
    std::cout << "FAIL precondition: " << e.what() << "\n";
    return 2;
  } catch (const hf::IoError& e) {
    std::cout << "FAIL input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << "FAIL internal: " << e.what() << "\n";
    return 1;
  }
}
