// Command-line front end: every subcommand maps onto one library operation
// (family tower is the one documented pipeline: build + verify + analyze).
// Exit codes: 0 success, 2 validation/usage error, 3 resource-cap error.

#include <CLI11.hpp>
#include <functional>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "egt/automorphism.hpp"
#include "egt/cover.hpp"
#include "egt/cuts.hpp"
#include "egt/errors.hpp"
#include "egt/family.hpp"
#include "egt/graph.hpp"
#include "egt/group.hpp"
#include "egt/json_io.hpp"
#include "egt/kernel.hpp"
#include "egt/metric.hpp"
#include "egt/replace.hpp"
#include "egt/spectra.hpp"

using nlohmann::json;

namespace {

struct CliState {
  egt::RunConfig cfg;
  std::string output_path;
  std::string format = "json";
  std::string command;
  std::optional<json> report;
  std::optional<std::string> raw_text;  // used instead of JSON when set
};

void emit(CliState& st) {
  std::string text;
  if (st.raw_text) {
    text = *st.raw_text;
  } else {
    json wrapped{{"command", st.command},
                 {"config", egt::to_json(st.cfg)},
                 {"report", st.report.value_or(json::object())}};
    text = wrapped.dump(2) + "\n";
  }
  if (st.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(st.output_path);
    if (!out)
      throw egt::ValidationError("cannot open output file: " + st.output_path);
    out << text;
  }
}

egt::Graph load_graph(const std::string& path) {
  return egt::read_edge_list_file(path);
}

std::vector<int> load_vmap(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw egt::ValidationError("cannot open vmap file: " + path);
  std::vector<int> vmap;
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    int x;
    while (ls >> x) vmap.push_back(x);
  }
  return vmap;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

egt::CheegerMode parse_cheeger_mode(const std::string& s) {
  if (s == "none") return egt::CheegerMode::kNone;
  if (s == "auto") return egt::CheegerMode::kAuto;
  if (s == "exact") return egt::CheegerMode::kExact;
  if (s == "heuristic") return egt::CheegerMode::kHeuristic;
  throw egt::ValidationError("unknown cheeger mode: " + s);
}

void emit_graph(CliState& st, const egt::Graph& g) {
  if (st.format == "dot")
    st.raw_text = egt::to_dot(g);
  else if (st.format == "json")
    st.report = egt::to_json(g);
  else
    st.raw_text = egt::to_edge_list(g);
  emit(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral expander toolkit"};
  app.require_subcommand(1);
  CliState st;

  app.add_option("--seed", st.cfg.seed, "seed for sampled searches");
  app.add_option("--samples", st.cfg.sample_count, "samples per probe");
  app.add_option("--format", st.format, "json|text|csv|dot");
  app.add_option("-o,--output", st.output_path, "output file (default stdout)");
  app.add_option("--cap-group-order", st.cfg.caps.group_order);
  app.add_option("--cap-exact-n", st.cfg.caps.cut_exact_max_n);
  app.add_option("--cap-folner", st.cfg.caps.folner_exhaustive);
  app.add_option("--cap-configs", st.cfg.caps.config_exhaustive);
  app.add_option("--cap-dense-n", st.cfg.caps.dense_eigen_max_n);
  app.add_option("--cap-aut-n", st.cfg.caps.automorphism_max_n);
  app.add_option("--tol-eig", st.cfg.tol.eig);
  app.add_option("--tol-cnd", st.cfg.tol.cnd_rel);
  app.add_option("--tol,--tol-exponent", st.cfg.tol.exponent,
                 "bisection tolerance for exponent searches");
  bool serial = false;
  app.add_flag("--serial", serial, "run kernels on one thread");

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->require_subcommand(1);
  struct GenArgs {
    int a = 0, b = 0;
    std::string group;
  } ga;
  auto* gen_cycle = gen->add_subcommand("cycle");
  gen_cycle->add_option("n", ga.a)->required();
  auto* gen_complete = gen->add_subcommand("complete");
  gen_complete->add_option("n", ga.a)->required();
  auto* gen_kpq = gen->add_subcommand("kpq");
  gen_kpq->add_option("p", ga.a)->required();
  gen_kpq->add_option("q", ga.b)->required();
  auto* gen_torus = gen->add_subcommand("torus");
  gen_torus->add_option("a", ga.a)->required();
  gen_torus->add_option("b", ga.b)->required();
  auto* gen_tree = gen->add_subcommand("tree-ball");
  gen_tree->add_option("k", ga.a)->required();
  gen_tree->add_option("r", ga.b)->required();
  auto* gen_petersen = gen->add_subcommand("petersen");
  auto* gen_cayley = gen->add_subcommand("cayley");
  gen_cayley->add_option("group", ga.group, "sl:<dim>:<mod> or cyclic:<n>[:k1,k2,...]")
      ->required();

  // ---- spectrum / cheeger / expander-constant / folner ----
  std::string graph_path;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Markov spectrum report");
  spectrum_cmd->add_option("graph", graph_path)->required();

  auto* cheeger_cmd = app.add_subcommand("cheeger", "Cheeger constant");
  cheeger_cmd->add_option("graph", graph_path)->required();
  bool ch_exact = false, ch_heur = false;
  cheeger_cmd->add_flag("--exact", ch_exact);
  cheeger_cmd->add_flag("--heuristic", ch_heur);

  auto* exp_cmd = app.add_subcommand("expander-constant", "expander constant");
  exp_cmd->add_option("graph", graph_path)->required();

  auto* folner_cmd = app.add_subcommand("folner", "minimum boundary ratio");
  folner_cmd->add_option("graph", graph_path)->required();
  int folner_max = 1;
  std::string folner_mode = "auto";
  folner_cmd->add_option("--max-size", folner_max)->required();
  folner_cmd->add_option("--mode", folner_mode, "auto|exact|greedy");

  // ---- cover ----
  auto* cover = app.add_subcommand("cover", "covering-map operations");
  cover->require_subcommand(1);
  std::string cov_source, cov_target, cov_vmap, cov_group;
  int cov_dim = 2, cov_srcmod = 0, cov_dstmod = 0, cov_kernel_to = 0;
  bool cov_deck = false;
  auto* cover_verify = cover->add_subcommand("verify");
  cover_verify->add_option("--source", cov_source)->required();
  cover_verify->add_option("--target", cov_target)->required();
  cover_verify->add_option("--vmap", cov_vmap)->required();
  auto* cover_deck_cmd = cover->add_subcommand("deck");
  cover_deck_cmd->add_option("--source", cov_source)->required();
  cover_deck_cmd->add_option("--target", cov_target)->required();
  cover_deck_cmd->add_option("--vmap", cov_vmap)->required();
  auto* cover_reduction = cover->add_subcommand("reduction");
  cover_reduction->add_option("--dim", cov_dim);
  cover_reduction->add_option("--source-mod", cov_srcmod)->required();
  cover_reduction->add_option("--target-mod", cov_dstmod)->required();
  cover_reduction->add_flag("--deck", cov_deck, "also enumerate the deck group");
  auto* cover_quotient = cover->add_subcommand("quotient");
  cover_quotient->add_option("--group", cov_group, "Cayley graph host group")
      ->required();
  cover_quotient->add_option("--kernel-to", cov_kernel_to,
                             "quotient by the kernel of reduction to this modulus "
                             "(default: whole group)");

  // ---- replace-kpq ----
  auto* replace_cmd = app.add_subcommand("replace-kpq", "block replacement");
  std::string rp_group, rp_policy = "matched";
  int rp_p = 1, rp_q = 1;
  replace_cmd->add_option("--group", rp_group)->required();
  replace_cmd->add_option("--p", rp_p)->required();
  replace_cmd->add_option("--q", rp_q)->required();
  replace_cmd->add_option("--policy", rp_policy, "literal|matched");

  // ---- aut ----
  auto* aut = app.add_subcommand("aut", "automorphism diagnostics");
  aut->require_subcommand(1);
  auto* aut_group = aut->add_subcommand("group");
  aut_group->add_option("graph", graph_path)->required();
  auto* aut_trans = aut->add_subcommand("transitive");
  aut_trans->add_option("graph", graph_path)->required();

  // ---- kernel ----
  auto* kernel = app.add_subcommand("kernel", "negative-kernel operations");
  kernel->require_subcommand(1);
  std::string k_graph, k_matrix, k_group;
  double k_exponent = 1.0;
  int k_nmax = 4;
  auto add_kernel_inputs = [&](CLI::App* sub, bool need_group) {
    sub->add_option("--graph", k_graph, "graph file; kernel is d^exponent");
    sub->add_option("--matrix", k_matrix, "kernel matrix file");
    sub->add_option("--exponent", k_exponent);
    if (need_group)
      sub->add_option("--group", k_group, "group spec; acts on its Cayley graph")
          ->required();
  };
  auto* k_cnd = kernel->add_subcommand("cnd");
  add_kernel_inputs(k_cnd, false);
  auto* k_qt = kernel->add_subcommand("quasi-triangle");
  add_kernel_inputs(k_qt, false);
  auto* k_inv = kernel->add_subcommand("invariance");
  add_kernel_inputs(k_inv, true);
  auto* k_cert = kernel->add_subcommand("bound-cert");
  add_kernel_inputs(k_cert, true);
  auto* k_sup = kernel->add_subcommand("sup-exponent");
  k_sup->add_option("--graph", k_graph)->required();
  auto* k_round = kernel->add_subcommand("roundness");
  k_round->add_option("--graph", k_graph)->required();
  k_round->add_option("--n-max", k_nmax);

  // ---- family ----
  auto* family = app.add_subcommand("family", "family-level analysis");
  family->require_subcommand(1);
  double eps1 = 0.05, eps2 = 0.05;
  std::string fam_cheeger = "auto", fam_primes, fam_manifest;
  int fam_dim = 2, fam_prime = 3, fam_depth = 2;
  auto add_family_opts = [&](CLI::App* sub) {
    sub->add_option("--eps1", eps1);
    sub->add_option("--eps2", eps2);
    sub->add_option("--cheeger-mode", fam_cheeger, "none|auto|exact|heuristic");
  };
  auto* fam_tower = family->add_subcommand("tower");
  fam_tower->add_option("--dim", fam_dim);
  fam_tower->add_option("--prime", fam_prime)->required();
  fam_tower->add_option("--depth", fam_depth)->required();
  add_family_opts(fam_tower);
  auto* fam_primes_cmd = family->add_subcommand("primes");
  fam_primes_cmd->add_option("--dim", fam_dim);
  fam_primes_cmd->add_option("--primes", fam_primes)->required();
  add_family_opts(fam_primes_cmd);
  auto* fam_manifest_cmd = family->add_subcommand("manifest");
  fam_manifest_cmd->add_option("manifest", fam_manifest)->required();
  add_family_opts(fam_manifest_cmd);

  // global flags remain usable after any subcommand
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
    a->fallthrough(true);
    for (auto* s : a->get_subcommands([](CLI::App*) { return true; }))
      allow_fallthrough(s);
  };
  allow_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (serial) st.cfg.exec = egt::Exec::kSerial;

  try {
    auto load_kernel = [&]() -> egt::Kernel {
      if (!k_matrix.empty()) return egt::read_kernel_file(k_matrix);
      if (!k_graph.empty())
        return egt::kernel_from_metric(load_graph(k_graph), k_exponent);
      throw egt::ValidationError("kernel: need --graph or --matrix");
    };
    auto cayley_setup = [&](const std::string& spec) {
      egt::FiniteGroup g = egt::group_from_spec(spec, st.cfg.caps);
      egt::CayleyGraph cay = egt::cayley_graph(g);
      cay.graph.name = "Cay(" + spec + ")";
      return std::pair{std::move(g), std::move(cay)};
    };

    if (gen->parsed()) {
      st.command = "gen";
      // default gen output is the canonical edge list, not the JSON wrapper
      if (app.get_option("--format")->count() == 0) st.format = "text";
      egt::Graph g;
      if (gen_cycle->parsed()) g = egt::make_cycle(ga.a);
      else if (gen_complete->parsed()) g = egt::make_complete(ga.a);
      else if (gen_kpq->parsed()) g = egt::make_complete_bipartite(ga.a, ga.b);
      else if (gen_torus->parsed()) g = egt::make_torus(ga.a, ga.b);
      else if (gen_tree->parsed()) g = egt::make_tree_ball(ga.a, ga.b);
      else if (gen_petersen->parsed()) g = egt::make_petersen();
      else if (gen_cayley->parsed()) {
        auto [grp, cay] = cayley_setup(ga.group);
        if (st.format == "json") {
          // graph plus the vertex -> element label map (row-major entries)
          st.report = json{{"graph", egt::to_json(cay.graph)},
                           {"labels", cay.labels}};
          emit(st);
          return 0;
        }
        g = std::move(cay.graph);
      }
      emit_graph(st, g);
    } else if (spectrum_cmd->parsed()) {
      st.command = "spectrum";
      st.report = egt::to_json(egt::spectrum(load_graph(graph_path), st.cfg));
      emit(st);
    } else if (cheeger_cmd->parsed()) {
      st.command = "cheeger";
      egt::Graph g = load_graph(graph_path);
      egt::CheegerReport rep;
      if (ch_heur && !ch_exact)
        rep = egt::cheeger_heuristic(g, st.cfg);
      else
        rep = egt::cheeger_exact(g, st.cfg.caps, st.cfg.exec);
      st.report = egt::to_json(rep);
      emit(st);
    } else if (exp_cmd->parsed()) {
      st.command = "expander-constant";
      st.report = egt::to_json(
          egt::expander_constant(load_graph(graph_path), st.cfg.caps, st.cfg.exec));
      emit(st);
    } else if (folner_cmd->parsed()) {
      st.command = "folner";
      egt::FolnerMode mode = egt::FolnerMode::kAuto;
      if (folner_mode == "exact") mode = egt::FolnerMode::kExact;
      else if (folner_mode == "greedy") mode = egt::FolnerMode::kGreedy;
      else if (folner_mode != "auto")
        throw egt::ValidationError("unknown folner mode: " + folner_mode);
      st.report = egt::to_json(egt::folner_ratio(load_graph(graph_path),
                                                 folner_max, mode, st.cfg.caps,
                                                 st.cfg.exec));
      emit(st);
    } else if (cover->parsed()) {
      st.command = "cover";
      if (cover_verify->parsed() || cover_deck_cmd->parsed()) {
        egt::CoveringMap cov = egt::verify_cover(
            load_graph(cov_source), load_graph(cov_target), load_vmap(cov_vmap));
        json rep = egt::to_json(cov);
        if (cover_deck_cmd->parsed()) {
          egt::DeckGroup deck = egt::deck_group(cov, st.cfg.exec);
          rep["deck_order"] = deck.perms.size();
          rep["deck"] = egt::to_json(deck);
        }
        st.report = rep;
      } else if (cover_reduction->parsed()) {
        egt::ReductionCover rc = egt::quotient_cover_from_reduction(
            cov_dim, cov_srcmod, cov_dstmod, st.cfg.caps);
        json rep = egt::to_json(rc);
        if (cov_deck && rc.cover.verified) {
          egt::DeckGroup deck = egt::deck_group(rc.cover, st.cfg.exec);
          rep["cover"]["deck_order"] = deck.perms.size();
          rep["deck_free"] = deck.free_action;
        }
        st.report = rep;
      } else if (cover_quotient->parsed()) {
        auto [grp, cay] = cayley_setup(cov_group);
        egt::GroupAction action;
        if (cov_kernel_to > 0) {
          egt::FiniteGroup target = egt::FiniteGroup::enumerate(
              egt::sl_generators(grp.element(0).dim, cov_kernel_to),
              st.cfg.caps.group_order);
          egt::ReductionHom hom = egt::reduction_hom(grp, target);
          action = egt::left_translation_action(grp, cay, hom.kernel);
        } else {
          action = egt::left_translation_action(grp, cay);
        }
        st.report = egt::to_json(egt::quotient_graph(cay.graph, action));
      }
      emit(st);
    } else if (replace_cmd->parsed()) {
      st.command = "replace-kpq";
      egt::FiniteGroup g = egt::group_from_spec(rp_group, st.cfg.caps);
      egt::ReplacePolicy policy;
      if (rp_policy == "literal") policy = egt::ReplacePolicy::kLiteral;
      else if (rp_policy == "matched") policy = egt::ReplacePolicy::kMatched;
      else throw egt::ValidationError("unknown policy: " + rp_policy);
      st.report = egt::to_json(egt::kpq_replace(g, rp_p, rp_q, policy));
      emit(st);
    } else if (aut->parsed()) {
      st.command = "aut";
      egt::Graph g = load_graph(graph_path);
      if (aut_group->parsed()) {
        auto autos =
            egt::automorphism_group(g, st.cfg.caps.automorphism_max_n);
        st.report = json{{"order", autos.size()}, {"automorphisms", autos}};
      } else {
        st.report = egt::to_json(
            egt::vertex_transitive(g, st.cfg.caps.automorphism_max_n));
      }
      emit(st);
    } else if (kernel->parsed()) {
      st.command = "kernel";
      if (k_cnd->parsed()) {
        st.report =
            egt::to_json(egt::is_negative_kernel(load_kernel(), st.cfg.tol.cnd_rel));
      } else if (k_qt->parsed()) {
        st.report = egt::to_json(egt::quasi_triangle_check(load_kernel(), st.cfg.exec));
      } else if (k_inv->parsed() || k_cert->parsed()) {
        auto [grp, cay] = cayley_setup(k_group);
        egt::GroupAction action = egt::left_translation_action(grp, cay);
        egt::Kernel k = !k_matrix.empty()
                            ? egt::read_kernel_file(k_matrix)
                            : egt::kernel_from_metric(cay.graph, k_exponent);
        if (k_inv->parsed()) {
          double tol = st.cfg.tol.cert * std::max(1.0, k.max_abs());
          st.report = egt::to_json(egt::invariance_check(k, action, tol, st.cfg));
        } else {
          st.report = egt::to_json(egt::bound_certificate(k, action, st.cfg));
        }
      } else if (k_sup->parsed()) {
        st.report = egt::to_json(egt::cnd_sup_exponent(
            load_graph(k_graph), st.cfg.tol.exponent, st.cfg));
      } else if (k_round->parsed()) {
        st.report = egt::to_json(egt::roundness_estimate(
            load_graph(k_graph), k_nmax, st.cfg.tol.exponent, st.cfg));
      }
      emit(st);
    } else if (family->parsed()) {
      st.command = "family";
      egt::GraphFamily fam;
      if (fam_tower->parsed()) {
        fam = egt::build_tower(fam_dim, fam_prime, fam_depth, st.cfg.caps);
      } else if (fam_primes_cmd->parsed()) {
        fam = egt::build_prime_family(fam_dim, parse_int_list(fam_primes),
                                      st.cfg.caps);
      } else {
        std::ifstream in(fam_manifest);
        if (!in)
          throw egt::ValidationError("cannot open manifest: " + fam_manifest);
        json m = json::parse(in);
        if (m.is_array()) {
          std::vector<egt::Graph> graphs;
          for (const auto& p : m) graphs.push_back(load_graph(p.get<std::string>()));
          fam = egt::family_from_graphs(std::move(graphs), fam_manifest);
        } else if (m.contains("graphs")) {
          std::vector<egt::Graph> graphs;
          for (const auto& p : m["graphs"])
            graphs.push_back(load_graph(p.get<std::string>()));
          fam = egt::family_from_graphs(std::move(graphs), fam_manifest);
        } else if (m.contains("tower")) {
          const auto& t = m["tower"];
          fam = egt::build_tower(t.value("dim", 2), t["prime"].get<int>(),
                                 t["depth"].get<int>(), st.cfg.caps);
        } else if (m.contains("primes")) {
          const auto& t = m["primes"];
          std::vector<int> ps = t["primes"].get<std::vector<int>>();
          fam = egt::build_prime_family(t.value("dim", 2), ps, st.cfg.caps);
        } else {
          throw egt::ValidationError(
              "manifest must be a path array or contain graphs/tower/primes");
        }
      }
      egt::FamilyReport rep = egt::analyze_family(
          fam, eps1, eps2, parse_cheeger_mode(fam_cheeger), st.cfg);
      if (st.format == "csv") {
        st.raw_text = egt::family_report_csv(rep, st.cfg);
      } else {
        json out = egt::to_json(rep);
        json covers = json::array();
        for (const auto& m : fam.members)
          if (m.cover) covers.push_back(egt::to_json(*m.cover));
        out["covers"] = covers;
        st.report = out;
      }
      emit(st);
    }
  } catch (const egt::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const egt::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
