#include "omegalab/approx.hpp"
#include "omegalab/box.hpp"
#include "omegalab/errors.hpp"
#include "omegalab/functors.hpp"
#include "omegalab/hom.hpp"
#include "omegalab/homology.hpp"
#include "omegalab/omega_collapse.hpp"
#include "omegalab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace omegalab;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kIncomplete = 2;
constexpr int kUsage = 64;

struct Budgets {
  std::size_t vertex = kDefaultVertexBudget;
  std::size_t simplex = kDefaultSimplexBudget;
  std::uint64_t node = HomSearchConfig{}.node_budget;
};

struct GraphSource {
  std::string path;
  std::string family;
};

void add_budget_flags(CLI::App* cmd, Budgets& b) {
  cmd->add_option("--vertex-budget", b.vertex, "Maximum Omega vertices")->check(CLI::PositiveNumber);
  cmd->add_option("--simplex-budget", b.simplex, "Maximum simplices materialized")->check(CLI::PositiveNumber);
  cmd->add_option("--node-budget", b.node, "Maximum homomorphism search nodes")->check(CLI::PositiveNumber);
}

void add_graph_source(CLI::App* cmd, GraphSource& src, const std::string& flag, const std::string& what) {
  auto* file = cmd->add_option(flag, src.path, what + " graph file");
  auto* fam = cmd->add_option("--" + std::string(flag == "-i" ? "family" : flag.substr(1) + "-family"), src.family,
                              what + " from a family: clique:N, cycle:N, path:N, biclique:N,M, circular:P,Q, petersen");
  file->excludes(fam);
}

Graph family_graph(const std::string& spec) {
  static const std::map<std::string, FamilyKind> kinds = {
      {"clique", FamilyKind::clique},     {"cycle", FamilyKind::cycle},
      {"path", FamilyKind::path},         {"biclique", FamilyKind::biclique},
      {"circular", FamilyKind::circular_clique}, {"petersen", FamilyKind::petersen}};
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  auto it = kinds.find(name);
  if (it == kinds.end()) throw ParameterError("unknown family '" + name + "'");
  std::vector<long long> params;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        params.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw ParameterError("bad family parameter '" + item + "'");
      }
    }
  }
  return make_family(it->second, params);
}

Graph load_graph(const GraphSource& src) {
  if (!src.family.empty()) return family_graph(src.family);
  if (src.path.empty()) throw ParameterError("no input graph given");
  return read_graph_file(src.path);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path);
  out << text;
}

std::string betti_text(const BettiVector& b) {
  std::string out;
  for (std::size_t i = 0; i < b.size(); ++i) out += (i ? " " : "") + std::to_string(b[i]);
  return out;
}

std::string witness_text(const Homomorphism& h) {
  std::ostringstream os;
  for (std::size_t v = 0; v < h.source_order(); ++v) os << "m " << v << ' ' << h(v) << '\n';
  return os.str();
}

std::string show_graph(const Graph& g) {
  std::ostringstream os;
  os << "vertices: " << g.order() << "\nedges: " << g.edge_count() << '\n';
  for (std::size_t v = 0; v < g.order(); ++v) {
    os << g.label(v) << ':';
    g.neighbors(v).for_each([&](std::size_t u) { os << ' ' << g.label(u); });
    os << '\n';
  }
  return os.str();
}

std::string token_text(const Z2Complex& k, std::uint32_t id) {
  const auto& t = k.token(id);
  return std::to_string(t.graph_vertex) + (t.shore == Shore::circ ? "+" : "-");
}

std::string show_complex(const Z2Complex& k) {
  std::ostringstream os;
  os << "vertices: " << k.num_vertices() << "\nfacets: " << k.facets().size()
     << "\nfree: " << (k.is_free() ? "yes" : "no") << '\n';
  for (const auto& f : k.facets()) {
    os << '{';
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << token_text(k, f[i]);
    os << "}\n";
  }
  return os.str();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool looks_like_complex(const std::string& text) { return text.rfind("c ", 0) == 0; }

std::size_t require_odd(std::size_t k, const char* what) {
  if (k % 2 == 0) throw ParameterError(std::string(what) + " must be odd");
  return k;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph functors, box complexes and their Z2-homotopy invariants"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Budgets budgets;
  std::function<int()> action;

  // functor
  GraphSource functor_in;
  std::string functor_kind, functor_out;
  std::size_t functor_k = 3;
  auto* functor = app.add_subcommand("functor", "Apply Gamma_k, Pi_k, Omega_k or Omega'_k to a graph");
  functor->add_option("--kind", functor_kind, "subdivision | power | omega | omega-prime")
      ->required()
      ->check(CLI::IsMember({"subdivision", "power", "omega", "omega-prime"}));
  add_graph_source(functor, functor_in, "-i", "Input");
  functor->add_option("-k", functor_k, "Odd index k")->check(CLI::PositiveNumber);
  functor->add_option("-o,--output", functor_out, "Output graph file (default stdout)");
  add_budget_flags(functor, budgets);
  functor->callback([&] {
    action = [&] {
      const Graph g = load_graph(functor_in);
      const std::size_t k = require_odd(functor_k, "k");
      Graph out;
      if (functor_kind == "subdivision") out = subdivide(g, k).graph;
      else if (functor_kind == "power") out = power(g, k);
      else if (functor_kind == "omega") out = omega(g, k, budgets.vertex).graph;
      else {
        if (k < 3) throw ParameterError("omega-prime needs k >= 3");
        out = omega_prime(g, (k - 1) / 2, budgets.vertex).graph;
      }
      emit(functor_out, to_text(out));
      return kPass;
    };
  });

  // hom
  GraphSource hom_g, hom_h;
  std::string hom_witness, hom_order = "degree", hom_prop = "ac";
  auto* hom = app.add_subcommand("hom", "Decide whether G maps homomorphically to H");
  add_graph_source(hom, hom_g, "-g", "Source");
  add_graph_source(hom, hom_h, "-h", "Target");
  hom->add_option("--witness", hom_witness, "Write the homomorphism as 'm <u> <v>' lines");
  hom->add_option("--order", hom_order, "Variable order")->check(CLI::IsMember({"degree", "input"}));
  hom->add_option("--propagation", hom_prop, "ac (arc consistency) or fc (forward checking)")
      ->check(CLI::IsMember({"ac", "fc"}));
  add_budget_flags(hom, budgets);
  hom->callback([&] {
    action = [&] {
      HomSearchConfig cfg;
      cfg.node_budget = budgets.node;
      cfg.variable_order =
          hom_order == "input" ? HomSearchConfig::VariableOrder::input : HomSearchConfig::VariableOrder::degree_desc;
      cfg.propagation =
          hom_prop == "fc" ? HomSearchConfig::Propagation::forward_check : HomSearchConfig::Propagation::arc_consistency;
      HomSearchStats stats;
      const auto f = hom_exists(load_graph(hom_g), load_graph(hom_h), cfg, &stats);
      std::cout << "hom: " << (f ? "yes" : "no") << "\nnodes: " << stats.nodes << '\n';
      if (f && !hom_witness.empty()) emit(hom_witness, witness_text(*f));
      return f ? kPass : kFail;
    };
  });

  // chromatic
  GraphSource chromatic_in;
  auto* chromatic = app.add_subcommand("chromatic", "Chromatic number of a loopless graph");
  add_graph_source(chromatic, chromatic_in, "-i", "Input");
  add_budget_flags(chromatic, budgets);
  chromatic->callback([&] {
    action = [&] {
      HomSearchConfig cfg;
      cfg.node_budget = budgets.node;
      std::cout << "chromatic: " << chromatic_number(load_graph(chromatic_in), cfg) << '\n';
      return kPass;
    };
  });

  // box
  GraphSource box_in;
  std::string box_out;
  auto* box = app.add_subcommand("box", "Build the box complex Bx(G)");
  add_graph_source(box, box_in, "-i", "Input");
  box->add_option("-o,--output", box_out, "Output complex file (default stdout)");
  box->callback([&] {
    action = [&] {
      const Z2Complex k = build_box(load_graph(box_in));
      if (auto why = k.invariant_violation()) throw ContractError(*why);
      emit(box_out, complex_to_text(k));
      return kPass;
    };
  });

  // homology
  std::string homology_in;
  GraphSource homology_graph;
  auto* homology = app.add_subcommand("homology", "Mod-2 Betti numbers and Euler characteristic");
  auto* hin = homology->add_option("-i", homology_in, "Complex file");
  auto* hg = homology->add_option("-g", homology_graph.path, "Graph file; uses Bx(G)");
  hin->excludes(hg);
  add_budget_flags(homology, budgets);
  homology->callback([&] {
    action = [&] {
      const Z2Complex k = !homology_in.empty() ? read_complex_file(homology_in) : build_box(load_graph(homology_graph));
      const auto chain = ChainComplexGF2::from_simplices(enumerate_simplices(k, budgets.simplex));
      std::cout << "betti: " << betti_text(chain.betti()) << " ; euler: " << chain.euler_characteristic() << '\n';
      return kPass;
    };
  });

  // morse
  GraphSource morse_in;
  std::string morse_lemma = "both", morse_cert;
  std::size_t morse_k = 1;
  auto* morse = app.add_subcommand("morse", "Collapse Bx(Omega'_{2k+1}(G)) and check the results");
  morse->add_option("--lemma", morse_lemma, "52 (onto im phi), 54 (onto Bx(Omega_{2k+1})), or both")
      ->check(CLI::IsMember({"52", "54", "both"}));
  add_graph_source(morse, morse_in, "-i", "Input");
  morse->add_option("-k", morse_k, "k >= 1")->check(CLI::PositiveNumber);
  morse->add_option("--certificate", morse_cert, "Write collapse steps 'x <face> <cofacet>'");
  add_budget_flags(morse, budgets);
  morse->callback([&] {
    action = [&] {
      const Graph g = load_graph(morse_in);
      const OmegaPrimeSetup st = prepare_omega_prime(g, morse_k, budgets.vertex, budgets.simplex);
      const BettiVector before = betti_from_simplices(st.simplices);
      std::cout << "simplices: " << st.simplices.size() << "\nbetti: " << betti_text(before) << '\n';
      std::ostringstream cert;
      bool ok = true;
      auto report = [&](const char* name, const CollapseRun& run) {
        for (const auto& p : run.phases) {
          std::cout << name << ' ' << p.name << ": pairs " << p.matching.pairs.size() << ", removed " << p.removed
                    << '\n';
          write_certificate(cert, p.certificate);
        }
        const bool same_betti = betti_from_simplices(run.result) == before;
        std::cout << name << " exact: " << (run.result_matches_expected ? "yes" : "no")
                  << "\n" << name << " betti preserved: " << (same_betti ? "yes" : "no") << '\n';
        ok = ok && run.result_matches_expected && same_betti;
      };
      if (morse_lemma != "52") report("lemma54", lemma54_collapse(st));
      if (morse_lemma != "54") {
        const CollapseRun run = lemma52_collapse(st);
        report("lemma52", run);
        const bool image_ok = image_subcomplex_matches(st, run.result, budgets.simplex);
        std::cout << "lemma52 image is Bx(Omega_" << 2 * morse_k - 1 << "): " << (image_ok ? "yes" : "no") << '\n';
        ok = ok && image_ok;
      }
      if (!morse_cert.empty()) emit(morse_cert, cert.str());
      return ok ? kPass : kFail;
    };
  });

  // approx
  GraphSource approx_in;
  std::string approx_report_path;
  std::size_t approx_k = 1;
  auto* approx = app.add_subcommand("approx", "Diameters of g-images of simplices of Bx(Omega_{2k+1}(G))");
  add_graph_source(approx, approx_in, "-i", "Input");
  approx->add_option("-k", approx_k, "k >= 1")->check(CLI::PositiveNumber);
  approx->add_option("--report", approx_report_path, "Write per-facet diameters as JSON");
  add_budget_flags(approx, budgets);
  approx->callback([&] {
    action = [&] {
      const auto r = approx_report(load_graph(approx_in), approx_k, budgets.vertex, budgets.simplex);
      std::cout << "max diameter^2: " << r.max_diameter_sq.str() << "\nbound^2 (6D/k)^2: " << r.bound_sq.str()
                << "\nbelow bound: " << (r.below_bound ? "yes" : "no") << "\ncarrier: " << (r.carrier_ok ? "yes" : "no")
                << "\nequivariant: " << (r.equivariant ? "yes" : "no") << '\n';
      if (!approx_report_path.empty()) {
        nlohmann::ordered_json j;
        j["k"] = r.k;
        j["max_degree"] = r.max_degree;
        j["bound_sq"] = r.bound_sq.str();
        j["max_diameter_sq"] = r.max_diameter_sq.str();
        j["below_bound"] = r.below_bound;
        j["carrier"] = r.carrier_ok;
        j["facets"] = nlohmann::ordered_json::array();
        for (const auto& f : r.facets) j["facets"].push_back({{"facet", f.facet}, {"diameter_sq", f.diameter_sq.str()}});
        emit(approx_report_path, j.dump(2) + "\n");
      }
      return r.ok() ? kPass : kFail;
    };
  });

  // verify
  std::string verify_suite = "all", verify_out;
  bool verify_timings = false;
  auto* verify = app.add_subcommand("verify", "Run acceptance suites and print a JSON report");
  std::vector<std::string> suite_names = verify_suites();
  suite_names.push_back("all");
  verify->add_option("suite", verify_suite, "Suite name")->check(CLI::IsMember(suite_names));
  verify->add_flag("--timings", verify_timings, "Include per-check wall times");
  verify->add_option("-o,--output", verify_out, "Report file (default stdout)");
  add_budget_flags(verify, budgets);
  verify->callback([&] {
    action = [&] {
      VerifyOptions o;
      o.vertex_budget = budgets.vertex;
      o.simplex_budget = budgets.simplex;
      o.node_budget = budgets.node;
      o.timings = verify_timings;
      const auto outcome = run_verify(verify_suite, o);
      emit(verify_out, outcome.json);
      std::cerr << "passed " << outcome.passed << ", failed " << outcome.failed << ", incomplete "
                << outcome.incomplete << '\n';
      return outcome.exit_code();
    };
  });

  // convert / show
  std::string convert_in, convert_out;
  auto* convert = app.add_subcommand("convert", "Read a graph or complex file and write it canonically");
  convert->add_option("-i", convert_in, "Input file")->required();
  convert->add_option("-o,--output", convert_out, "Output file (default stdout)");
  convert->callback([&] {
    action = [&] {
      const std::string text = read_text(convert_in);
      emit(convert_out, looks_like_complex(text) ? complex_to_text(complex_from_text(text))
                                                 : to_text(graph_from_text(text)));
      return kPass;
    };
  });

  std::string show_in;
  auto* show = app.add_subcommand("show", "Pretty-print a graph or complex file");
  show->add_option("-i", show_in, "Input file")->required();
  show->callback([&] {
    action = [&] {
      const std::string text = read_text(show_in);
      std::cout << (looks_like_complex(text) ? show_complex(complex_from_text(text)) : show_graph(graph_from_text(text)));
      return kPass;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const ResourceError& e) {
    std::cerr << "incomplete: " << e.what() << '\n';
    return kIncomplete;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractError& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kFail;
  }
}
