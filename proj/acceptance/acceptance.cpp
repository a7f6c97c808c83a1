// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail N]...
//
// Exit status is 0 when the failing criteria are exactly the expected ones.

#include "omegalab/approx.hpp"
#include "omegalab/box.hpp"
#include "omegalab/functors.hpp"
#include "omegalab/hom.hpp"
#include "omegalab/homology.hpp"
#include "omegalab/morse.hpp"
#include "omegalab/omega_collapse.hpp"
#include "oracles.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace omegalab;

namespace {

struct Named {
  std::string name;
  Graph g;
};

std::vector<Named> corpus() {
  return {{"K2", clique(2)},     {"K3", clique(3)},      {"K4", clique(4)},           {"C5", cycle_graph(5)},
          {"C7", cycle_graph(7)}, {"P4", path_graph(4)}, {"Petersen", petersen_graph()}};
}

std::string betti_str(const BettiVector& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

// Each criterion returns an empty string on success, otherwise what went wrong.
using Criterion = std::function<std::string(std::ostringstream& detail)>;

std::string adjointness(std::ostringstream& detail) {
  const auto c = corpus();
  std::size_t checked = 0;
  for (std::size_t k : {3, 5}) {
    std::vector<FunctorResult> gamma, om;
    std::vector<Graph> pw;
    for (const auto& x : c) {
      gamma.push_back(subdivide(x.g, k));
      om.push_back(omega(x.g, k));
      pw.push_back(power(x.g, k));
    }
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) {
        const std::string tag = c[i].name + "," + c[j].name + ",k=" + std::to_string(k);
        // Witnesses validate on construction inside hom_exists.
        if (hom_exists(gamma[i].graph, c[j].g).has_value() != hom_exists(c[i].g, pw[j]).has_value())
          return "Gamma/Pi disagree at " + tag;
        if (hom_exists(pw[i], c[j].g).has_value() != hom_exists(c[i].g, om[j].graph).has_value())
          return "Pi/Omega disagree at " + tag;
        checked += 2;
      }
  }
  detail << checked << " equivalences";
  return {};
}

std::string sphere_betti(std::ostringstream& detail) {
  if (betti_mod2(build_box(clique(2))) != BettiVector{2}) return "Bx(K2)";
  for (std::size_t n = 3; n <= 5; ++n) {
    BettiVector sphere(n - 1, 0);
    sphere.front() = sphere.back() = 1;
    const auto b = betti_mod2(build_box(clique(n)));
    if (b != sphere) return "Bx(K" + std::to_string(n) + ") = " + betti_str(b);
    if (n <= 4) {
      const auto bo = betti_mod2(build_box(omega(clique(n), 3).graph));
      if (bo != b) return "Bx(Omega_3(K" + std::to_string(n) + ")) = " + betti_str(bo);
    }
  }
  detail << "K2..K5 spheres, Omega_3(K3), Omega_3(K4)";
  return {};
}

std::string chromatic(std::ostringstream& detail) {
  for (std::size_t n : {3, 4}) {
    const Graph o = omega(clique(n), 3).graph;
    const std::size_t chi = chromatic_number(o);
    if (chi != n) return "chi(Omega_3(K" + std::to_string(n) + ")) = " + std::to_string(chi);
    const auto walk = min_odd_closed_walk(o);
    if (walk && *walk <= 3) return "short odd walk in Omega_3(K" + std::to_string(n) + ")";
    if (!hom_equivalent(power(o, 3), clique(n)).equivalent()) return "Pi_3(Omega_3(K" + std::to_string(n) + "))";
    detail << "K" << n << ": chi " << chi << ", odd girth " << (walk ? std::to_string(*walk) : "inf") << "; ";
  }
  return {};
}

std::string squarefree(std::ostringstream& detail) {
  std::string failure;
  for (const auto& x : corpus()) {
    if (x.name != "C5" && x.name != "C7" && x.name != "P4" && x.name != "Petersen") continue;
    const auto gamma = subdivide(x.g, 3);
    const auto om = omega(x.g, 3);
    const bool injective = subdivision_embedding(x.g, gamma, om).is_injective();
    squarefree_retraction(x.g, om, gamma);
    const bool equivalent = hom_equivalent(gamma.graph, om.graph).equivalent();
    detail << x.name << ": |Gamma_3| " << gamma.graph.order() << ", |Omega_3| " << om.graph.order()
           << ", injective " << (injective ? "yes" : "no") << ", equivalent " << (equivalent ? "yes" : "no") << "; ";
    if (!injective && failure.empty())
      failure = x.name + " embedding not injective (" + std::to_string(gamma.graph.order()) + " > " +
                std::to_string(om.graph.order()) + " vertices: a leaf collapses rows 0 and 2)";
    if (!equivalent && failure.empty()) failure = x.name + " not homomorphically equivalent";
  }
  return failure;
}

std::string morse(std::ostringstream& detail) {
  for (const auto& x : corpus()) {
    if (x.name != "K2" && x.name != "K3" && x.name != "C5" && x.name != "K4") continue;
    const auto r = theorem55_pipeline(x.g, 1);
    const auto bg = betti_mod2(build_box(x.g));
    if (!r.ok()) return x.name + " pipeline check failed";
    if (r.betti_omega_prev != bg) return x.name + " Bx(Omega_1) differs from Bx(G)";
    detail << x.name << " " << betti_str(r.betti_omega_prime) << "; ";
  }
  return {};
}

std::string collapse_invariance(std::ostringstream& detail) {
  std::mt19937_64 rng(20240);
  std::size_t pairs = 0, cyclic = 0;
  for (int i = 0; i < 200; ++i) {
    const auto k = oracle::random_free_complex(rng, 3 + i % 8, 3 + i % 5);
    const auto all_list = enumerate_simplices(k);
    const SimplexSet all(all_list.begin(), all_list.end());
    SimplexSet sub = all;
    const auto m = oracle::random_collapses(k, sub, rng, 20);
    if (!is_acyclic(m) || oracle::has_cycle(m)) return "generated collapse matching reported cyclic";
    const auto cert = collapse(k, all, sub, m);
    if (betti_from_simplices(cert.result) != betti_mod2(k)) return "Betti changed by a collapse";
    pairs += m.pairs.size();
    const auto r = oracle::random_matching(k, rng);
    const bool cyc = oracle::has_cycle(r);
    cyclic += cyc;
    if (is_acyclic(r) == cyc) return "is_acyclic disagrees with closure search";
  }
  detail << "200 collapses (" << pairs << " pairs), 200 arbitrary matchings (" << cyclic << " cyclic)";
  return {};
}

std::string kunneth(std::ostringstream& detail) {
  struct Case {
    Graph g, h;
    BettiVector expect;
  };
  for (const auto& c : {Case{clique(2), clique(2), {4}}, Case{clique(3), clique(3), {1, 2, 1}},
                        Case{clique(3), cycle_graph(5), {1, 2, 1}}}) {
    const auto product = betti_mod2(build_box(tensor_product(c.g, c.h)));
    const auto conv = betti_convolution(betti_mod2(build_box(c.g)), betti_mod2(build_box(c.h)));
    if (product != c.expect || conv != c.expect) return "got " + betti_str(product) + " vs " + betti_str(conv);
    detail << betti_str(product) << " ";
  }
  return {};
}

std::string approximation(std::ostringstream& detail) {
  struct Case {
    std::string name;
    Graph g;
    std::size_t k;
  };
  for (const auto& c : {Case{"K2", clique(2), 5}, Case{"K3", clique(3), 2}, Case{"C5", cycle_graph(5), 4}}) {
    const auto r = approx_report(c.g, c.k);
    if (!r.below_bound) return c.name + " diameter above 6D/k";
    if (!r.carrier_ok) return c.name + " carrier check failed";
    if (!r.ok()) return c.name + " equivariance or denominators";
    detail << c.name << " k=" << c.k << ": " << r.max_diameter_sq << " < " << r.bound_sq << "; ";
  }
  if (!(approx_report(clique(2), 5).bound_sq < 2)) return "K2 bound is vacuous";
  return {};
}

std::string solver_oracle(std::ostringstream& detail) {
  std::mt19937_64 rng(300);
  std::uniform_int_distribution<std::size_t> gn(1, 6), hn(1, 5);
  std::size_t yes = 0;
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(rng, gn(rng), 0.45, 0.1);
    const Graph h = oracle::random_graph(rng, hn(rng), 0.45, 0.1);
    const bool expect = oracle::hom_exists(g, h);
    if (hom_exists(g, h).has_value() != expect) return "mismatch on pair " + std::to_string(i);
    yes += expect;
  }
  detail << "300 pairs, " << yes << " homomorphic";
  return {};
}

std::string capture(const std::string& cmd, int& code) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string determinism(std::ostringstream& detail) {
  const std::string cmd = std::string(OMEGALAB_BIN) + " verify all 2>/dev/null";
  int c1 = -1, c2 = -1;
  const std::string a = capture(cmd, c1);
  const std::string b = capture(cmd, c2);
  if (a.empty()) return "no report produced";
  if (a != b) return "reports differ";
  if (c1 != c2) return "exit codes differ";
  detail << a.size() << " identical bytes, exit " << c1;
  return {};
}

} // namespace

int main(int argc, char** argv) {
  std::set<int> expected_fail;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      expected_fail.insert(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N]...\n";
      return 64;
    }
  }

  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"adjointness over the corpus", adjointness},
      {"sphere Betti numbers", sphere_betti},
      {"chromatic claims for Omega_3(K_n)", chromatic},
      {"square-free equivalence and embedding", squarefree},
      {"Morse collapses of Bx(Omega'_3)", morse},
      {"collapse invariance and acyclicity oracle", collapse_invariance},
      {"Kunneth shadow", kunneth},
      {"approximation bound", approximation},
      {"solver vs brute force", solver_oracle},
      {"verify determinism", determinism},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    std::ostringstream detail;
    std::string why;
    const auto start = std::chrono::steady_clock::now();
    try {
      why = criteria[i].second(detail);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!why.empty()) failed.insert(id);
    std::printf("%s %d %s [%.1fs]: %s\n", why.empty() ? "PASS" : "FAIL", id, criteria[i].first.c_str(), secs,
                why.empty() ? detail.str().c_str() : (why + " | " + detail.str()).c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  if (failed != expected_fail) {
    std::printf("failing set differs from the expected set\n");
    return 1;
  }
  return 0;
}
