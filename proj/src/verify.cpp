#include "omegalab/verify.hpp"

#include "omegalab/approx.hpp"
#include "omegalab/box.hpp"
#include "omegalab/errors.hpp"
#include "omegalab/functors.hpp"
#include "omegalab/hom.hpp"
#include "omegalab/homology.hpp"
#include "omegalab/morse.hpp"
#include "omegalab/omega_collapse.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <thread>

namespace omegalab {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "omegalab-verify/1";
constexpr const char* kTool = "omegalab 0.1.0";

struct Check {
  std::string name;
  std::string claim;
  json inputs = json::object();
  json expected = json::object();
  json actual = json::object();
  std::string status = "fail";
  double seconds = 0;
};

using Task = std::function<Check()>;

struct Named {
  std::string name;
  Graph graph;
};

std::vector<Named> corpus() {
  return {{"K2", clique(2)},     {"K3", clique(3)},     {"K4", clique(4)},        {"C5", cycle_graph(5)},
          {"C7", cycle_graph(7)}, {"P4", path_graph(4)}, {"Petersen", petersen_graph()}};
}

Graph corpus_graph(const std::string& name) {
  for (auto& c : corpus())
    if (c.name == name) return c.graph;
  throw ParameterError("unknown corpus graph " + name);
}

json betti_json(const BettiVector& b) { return json(b); }

HomSearchConfig search_config(const VerifyOptions& o) {
  HomSearchConfig cfg;
  cfg.node_budget = o.node_budget;
  return cfg;
}

Check pass_if(Check c, bool ok) {
  c.status = ok ? "pass" : "fail";
  return c;
}

// --- independent brute-force references -------------------------------------------------

bool brute_force_hom(const Graph& g, const Graph& h) {
  const std::size_t n = g.order(), m = h.order();
  if (n == 0) return true;
  if (m == 0) return false;
  std::vector<std::size_t> map(n, 0);
  while (true) {
    if (is_homomorphism(g, h, map)) return true;
    std::size_t i = 0;
    while (i < n && ++map[i] == m) map[i++] = 0;
    if (i == n) return false;
  }
}

Graph random_graph(std::mt19937_64& rng, std::size_t n) {
  Graph g(n);
  std::bernoulli_distribution edge(0.5), loop(0.1);
  for (std::size_t u = 0; u < n; ++u) {
    if (loop(rng)) g.add_edge(u, u);
    for (std::size_t v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  }
  return g;
}

struct RandomComplex {
  Z2Complex complex;
  SimplexSet simplices;
};

RandomComplex random_free_complex(std::mt19937_64& rng) {
  const std::size_t m = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
  std::vector<VertexToken> tokens;
  for (std::size_t v = 0; v < m; ++v) {
    tokens.push_back({v, Shore::circ});
    tokens.push_back({v, Shore::bullet});
  }
  std::vector<Simplex> facets;
  const std::size_t count = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  std::uniform_int_distribution<int> pick(0, 2);
  for (std::size_t f = 0; f < count; ++f) {
    Simplex s, mirror;
    for (std::uint32_t v = 0; v < m; ++v) {
      const int c = pick(rng);
      if (c == 0) continue;
      s.push_back(2 * v + (c == 1 ? 0 : 1));
      mirror.push_back(2 * v + (c == 1 ? 1 : 0));
    }
    if (s.empty()) continue;
    facets.push_back(s);
    facets.push_back(mirror);
  }
  if (facets.empty()) facets = {{0}, {1}};
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  RandomComplex r{Z2Complex(tokens, facets), {}};
  for (auto& s : enumerate_simplices(facets)) r.simplices.insert(std::move(s));
  return r;
}

std::vector<Simplex> cofacets_in(const SimplexSet& set, const Simplex& s, std::size_t num_vertices) {
  std::vector<Simplex> out;
  for (std::uint32_t v = 0; v < num_vertices; ++v) {
    if (std::binary_search(s.begin(), s.end(), v)) continue;
    Simplex t = s;
    t.insert(std::upper_bound(t.begin(), t.end(), v), v);
    if (set.count(t)) out.push_back(std::move(t));
  }
  return out;
}

// Random sequence of equivariant elementary collapses, returned as a matching.
MorseMatching random_collapse_matching(const RandomComplex& rc, std::mt19937_64& rng, SimplexSet& remaining) {
  remaining = rc.simplices;
  MorseMatching m;
  std::bernoulli_distribution stop(0.1);
  while (!stop(rng)) {
    std::vector<MorsePair> free;
    for (const auto& s : sorted_simplices(remaining)) {
      auto up = cofacets_in(remaining, s, rc.complex.num_vertices());
      if (up.size() == 1) free.push_back({s, up[0]});
    }
    if (free.empty()) break;
    const auto p = free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
    const MorsePair q{rc.complex.mirror(p.lower), rc.complex.mirror(p.upper)};
    for (const auto& pair : {p, q}) {
      remaining.erase(pair.upper);
      remaining.erase(pair.lower);
      m.pairs.push_back(pair);
    }
  }
  return m;
}

bool strictly_below(const Simplex& a, const Simplex& b) {
  return a.size() + 1 == b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Searches every simple sequence s1 -> s2 -> ... -> s1 directly.
bool brute_force_has_cycle(const MorseMatching& m) {
  const std::size_t n = m.pairs.size();
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t, std::size_t, std::size_t)> extend = [&](std::size_t start, std::size_t cur,
                                                                          std::size_t len) {
    for (std::size_t next = 0; next < n; ++next) {
      if (next == cur || !strictly_below(m.pairs[next].lower, m.pairs[cur].upper)) continue;
      if (next == start && len >= 2) return true;
      if (used[next]) continue;
      used[next] = true;
      const bool found = extend(start, next, len + 1);
      used[next] = false;
      if (found) return true;
    }
    return false;
  };
  for (std::size_t s = 0; s < n; ++s) {
    used.assign(n, false);
    used[s] = true;
    if (extend(s, s, 1)) return true;
  }
  return false;
}

MorseMatching random_matching(const RandomComplex& rc, std::mt19937_64& rng) {
  std::vector<MorsePair> candidates;
  for (const auto& s : sorted_simplices(rc.simplices))
    for (auto& t : cofacets_in(rc.simplices, s, rc.complex.num_vertices())) candidates.push_back({s, t});
  std::shuffle(candidates.begin(), candidates.end(), rng);
  const std::size_t limit = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
  SimplexSet used;
  MorseMatching m;
  for (const auto& c : candidates) {
    if (m.pairs.size() == limit) break;
    if (used.count(c.lower) || used.count(c.upper)) continue;
    used.insert(c.lower);
    used.insert(c.upper);
    m.pairs.push_back(c);
  }
  return m;
}

// --- suites ------------------------------------------------------------------------------

std::vector<Task> adjointness_suite(const VerifyOptions& o) {
  std::vector<Task> tasks;
  for (std::size_t k : {3, 5})
    for (const auto& g : corpus())
      for (const auto& h : corpus())
        tasks.push_back([=, &o]() {
          Check c;
          c.name = "adjoint k=" + std::to_string(k) + " " + g.name + " -> " + h.name;
          c.claim = "Gamma_k -| Pi_k and Pi_k -| Omega_k";
          c.inputs = {{"G", g.name}, {"H", h.name}, {"k", k}};
          c.expected = {{"gamma_pi_agree", true}, {"pi_omega_agree", true}, {"witnesses_transfer", true}};
          const auto cfg = search_config(o);
          const bool gamma_to_h = hom_exists(subdivide(g.graph, k).graph, h.graph, cfg).has_value();
          const bool g_to_power = hom_exists(g.graph, power(h.graph, k), cfg).has_value();
          const FunctorResult om = omega(h.graph, k, o.vertex_budget);
          const auto power_to_h = hom_exists(power(g.graph, k), h.graph, cfg);
          const auto g_to_omega = hom_exists(g.graph, om.graph, cfg);
          if (power_to_h) adjoint_witness_to_omega(g.graph, h.graph, k, *power_to_h, om);
          if (g_to_omega) adjoint_witness_from_omega(g.graph, h.graph, k, *g_to_omega, om);
          c.actual = {{"gamma_to_H", gamma_to_h},
                      {"G_to_power", g_to_power},
                      {"power_to_H", power_to_h.has_value()},
                      {"G_to_omega", g_to_omega.has_value()}};
          return pass_if(std::move(c), gamma_to_h == g_to_power && power_to_h.has_value() == g_to_omega.has_value());
        });
  tasks.push_back([&o]() {
    Check c;
    c.name = "solver vs brute force";
    c.claim = "hom_exists is sound and complete";
    c.inputs = {{"pairs", 300}, {"max_G", 6}, {"max_H", 5}, {"seed", 2024}};
    c.expected = {{"disagreements", 0}};
    std::mt19937_64 rng(2024);
    std::size_t disagreements = 0, yes = 0;
    for (int i = 0; i < 300; ++i) {
      const Graph g = random_graph(rng, std::uniform_int_distribution<std::size_t>(1, 6)(rng));
      const Graph h = random_graph(rng, std::uniform_int_distribution<std::size_t>(1, 5)(rng));
      const bool fast = hom_exists(g, h, search_config(o)).has_value();
      yes += fast;
      disagreements += fast != brute_force_hom(g, h);
    }
    c.actual = {{"disagreements", disagreements}, {"homomorphic_pairs", yes}};
    return pass_if(std::move(c), disagreements == 0);
  });
  return tasks;
}

std::vector<Task> betti_suite(const VerifyOptions& o) {
  std::vector<Task> tasks;
  auto sphere = [](std::size_t n) {
    if (n == 2) return BettiVector{2};
    BettiVector b(n - 1, 0);
    b.front() = 1;
    b.back() = 1;
    return b;
  };
  for (std::size_t n = 2; n <= 5; ++n)
    tasks.push_back([=, &o]() {
      Check c;
      c.name = "Bx(K" + std::to_string(n) + ")";
      c.claim = "Bx(K_n) is an (n-2)-sphere";
      c.inputs = {{"G", "K" + std::to_string(n)}};
      c.expected = {{"betti", betti_json(sphere(n))}};
      const Z2Complex bx = build_box(clique(n));
      const auto b = betti_mod2(bx, o.simplex_budget);
      const auto chi = euler_characteristic(bx, o.simplex_budget);
      c.actual = {{"betti", betti_json(b)}, {"euler", chi}, {"free", bx.is_free()}};
      return pass_if(std::move(c), b == sphere(n) && chi == alternating_sum(b) && bx.is_free());
    });
  for (std::size_t n = 3; n <= 4; ++n)
    tasks.push_back([=, &o]() {
      Check c;
      c.name = "Bx(Omega_3(K" + std::to_string(n) + "))";
      c.claim = "Bx(Omega_{2k+1}(G)) is Z2-homotopy equivalent to Bx(G)";
      c.inputs = {{"G", "K" + std::to_string(n)}, {"k", 3}};
      c.expected = {{"betti", betti_json(sphere(n))}};
      const auto b = betti_mod2(build_box(omega(clique(n), 3, o.vertex_budget).graph), o.simplex_budget);
      c.actual = {{"betti", betti_json(b)}};
      return pass_if(std::move(c), b == sphere(n));
    });
  return tasks;
}

std::vector<Task> chromatic_suite(const VerifyOptions& o) {
  std::vector<Task> tasks;
  for (std::size_t n = 3; n <= 4; ++n)
    tasks.push_back([=, &o]() {
      Check c;
      c.name = "Omega_3(K" + std::to_string(n) + ")";
      c.claim = "Omega_3(K_n) is n-chromatic, has odd girth > 3, and Pi_3(Omega_3(K_n)) <-> K_n";
      c.inputs = {{"n", n}};
      c.expected = {{"chromatic_number", n}, {"odd_girth_above", 3}, {"power_equivalent", true}};
      const auto cfg = search_config(o);
      const Graph om = omega(clique(n), 3, o.vertex_budget).graph;
      const std::size_t chi = chromatic_number(om, cfg);
      const auto girth = min_odd_closed_walk(om);
      const bool equivalent = hom_equivalent(power(om, 3), clique(n), cfg).equivalent();
      c.actual = {{"chromatic_number", chi},
                  {"odd_girth", girth ? json(*girth) : json(nullptr)},
                  {"power_equivalent", equivalent}};
      return pass_if(std::move(c), chi == n && (!girth || *girth > 3) && equivalent);
    });
  return tasks;
}

std::vector<Task> squarefree_suite(const VerifyOptions& o) {
  std::vector<Task> tasks;
  for (const std::string name : {"C5", "C7", "P4", "Petersen"})
    tasks.push_back([=, &o]() {
      Check c;
      c.name = "Gamma_3 vs Omega_3 on " + name;
      c.claim = "Gamma_k(G) embeds in Omega_k(G), and they are equivalent when G is square-free";
      c.inputs = {{"G", name}, {"k", 3}};
      c.expected = {{"embedding_injective", true}, {"retraction_valid", true}, {"equivalent", true}};
      const Graph g = corpus_graph(name);
      const FunctorResult gamma = subdivide(g, 3);
      const FunctorResult om = omega(g, 3, o.vertex_budget);
      const bool injective = subdivision_embedding(g, gamma, om).is_injective();
      squarefree_retraction(g, om, gamma);
      const bool equivalent = hom_equivalent(gamma.graph, om.graph, search_config(o)).equivalent();
      c.actual = {{"embedding_injective", injective}, {"retraction_valid", true}, {"equivalent", equivalent}};
      return pass_if(std::move(c), injective && equivalent);
    });
  return tasks;
}

std::vector<Task> morse_suite(const VerifyOptions& o) {
  std::vector<Task> tasks;
  for (const std::string name : {"K2", "K3", "C5", "K4"})
    tasks.push_back([=, &o]() {
      Check c;
      c.name = "collapses of Bx(Omega'_3(" + name + "))";
      c.claim = "Bx(Omega_{2k+1}(G)) and Bx(Omega_{2k-1}(G)) are Z2-simple homotopy equivalent";
      c.inputs = {{"G", name}, {"k", 1}};
      c.expected = {{"betti_equal", true}, {"collapses_exact", true}, {"classifier_mismatches", 0}};
      const auto r = theorem55_pipeline(corpus_graph(name), 1, o.vertex_budget, o.simplex_budget);
      c.actual = {{"betti_omega_prime", betti_json(r.betti_omega_prime)},
                  {"betti_omega", betti_json(r.betti_omega)},
                  {"betti_previous", betti_json(r.betti_omega_prev)},
                  {"simplices", r.simplices_omega_prime},
                  {"hard_collapse_pairs", {r.lemma54_pairs[0], r.lemma54_pairs[1], r.lemma54_pairs[2]}},
                  {"easy_collapse_pairs", r.lemma52_pairs},
                  {"hard_collapse_exact", r.lemma54_reaches_target},
                  {"easy_collapse_exact", r.lemma52_reaches_image},
                  {"image_is_previous_box", r.image_is_previous_box},
                  {"collapses_preserve_betti", r.collapses_preserve_betti},
                  {"classifier_mismatches", r.classifier.mismatches}};
      return pass_if(std::move(c), r.ok());
    });
  tasks.push_back([]() {
    Check c;
    c.name = "random collapses";
    c.claim = "acyclic Z2-matchings collapse onto the unmatched subcomplex";
    c.inputs = {{"trials", 200}, {"seed", 7}};
    c.expected = {{"failures", 0}};
    std::mt19937_64 rng(7);
    std::size_t failures = 0, pairs = 0;
    for (int t = 0; t < 200; ++t) {
      const RandomComplex rc = random_free_complex(rng);
      SimplexSet remaining;
      const MorseMatching m = random_collapse_matching(rc, rng, remaining);
      pairs += m.pairs.size();
      bool ok = is_acyclic(m);
      if (ok) {
        const auto cert = collapse(rc.complex, rc.simplices, remaining, m);
        ok = cert.result == sorted_simplices(remaining) &&
             betti_from_simplices(sorted_simplices(rc.simplices)) == betti_from_simplices(cert.result);
      }
      failures += !ok;
    }
    c.actual = {{"failures", failures}, {"pairs", pairs}};
    return pass_if(std::move(c), failures == 0);
  });
  tasks.push_back([]() {
    Check c;
    c.name = "acyclicity vs brute force";
    c.claim = "is_acyclic detects exactly the cyclic containment sequences";
    c.inputs = {{"trials", 200}, {"max_pairs", 12}, {"seed", 11}};
    c.expected = {{"disagreements", 0}};
    std::mt19937_64 rng(11);
    std::size_t disagreements = 0, cyclic = 0;
    for (int t = 0; t < 200; ++t) {
      const RandomComplex rc = random_free_complex(rng);
      const MorseMatching m = random_matching(rc, rng);
      const bool has_cycle = brute_force_has_cycle(m);
      cyclic += has_cycle;
      disagreements += is_acyclic(m) == has_cycle;
    }
    c.actual = {{"disagreements", disagreements}, {"cyclic", cyclic}};
    return pass_if(std::move(c), disagreements == 0);
  });
  return tasks;
}

std::vector<Task> kunneth_suite(const VerifyOptions& o) {
  std::vector<Task> tasks;
  const std::vector<std::tuple<std::string, std::string, BettiVector>> cases = {
      {"K2", "K2", {4}}, {"K3", "K3", {1, 2, 1}}, {"K3", "C5", {1, 2, 1}}};
  for (const auto& [a, b, expected] : cases)
    tasks.push_back([=, &o]() {
      Check c;
      c.name = "Bx(" + a + " x " + b + ")";
      c.claim = "Bx(G x H) is Z2-homotopy equivalent to Bx(G) x Bx(H)";
      c.inputs = {{"G", a}, {"H", b}};
      c.expected = {{"betti", betti_json(expected)}};
      const Graph g = corpus_graph(a), h = corpus_graph(b);
      const auto product = betti_mod2(build_box(tensor_product(g, h)), o.simplex_budget);
      const auto convolved =
          betti_convolution(betti_mod2(build_box(g), o.simplex_budget), betti_mod2(build_box(h), o.simplex_budget));
      c.actual = {{"betti", betti_json(product)}, {"convolution", betti_json(convolved)}};
      return pass_if(std::move(c), product == expected && convolved == expected);
    });
  return tasks;
}

std::vector<Task> approx_suite(const VerifyOptions& o) {
  std::vector<Task> tasks;
  const std::vector<std::pair<std::string, std::size_t>> cases = {{"K2", 5}, {"K3", 2}, {"C5", 4}};
  for (const auto& [name, k] : cases)
    tasks.push_back([=, &o]() {
      Check c;
      c.name = "g on Bx(Omega_" + std::to_string(2 * k + 1) + "(" + name + "))";
      c.claim = "g maps every simplex to a set of diameter below 6D/k and is carried by Bx(G)";
      c.inputs = {{"G", name}, {"k", k}};
      c.expected = {{"below_bound", true}, {"carrier", true}};
      const auto r = approx_report(corpus_graph(name), k, o.vertex_budget, o.simplex_budget);
      c.actual = {{"max_diameter_sq", r.max_diameter_sq.str()},
                  {"bound_sq", r.bound_sq.str()},
                  {"facets", r.facets.size()},
                  {"below_bound", r.below_bound},
                  {"carrier", r.carrier_ok},
                  {"equivariant", r.equivariant},
                  {"denominators_ok", r.denominators_ok}};
      return pass_if(std::move(c), r.ok());
    });
  return tasks;
}

std::vector<Task> suite_tasks(const std::string& suite, const VerifyOptions& o) {
  if (suite == "adjointness") return adjointness_suite(o);
  if (suite == "betti") return betti_suite(o);
  if (suite == "chromatic") return chromatic_suite(o);
  if (suite == "squarefree") return squarefree_suite(o);
  if (suite == "morse") return morse_suite(o);
  if (suite == "kunneth") return kunneth_suite(o);
  if (suite == "approx") return approx_suite(o);
  throw ParameterError("unknown suite '" + suite + "'");
}

Check run_task(const Task& task) {
  const auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    c = task();
  } catch (const ResourceError& e) {
    c.status = "incomplete";
    c.actual = {{"error", e.what()}};
  } catch (const std::exception& e) {
    c.status = "fail";
    c.actual = {{"error", e.what()}};
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

std::string fingerprint() {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& v : omega(clique(4), 5).omega_vertices) {
    for (char ch : v.label() + "\n") {
      h ^= static_cast<unsigned char>(ch);
      h *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace

std::size_t worker_count() {
  if (const char* env = std::getenv("OMEGALAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  for (auto& t : pool) t.join();
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites = {"adjointness", "betti",   "chromatic", "squarefree",
                                                  "morse",       "kunneth", "approx"};
  return suites;
}

VerifyOutcome run_verify(const std::string& suite, const VerifyOptions& options) {
  std::vector<std::string> selected;
  if (suite == "all") {
    selected = verify_suites();
  } else {
    suite_tasks(suite, options);
    selected = {suite};
  }

  VerifyOutcome out;
  json report;
  report["schema"] = kSchema;
  report["tool"] = kTool;
  report["fingerprint"] = fingerprint();
  report["suites"] = json::array();
  for (const auto& name : selected) {
    const auto tasks = suite_tasks(name, options);
    std::vector<Check> results(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t i) { results[i] = run_task(tasks[i]); });

    json s;
    s["suite"] = name;
    std::string status = "pass";
    s["checks"] = json::array();
    for (const auto& c : results) {
      json entry;
      entry["name"] = c.name;
      entry["claim"] = c.claim;
      entry["inputs"] = c.inputs;
      entry["expected"] = c.expected;
      entry["actual"] = c.actual;
      entry["status"] = c.status;
      if (options.timings) entry["seconds"] = c.seconds;
      s["checks"].push_back(std::move(entry));
      if (c.status == "pass") {
        ++out.passed;
      } else if (c.status == "incomplete") {
        ++out.incomplete;
        if (status == "pass") status = "incomplete";
      } else {
        ++out.failed;
        status = "fail";
      }
    }
    s["status"] = status;
    report["suites"].push_back(std::move(s));
  }
  report["summary"] = {{"passed", out.passed}, {"failed", out.failed}, {"incomplete", out.incomplete}};
  report["status"] = out.failed ? "fail" : out.incomplete ? "incomplete" : "pass";
  out.json = report.dump(2) + "\n";
  return out;
}

} // namespace omegalab
