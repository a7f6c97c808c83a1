#include "omegalab/omega_collapse.hpp"

#include "omegalab/errors.hpp"

#include <algorithm>
#include <functional>

namespace omegalab {
namespace {

struct Choice {
  std::size_t a = 0;
  std::size_t c = 0;
  Shore shore = Shore::circ;
  auto key() const { return std::tuple(a, c, static_cast<int>(shore)); }
  friend bool operator==(const Choice& x, const Choice& y) { return x.key() == y.key(); }
};

using Chooser = std::function<std::optional<Choice>(const Simplex&)>;
using Partner = std::function<Simplex(const Simplex&, const Choice&)>;

const std::vector<std::size_t>& side(const std::pair<std::vector<std::size_t>, std::vector<std::size_t>>& sh, Shore s) {
  return s == Shore::circ ? sh.first : sh.second;
}

void keep_min(std::optional<Choice>& best, const Choice& c) {
  if (!best || c.key() < best->key()) best = c;
}

std::optional<Choice> same_shore_choice(const OmegaPrimeSetup& st, const Simplex& s, bool outside_image_only) {
  const auto sh = st.shores(s);
  std::optional<Choice> best;
  for (Shore shore : {Shore::circ, Shore::bullet}) {
    const auto& members = side(sh, shore);
    for (auto a : members) {
      if (outside_image_only && st.in_image[a]) continue;
      for (auto c : members)
        if (st.clash_last_prev[a].test(c)) keep_min(best, {a, c, shore});
    }
  }
  return best;
}

std::optional<Choice> cross_shore_choice(const OmegaPrimeSetup& st, const Simplex& s) {
  const auto sh = st.shores(s);
  std::optional<Choice> best;
  for (Shore shore : {Shore::circ, Shore::bullet})
    for (auto x : side(sh, shore))
      for (auto y : side(sh, opposite(shore)))
        if (st.clash_last_last[x].test(y)) keep_min(best, {x, y, shore});
  return best;
}

Simplex toggle(const OmegaPrimeSetup& st, const Simplex& s, const OmegaVertex& t, Shore shore) {
  auto idx = st.omega_prime.index_of(t);
  if (!idx) throw ContractError("A* = " + t.label() + " is not a vertex, at simplex " + simplex_to_string(s));
  auto id = st.box.id_of({*idx, shore});
  if (!id) throw ContractError("A* = " + t.label() + " is isolated, at simplex " + simplex_to_string(s));
  Simplex out = s;
  auto it = std::lower_bound(out.begin(), out.end(), *id);
  if (it != out.end() && *it == *id)
    out.erase(it);
  else
    out.insert(it, *id);
  return out;
}

OmegaVertex with_last(const OmegaVertex& a, VertexSet last) {
  OmegaVertex t = a;
  t.sets.back() = std::move(last);
  return t;
}

Simplex same_shore_partner(const OmegaPrimeSetup& st, const Simplex& s, const Choice& ch) {
  const auto sh = st.shores(s);
  const std::size_t k = st.k;
  VertexSet S = st.base.empty_set();
  for (auto a : side(sh, ch.shore)) S |= st.tuple(a).sets[k - 1];
  for (auto b : side(sh, opposite(ch.shore)))
    if (!st.in_image[b]) S |= st.tuple(b).sets[k];
  VertexSet last = common_neighborhood(st.base, S);
  if (last.none()) throw ContractError("CN(S) is empty at simplex " + simplex_to_string(s));
  return toggle(st, s, with_last(st.tuple(ch.a), std::move(last)), ch.shore);
}

Simplex cross_shore_partner(const OmegaPrimeSetup& st, const Simplex& s, const Choice& ch) {
  const auto sh = st.shores(s);
  VertexSet last = st.base.empty_set();
  for (auto b : side(sh, opposite(ch.shore))) last |= st.tuple(b).sets[st.k - 1];
  return toggle(st, s, with_last(st.tuple(ch.a), std::move(last)), ch.shore);
}

PhaseResult run_phase(const OmegaPrimeSetup& st, std::string name, SimplexSet& current, const Chooser& choose,
                      const Partner& partner) {
  PhaseResult phase;
  phase.name = std::move(name);
  SimplexSet domain;
  for (const auto& s : current)
    if (choose(s)) domain.insert(s);

  for (const auto& s : sorted_simplices(domain)) {
    const Choice ch = *choose(s);
    const Simplex t = partner(s, ch);
    if (!current.count(t))
      throw ContractError(phase.name + ": partner of " + simplex_to_string(s) + " is not a simplex of the complex");
    if (!domain.count(t))
      throw ContractError(phase.name + ": partner of " + simplex_to_string(s) + " leaves the phase domain");
    const auto back = choose(t);
    if (!back || !(*back == ch) || partner(t, *back) != s)
      throw ContractError(phase.name + ": matching is not an involution at " + simplex_to_string(s));
    if (s.size() < t.size()) phase.matching.pairs.push_back({s, t});
  }
  if (!is_acyclic(phase.matching)) throw ContractError(phase.name + ": matching is not acyclic");

  SimplexSet sub;
  for (const auto& s : current)
    if (!domain.count(s)) sub.insert(s);
  phase.certificate = collapse(st.box, current, sub, phase.matching);
  phase.removed = domain.size();
  current = std::move(sub);
  return phase;
}

SimplexSet all_simplices(const OmegaPrimeSetup& st) { return SimplexSet(st.simplices.begin(), st.simplices.end()); }

} // namespace

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> OmegaPrimeSetup::shores(const Simplex& s) const {
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> out;
  for (auto id : s) {
    const auto& t = box.token(id);
    (t.shore == Shore::circ ? out.first : out.second).push_back(t.graph_vertex);
  }
  return out;
}

OmegaPrimeSetup prepare_omega_prime(const Graph& g, std::size_t k, std::size_t vertex_budget,
                                    std::size_t simplex_budget) {
  if (k < 1) throw ParameterError("k must be at least 1");
  if (g.has_loops()) throw ParameterError("the collapse lemmas need a loopless graph");
  OmegaPrimeSetup st;
  st.base = g;
  st.k = k;
  st.omega_prime = omega_prime(g, k, vertex_budget);
  const FunctorResult om = omega(g, 2 * k + 1, vertex_budget);
  if (om.omega_vertices != st.omega_prime.omega_vertices) throw ContractError("Omega and Omega' vertex orders differ");
  st.omega_graph = om.graph;
  st.box = build_box(st.omega_prime.graph);
  st.target = build_box(st.omega_graph);
  st.in_image = phi_image(g, st.omega_prime);

  const auto& tuples = st.omega_prime.omega_vertices;
  const std::size_t n = tuples.size();
  st.phi_index.resize(n);
  for (std::size_t i = 0; i < n; ++i) st.phi_index[i] = *st.omega_prime.index_of(phi(g, tuples[i]));
  st.clash_last_last.assign(n, Bitset(n));
  st.clash_last_prev.assign(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a) {
    const VertexSet cn = common_neighborhood(g, tuples[a].sets[k]);
    for (std::size_t c = 0; c < n; ++c) {
      if (!tuples[c].sets[k].is_subset_of(cn)) st.clash_last_last[a].set(c);
      if (!tuples[c].sets[k - 1].is_subset_of(cn)) st.clash_last_prev[a].set(c);
    }
  }
  st.simplices = enumerate_simplices(st.box, simplex_budget);
  return st;
}

OffenseClass classify_simplex(const OmegaPrimeSetup& st, const Simplex& s) {
  const auto sh = st.shores(s);
  OffenseClass out;
  for (auto a : sh.first)
    for (auto b : sh.second)
      if (st.clash_last_last[a].test(b)) out.type_i = true;
  for (const auto* members : {&sh.first, &sh.second})
    for (auto a : *members)
      for (auto c : *members)
        if (st.clash_last_prev[a].test(c)) out.type_ii = true;
  return out;
}

bool in_target(const OmegaPrimeSetup& st, const Simplex& s) {
  const std::size_t n = st.omega_graph.order();
  auto [circ, bullet] = shores_of(st.box, s, n);
  const bool by_graph = is_box_simplex(st.omega_graph, circ, bullet);
  Simplex translated;
  bool by_facets = true;
  for (auto id : s) {
    auto t = st.target.id_of(st.box.token(id));
    if (!t) {
      by_facets = false;
      break;
    }
    translated.push_back(*t);
  }
  std::sort(translated.begin(), translated.end());
  by_facets = by_facets && st.target.contains(translated);
  if (by_graph != by_facets) throw ContractError("target membership disagrees at " + simplex_to_string(s));
  return by_graph;
}

ClassifierReport check_classifier(const OmegaPrimeSetup& st) {
  ClassifierReport r;
  for (const auto& s : st.simplices) {
    ++r.simplices;
    const auto cls = classify_simplex(st, s);
    r.type_i += cls.type_i;
    r.type_ii += cls.type_ii;
    r.both += cls.type_i && cls.type_ii;
    const bool outside = !in_target(st, s);
    r.outside_target += outside;
    r.mismatches += outside != cls.offending();
  }
  return r;
}

MorseMatching lemma52_matching(const OmegaPrimeSetup& st) {
  MorseMatching m;
  for (const auto& s : st.simplices) {
    const auto sh = st.shores(s);
    std::optional<Choice> best;
    for (Shore shore : {Shore::circ, Shore::bullet})
      for (auto a : side(sh, shore))
        if (!st.in_image[a]) keep_min(best, {a, 0, shore});
    if (!best) continue;
    const Simplex t = toggle(st, s, st.tuple(st.phi_index[best->a]), best->shore);
    if (s.size() < t.size()) m.pairs.push_back({s, t});
  }
  return m;
}

CollapseRun lemma52_collapse(const OmegaPrimeSetup& st) {
  SimplexSet current = all_simplices(st);
  auto choose = [&](const Simplex& s) -> std::optional<Choice> {
    const auto sh = st.shores(s);
    std::optional<Choice> best;
    for (Shore shore : {Shore::circ, Shore::bullet})
      for (auto a : side(sh, shore))
        if (!st.in_image[a]) keep_min(best, {a, 0, shore});
    return best;
  };
  auto partner = [&](const Simplex& s, const Choice& ch) { return toggle(st, s, st.tuple(st.phi_index[ch.a]), ch.shore); };

  CollapseRun run;
  run.phases.push_back(run_phase(st, "image", current, choose, partner));
  run.result = sorted_simplices(current);
  std::size_t expected = 0;
  for (const auto& s : st.simplices) {
    const auto sh = st.shores(s);
    const bool inside = std::all_of(sh.first.begin(), sh.first.end(), [&](auto a) { return st.in_image[a]; }) &&
                        std::all_of(sh.second.begin(), sh.second.end(), [&](auto a) { return st.in_image[a]; });
    if (inside) {
      ++expected;
      if (!current.count(s)) return run;
    }
  }
  run.result_matches_expected = expected == current.size();
  return run;
}

CollapseRun lemma54_collapse(const OmegaPrimeSetup& st) {
  SimplexSet current = all_simplices(st);
  CollapseRun run;
  auto same_shore = [&](const Simplex& s, const Choice& ch) { return same_shore_partner(st, s, ch); };
  run.phases.push_back(run_phase(
      st, "phase1", current, [&](const Simplex& s) { return same_shore_choice(st, s, true); }, same_shore));
  run.phases.push_back(run_phase(
      st, "phase2", current, [&](const Simplex& s) { return same_shore_choice(st, s, false); }, same_shore));
  run.phases.push_back(run_phase(
      st, "phase3", current, [&](const Simplex& s) { return cross_shore_choice(st, s); },
      [&](const Simplex& s, const Choice& ch) { return cross_shore_partner(st, s, ch); }));
  run.result = sorted_simplices(current);

  std::size_t expected = 0;
  bool ok = true;
  for (const auto& s : st.simplices) {
    const bool inside = in_target(st, s);
    expected += inside;
    if (inside != (current.count(s) > 0)) ok = false;
  }
  run.result_matches_expected = ok && expected == current.size();
  return run;
}

bool image_subcomplex_matches(const OmegaPrimeSetup& st, const std::vector<Simplex>& image_simplices,
                              std::size_t simplex_budget) {
  const FunctorResult prev = omega(st.base, 2 * st.k - 1);
  const Z2Complex prev_box = build_box(prev.graph);
  const auto prev_simplices = enumerate_simplices(prev_box, simplex_budget);
  SimplexSet expected(prev_simplices.begin(), prev_simplices.end());
  if (expected.size() != image_simplices.size()) return false;
  for (const auto& s : image_simplices) {
    Simplex mapped;
    for (auto id : s) {
      const auto& tok = st.box.token(id);
      OmegaVertex t = st.tuple(tok.graph_vertex);
      t.sets.pop_back();
      auto idx = prev.index_of(t);
      if (!idx) return false;
      auto pid = prev_box.id_of({*idx, tok.shore});
      if (!pid) return false;
      mapped.push_back(*pid);
    }
    std::sort(mapped.begin(), mapped.end());
    if (!expected.count(mapped)) return false;
  }
  return true;
}

Theorem55Report theorem55_pipeline(const Graph& g, std::size_t k, std::size_t vertex_budget,
                                   std::size_t simplex_budget) {
  const OmegaPrimeSetup st = prepare_omega_prime(g, k, vertex_budget, simplex_budget);
  Theorem55Report r;
  r.k = k;
  r.simplices_omega_prime = st.simplices.size();
  r.betti_omega_prime = betti_from_simplices(st.simplices);
  r.betti_omega = betti_mod2(st.target, simplex_budget);
  r.betti_omega_prev = betti_mod2(build_box(omega(g, 2 * k - 1, vertex_budget).graph), simplex_budget);
  r.classifier = check_classifier(st);

  const CollapseRun hard = lemma54_collapse(st);
  for (std::size_t i = 0; i < 3; ++i) r.lemma54_pairs[i] = hard.phases[i].matching.pairs.size();
  r.lemma54_reaches_target = hard.result_matches_expected;

  const CollapseRun easy = lemma52_collapse(st);
  r.lemma52_pairs = easy.phases[0].matching.pairs.size();
  r.lemma52_reaches_image = easy.result_matches_expected;
  r.image_is_previous_box = image_subcomplex_matches(st, easy.result, simplex_budget);

  r.collapses_preserve_betti = betti_from_simplices(hard.result) == r.betti_omega_prime &&
                               betti_from_simplices(easy.result) == r.betti_omega_prime;
  return r;
}

} // namespace omegalab
