#include "omegalab/box.hpp"
#include "omegalab/errors.hpp"
#include "omegalab/functors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace omegalab;

namespace {

std::set<std::pair<std::uint32_t, std::uint32_t>> as_masks(const Z2Complex& k) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const auto& s : enumerate_simplices(k)) {
    std::uint32_t c = 0, b = 0;
    for (auto id : s) (k.token(id).shore == Shore::circ ? c : b) |= 1U << k.token(id).graph_vertex;
    out.emplace(c, b);
  }
  return out;
}

} // namespace

TEST_CASE("box complex simplices match the definition") {
  for (const Graph& g : {clique(2), clique(3), clique(4), cycle_graph(5), path_graph(4)}) CHECK(as_masks(build_box(g)) == oracle::box_simplices(g));
  std::mt19937_64 rng(8);
  for (int i = 0; i < 15; ++i) {
    const Graph g = oracle::random_graph(rng, 5, 0.5, 0.15);
    CHECK(as_masks(build_box(g)) == oracle::box_simplices(g));
  }
}

TEST_CASE("Bx(K4) is the boundary of the cross-polytope-like sphere") {
  const auto k = build_box(clique(4));
  CHECK(k.facets().size() == 14);
  CHECK(k.num_vertices() == 8);
  CHECK(k.is_free());
  CHECK_FALSE(k.invariant_violation().has_value());
  for (const auto& f : k.facets()) CHECK(f.size() == 4);
}

TEST_CASE("isolated vertices are dropped and loops break freeness") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK(build_box(g).num_vertices() == 4);
  Graph l(2);
  l.add_edge(0, 0);
  l.add_edge(0, 1);
  CHECK_FALSE(build_box(l).is_free());
}

TEST_CASE("membership predicate") {
  const Graph g = clique(3);
  VertexSet a = g.singleton(0), b = g.singleton(1);
  b.set(2);
  CHECK(is_box_simplex(g, a, b));
  a.set(1);
  CHECK_FALSE(is_box_simplex(g, a, b));
  CHECK_FALSE(is_box_simplex(g, g.empty_set(), g.empty_set()));
  CHECK_FALSE(is_box_simplex(g, g.full_set(), g.empty_set()));
}

TEST_CASE("induced maps of homomorphisms are simplicial") {
  const Graph g = cycle_graph(5), h = clique(3);
  const Homomorphism f(g, h, {0, 1, 0, 1, 2});
  const auto bg = build_box(g), bh = build_box(h);
  const auto m = induced_map(f, bg, bh);
  CHECK_FALSE(simplicial_map_violation(m).has_value());
  const auto om = omega(clique(4), 3);
  const auto p = projection_p(clique(4), om);
  const auto bo = build_box(om.graph);
  const auto bk = build_box(clique(4));
  CHECK_FALSE(simplicial_map_violation(induced_map(p, bo, bk)).has_value());
}

TEST_CASE("complex text round trip and errors") {
  for (const Graph& g : {clique(3), cycle_graph(5), petersen_graph()}) {
    const auto k = build_box(g);
    const std::string text = complex_to_text(k);
    const auto back = complex_from_text(text);
    CHECK(back == k);
    CHECK(complex_to_text(back) == text);
  }
  CHECK_THROWS_AS(complex_from_text("c 2\nn 0 0 +\nn 1 0 -\nf 1 0\n"), ParseError);
  CHECK_THROWS_AS(complex_from_text("c 2\nn 0 0 +\nn 1 0 +\nf 0\n"), ParseError);
  CHECK_THROWS_AS(complex_from_text("c 1\nn 0 0 +\n"), ParseError);
  CHECK(simplex_to_string({1, 4, 7}) == "1,4,7");
}

TEST_CASE("simplex budget") {
  CHECK_THROWS_AS(enumerate_simplices(build_box(clique(6)), 50), ResourceError);
  CHECK(enumerate_simplices(build_box(clique(3))).size() == oracle::box_simplices(clique(3)).size());
}
