#include "omegalab/errors.hpp"
#include "omegalab/functors.hpp"
#include "omegalab/hom.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace omegalab;

namespace {

// Omega vertex -> masks, for comparison with the oracle enumeration.
std::vector<std::uint32_t> masks(const OmegaVertex& v) {
  std::vector<std::uint32_t> out;
  for (const auto& s : v.sets) {
    std::uint32_t m = 0;
    s.for_each([&](std::size_t i) { m |= 1U << i; });
    out.push_back(m);
  }
  return out;
}

void check_omega_against_oracle(const Graph& g, std::size_t k) {
  const auto om = omega(g, k);
  const auto tuples = oracle::omega_tuples(g, (k - 1) / 2);
  REQUIRE(om.omega_vertices.size() == tuples.size());
  std::map<std::vector<std::uint32_t>, std::size_t> pos;
  for (std::size_t i = 0; i < om.omega_vertices.size(); ++i) pos[masks(om.omega_vertices[i])] = i;
  REQUIRE(pos.size() == tuples.size());
  const auto a = oracle::adjacency(g);
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    REQUIRE(pos.count(tuples[i]));
    for (std::size_t j = i; j < tuples.size(); ++j)
      CHECK(om.graph.adjacent(pos[tuples[i]], pos[tuples[j]]) == oracle::omega_adjacent(a, tuples[i], tuples[j]));
  }
}

} // namespace

TEST_CASE("subdivision") {
  const auto s = subdivide(clique(3), 3);
  CHECK(s.graph.order() == 9);
  CHECK(s.graph.edge_count() == 9);
  CHECK(s.graph.same_edges(cycle_graph(9)) == false);
  CHECK(min_odd_closed_walk(s.graph) == 9u);
  CHECK(subdivide(clique(4), 1).graph.same_edges(clique(4)));
  CHECK_THROWS_AS(subdivide(clique(3), 2), ParameterError);
}

TEST_CASE("power") {
  CHECK(power(cycle_graph(5), 3).same_edges(clique(5)));
  CHECK(power(clique(2), 3).same_edges(clique(2)));
  const Graph p = power(path_graph(4), 3);
  CHECK(p.adjacent(0, 3));
  CHECK(p.adjacent(0, 1));
  CHECK_FALSE(p.adjacent(0, 2));
}

TEST_CASE("omega vertex counts") {
  // n * (2^(n-1) - 1) tuples ({v}, A_1) with A_1 a nonempty subset of N(v).
  CHECK(omega(clique(4), 3).graph.order() == 28);
  CHECK(omega(clique(5), 3).graph.order() == 75);
  CHECK(omega(petersen_graph(), 3).graph.order() == 70);
  CHECK(omega(clique(4), 5).graph.order() == 124);
  CHECK(omega(clique(2), 3).graph.same_edges(path_graph(4)) == false);
  CHECK(connected_components(omega(clique(2), 3).graph).size() == 1);
  CHECK(omega(clique(4), 1).graph.same_edges(clique(4)));
}

TEST_CASE("omega matches a definition-level enumeration") {
  check_omega_against_oracle(clique(3), 3);
  check_omega_against_oracle(clique(4), 3);
  check_omega_against_oracle(cycle_graph(5), 5);
  check_omega_against_oracle(path_graph(4), 5);
  check_omega_against_oracle(clique(3), 7);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) check_omega_against_oracle(oracle::random_graph(rng, 5, 0.5, 0.15), 3 + 2 * (i % 2));
}

TEST_CASE("omega canonical order and labels") {
  const auto om = omega(clique(3), 3);
  std::vector<std::string> labels;
  for (const auto& v : om.omega_vertices) labels.push_back(v.label());
  CHECK(labels == std::vector<std::string>{"0{1}", "0{2}", "0{1 2}", "1{0}", "1{2}", "1{0 2}", "2{0}", "2{1}", "2{0 1}"});
  for (const auto& v : om.omega_vertices) CHECK(parse_omega_label(v.label(), 3) == v);
  const auto deep = omega(clique(3), 5);
  CHECK(deep.omega_vertices[0].label() == "0{1}|{0}");
  CHECK_THROWS(parse_omega_label("0{1", 3));
  CHECK_THROWS(parse_omega_label("5{1}", 3));
}

TEST_CASE("omega budget") {
  CHECK_THROWS_AS(omega(clique(6), 5, 100), ResourceError);
}

TEST_CASE("phi, p_k and truncation") {
  const Graph g = clique(4);
  const auto om3 = omega(g, 3);
  const auto om5 = omega(g, 5);
  for (const auto& v : om3.omega_vertices) {
    const auto w = phi(g, v);
    CHECK(w.sets[0] == v.sets[0]);
    CHECK(w.sets[1] == common_neighborhood(g, v.sets[0]));
  }
  CHECK(projection_p(g, om5).source_order() == 124);
  CHECK(truncation(om5, om3).target_order() == 28);
  const auto prime = omega_prime(g, 1);
  CHECK(prime.graph.order() == om3.graph.order());
  CHECK(prime.graph.edge_count() >= om3.graph.edge_count());
  const auto image = phi_image(g, prime);
  CHECK(std::count(image.begin(), image.end(), true) == 4);
}

TEST_CASE("adjoint witnesses round trip") {
  const Graph g = cycle_graph(5), h = clique(5);
  const auto om = omega(h, 3);
  const Graph pg = power(g, 3);
  std::vector<std::size_t> id(5);
  for (std::size_t i = 0; i < 5; ++i) id[i] = i;
  const Homomorphism f(pg, h, id);
  const auto to = adjoint_witness_to_omega(g, h, 3, f, om);
  const auto back = adjoint_witness_from_omega(g, h, 3, to, om);
  CHECK(back.map() == id);
  const Graph k2 = clique(2);
  const auto om1 = omega(k2, 1);
  const Homomorphism same(k2, k2, {0, 1});
  CHECK(adjoint_witness_to_omega(k2, k2, 1, same, om1).map() == same.map());
}

TEST_CASE("subdivision embedding rows") {
  const Graph g = cycle_graph(5);
  const auto gamma = subdivide(g, 3);
  const auto om = omega(g, 3);
  const auto f = subdivision_embedding(g, gamma, om);
  CHECK(f.is_injective());
  CHECK(om.omega_vertices[f(0)].label() == "0{1 4}");
  // Both ends of K_2 are leaves: Omega_3(K_2) is K_2 again and P_4 folds onto it.
  const Graph k2 = clique(2);
  const auto om2 = omega(k2, 3);
  CHECK(om2.graph.same_edges(k2));
  const auto e = subdivision_embedding(k2, subdivide(k2, 3), om2);
  CHECK(e.map() == std::vector<std::size_t>{0, 1, 1, 0});
}

TEST_CASE("subdivision embedding collapses rows at a leaf") {
  const Graph g = path_graph(4);
  const auto gamma = subdivide(g, 3);
  const auto om = omega(g, 3);
  CHECK(gamma.graph.order() == 10);
  CHECK(om.graph.order() == 8);
  const auto f = subdivision_embedding(g, gamma, om);
  CHECK_FALSE(f.is_injective());
  for (std::size_t x = 0; x < gamma.graph.order(); ++x) {
    const auto& o = gamma.subdivision[x];
    if (!o.original && o.u == 0 && o.v == 1 && o.position == 2) CHECK(f(x) == f(0));
  }
  CHECK(subdivision_embedding(petersen_graph(), subdivide(petersen_graph(), 3), omega(petersen_graph(), 3)).is_injective());
  CHECK(subdivision_embedding(cycle_graph(7), subdivide(cycle_graph(7), 5), omega(cycle_graph(7), 5)).is_injective());
}

TEST_CASE("square-free retraction") {
  for (const Graph& g : {cycle_graph(5), cycle_graph(7), path_graph(4), petersen_graph()}) {
    for (std::size_t k : {3, 5}) {
      const auto gamma = subdivide(g, k);
      const auto om = omega(g, k);
      const auto r = squarefree_retraction(g, om, gamma);
      const auto e = subdivision_embedding(g, gamma, om);
      CHECK(e.then(r, gamma.graph, gamma.graph).source_order() == gamma.graph.order());
    }
  }
  CHECK_THROWS_AS(squarefree_retraction(clique(4), omega(clique(4), 3), subdivide(clique(4), 3)), ContractError);
}
