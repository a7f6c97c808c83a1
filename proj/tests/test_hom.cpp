#include "omegalab/errors.hpp"
#include "omegalab/functors.hpp"
#include "omegalab/hom.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace omegalab;

TEST_CASE("hom_exists agrees with exhaustive search") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::size_t> gn(1, 6), hn(1, 5);
  using Cfg = HomSearchConfig;
  const Cfg configs[] = {
      {},
      {1'000'000, Cfg::VariableOrder::input, Cfg::Propagation::forward_check},
      {1'000'000, Cfg::VariableOrder::degree_desc, Cfg::Propagation::forward_check},
  };
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(rng, gn(rng), 0.45, 0.1);
    const Graph h = oracle::random_graph(rng, hn(rng), 0.5, 0.1);
    const bool expect = oracle::hom_exists(g, h);
    for (const auto& cfg : configs) {
      auto f = hom_exists(g, h, cfg);
      REQUIRE(f.has_value() == expect);
      if (f) CHECK(is_homomorphism(g, h, f->map()));
    }
  }
}

TEST_CASE("classic instances") {
  CHECK(hom_exists(cycle_graph(5), clique(3)));
  CHECK_FALSE(hom_exists(cycle_graph(5), clique(2)));
  CHECK_FALSE(hom_exists(clique(4), clique(3)));
  CHECK(hom_exists(cycle_graph(7), cycle_graph(5)));
  CHECK_FALSE(hom_exists(cycle_graph(5), cycle_graph(7)));
  CHECK_FALSE(hom_exists(petersen_graph(), clique(2)));
  CHECK(hom_exists(petersen_graph(), clique(3)));
  CHECK(hom_exists(Graph(0), Graph(0)));
  CHECK_FALSE(hom_exists(Graph(1), Graph(0)));
}

TEST_CASE("a looped target absorbs everything") {
  Graph h(1);
  h.add_edge(0, 0);
  CHECK(hom_exists(clique(6), h));
  Graph g(1);
  g.add_edge(0, 0);
  CHECK_FALSE(hom_exists(g, clique(4)));
}

TEST_CASE("node budget") {
  HomSearchConfig cfg;
  cfg.node_budget = 5;
  CHECK_THROWS_AS(hom_exists(clique(7), clique(6), cfg), ResourceError);
}

TEST_CASE("chromatic numbers") {
  CHECK(chromatic_number(clique(5)) == 5);
  CHECK(chromatic_number(cycle_graph(7)) == 3);
  CHECK(chromatic_number(cycle_graph(8)) == 2);
  CHECK(chromatic_number(petersen_graph()) == 3);
  CHECK(chromatic_number(Graph(3)) == 1);
  CHECK(chromatic_number(omega(clique(4), 3).graph) == 4);
  CHECK(greedy_clique_bound(clique(5)) == 5);
  Graph looped(1);
  looped.add_edge(0, 0);
  CHECK_THROWS_AS(chromatic_number(looped), ParameterError);
}

TEST_CASE("homomorphic equivalence") {
  CHECK(hom_equivalent(subdivide(cycle_graph(5), 3).graph, omega(cycle_graph(5), 3).graph).equivalent());
  CHECK(hom_equivalent(power(omega(clique(3), 3).graph, 3), clique(3)).equivalent());
  CHECK_FALSE(hom_equivalent(clique(3), clique(4)).equivalent());
}
