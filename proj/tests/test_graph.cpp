#include "omegalab/errors.hpp"
#include "omegalab/graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace omegalab;

TEST_CASE("families") {
  CHECK(clique(4).edge_count() == 6);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(biclique(2, 3).edge_count() == 6);
  const Graph p = petersen_graph();
  CHECK(p.edge_count() == 15);
  for (std::size_t v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  const Graph pentagram = circular_clique(5, 2);
  CHECK(pentagram.edge_count() == 5);
  CHECK(pentagram.adjacent(0, 2));
  CHECK(min_odd_closed_walk(pentagram) == 5u);
  CHECK(circular_clique(4, 1).same_edges(clique(4)));
  CHECK_THROWS_AS(circular_clique(3, 2), ParameterError);
  const long long params[] = {7};
  CHECK(make_family(FamilyKind::cycle, params).same_edges(cycle_graph(7)));
}

TEST_CASE("common neighborhood and joins") {
  const Graph g = cycle_graph(5);
  CHECK(common_neighborhood(g, g.empty_set()) == g.full_set());
  VertexSet a = g.singleton(0);
  a.set(2);
  CHECK(common_neighborhood(g, a) == g.singleton(1));
  CHECK(is_joined(g, a, g.singleton(1)));
  CHECK_FALSE(is_joined(g, a, g.singleton(3)));
  CHECK(is_joined(g, g.empty_set(), g.full_set()));
}

TEST_CASE("walk layers reach by walks of exact length") {
  const Graph g = path_graph(4);
  auto layers = walk_layers(g, 0, 3);
  CHECK(layers[1].members() == std::vector<std::size_t>{1});
  CHECK(layers[2].members() == std::vector<std::size_t>{0, 2});
  CHECK(layers[3].members() == std::vector<std::size_t>{1, 3});
}

TEST_CASE("square-free and odd girth") {
  CHECK(is_square_free(cycle_graph(5)));
  CHECK(is_square_free(petersen_graph()));
  CHECK_FALSE(is_square_free(cycle_graph(4)));
  CHECK_FALSE(is_square_free(clique(4)));
  Graph looped(2);
  looped.add_edge(0, 0);
  looped.add_edge(1, 1);
  looped.add_edge(0, 1);
  CHECK_FALSE(is_square_free(looped));
  CHECK(min_odd_closed_walk(clique(3)) == 3u);
  CHECK(min_odd_closed_walk(cycle_graph(7)) == 7u);
  CHECK_FALSE(min_odd_closed_walk(cycle_graph(6)).has_value());
  CHECK(min_odd_closed_walk(petersen_graph()) == 5u);
  CHECK(min_odd_closed_walk(looped) == 1u);
}

TEST_CASE("tensor product") {
  const Graph k2 = clique(2);
  const Graph t = tensor_product(k2, k2);
  CHECK(t.edge_count() == 2);
  CHECK(connected_components(t).size() == 2);
  CHECK(tensor_product(clique(3), clique(3)).edge_count() == 18);
}

TEST_CASE("graph text round trip") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    Graph g = oracle::random_graph(rng, 1 + i % 9, 0.4, 0.2);
    if (i % 3 == 0) {
      std::vector<std::string> labels;
      for (std::size_t v = 0; v < g.order(); ++v) labels.push_back("v " + std::to_string(v));
      g.set_labels(labels);
    }
    const std::string text = to_text(g);
    const Graph back = graph_from_text(text);
    CHECK(back == g);
    CHECK(to_text(back) == text);
  }
}

TEST_CASE("graph parser rejects malformed input") {
  auto line_of = [](const std::string& text) {
    try {
      graph_from_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("p 2 1\ne 0 2\n") == 2);
  CHECK(line_of("p 2 1\ne 0 1\ne 0 1\n") == 3);
  CHECK(line_of("p 2 2\ne 0 1\n") == 2);
  CHECK(line_of("p 2 1\ne  0 1\n") == 2);
  CHECK(line_of("p 2 1\ne 0 01\n") == 2);
  CHECK(line_of("p 2 0\nl 0 a\n") == 2);
  CHECK(line_of("p 2 0\r\n") == 1);
  CHECK(line_of("p 2 0\nl 0 a\nl 1 a\n") == 3);
}
