#include "omegalab/box.hpp"
#include "omegalab/functors.hpp"
#include "omegalab/homology.hpp"
#include "omegalab/omega_collapse.hpp"

#include <doctest.h>

using namespace omegalab;

TEST_CASE("offending simplices are exactly those outside Bx(Omega)") {
  for (const Graph& g : {clique(2), clique(3), cycle_graph(5)}) {
    const auto setup = prepare_omega_prime(g, 1);
    const auto report = check_classifier(setup);
    CHECK(report.mismatches == 0);
    CHECK(report.simplices == setup.simplices.size());
    CHECK(report.outside_target == report.simplices - enumerate_simplices(setup.target).size());
  }
}

TEST_CASE("collapse pipeline on small graphs") {
  struct Case {
    Graph g;
    std::size_t k;
    BettiVector betti;
  };
  for (const auto& c : {Case{clique(2), 1, {2}}, Case{clique(3), 1, {1, 1}}, Case{cycle_graph(5), 1, {1, 1}},
                        Case{path_graph(4), 1, {2}}, Case{clique(3), 2, {1, 1}}}) {
    const auto r = theorem55_pipeline(c.g, c.k);
    CHECK(r.ok());
    CHECK(r.betti_omega_prime == c.betti);
    CHECK(r.lemma52_reaches_image);
    CHECK(r.lemma54_reaches_target);
  }
}

TEST_CASE("phase matchings are involutive and acyclic") {
  const auto setup = prepare_omega_prime(clique(3), 1);
  const auto m = lemma52_matching(setup);
  CHECK(is_acyclic(m));
  const auto run = lemma54_collapse(setup);
  REQUIRE(run.phases.size() == 3);
  CHECK(run.phases[0].name == "phase1");
  CHECK(run.result_matches_expected);
  for (const auto& p : run.phases) CHECK(is_acyclic(p.matching));
  CHECK(betti_from_simplices(run.result) == betti_mod2(setup.target));
}
