#include "omegalab/box.hpp"
#include "omegalab/errors.hpp"
#include "omegalab/homology.hpp"
#include "omegalab/morse.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace omegalab;

namespace {

SimplexSet all_simplices(const Z2Complex& k) {
  auto v = enumerate_simplices(k);
  return SimplexSet(v.begin(), v.end());
}

} // namespace

TEST_CASE("random equivariant collapses preserve homology and replay exactly") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 80; ++i) {
    const auto k = oracle::random_free_complex(rng, 2 + i % 5, 3 + i % 4);
    const SimplexSet all = all_simplices(k);
    SimplexSet sub = all;
    const auto m = oracle::random_collapses(k, sub, rng);
    REQUIRE_FALSE(matching_violation(k, all, sub, m).has_value());
    CHECK(is_acyclic(m));
    CHECK_FALSE(oracle::has_cycle(m));
    const auto cert = collapse(k, all, sub, m);
    CHECK(cert.steps.size() == m.pairs.size());
    CHECK(cert.result == sorted_simplices(sub));
    CHECK(betti_from_simplices(cert.result) == betti_mod2(k));
    if (!sub.empty()) CHECK(oracle::betti(oracle::maximal(sub)) == betti_mod2(k));
  }
}

TEST_CASE("acyclicity agrees with the closure oracle on arbitrary matchings") {
  std::mt19937_64 rng(13);
  int cyclic = 0;
  for (int i = 0; i < 150; ++i) {
    const auto k = oracle::random_free_complex(rng, 3 + i % 4, 4);
    const auto m = oracle::random_matching(k, rng);
    const bool oracle_cycle = oracle::has_cycle(m);
    cyclic += oracle_cycle;
    CHECK(is_acyclic(m) == !oracle_cycle);
  }
  CHECK(cyclic > 0);
}

TEST_CASE("a 2-cycle of pairs is rejected") {
  MorseMatching m;
  m.pairs.push_back({{0}, {0, 1}});
  m.pairs.push_back({{1}, {1, 2}});
  m.pairs.push_back({{2}, {0, 2}});
  CHECK_FALSE(is_acyclic(m));
  m.pairs.pop_back();
  CHECK(is_acyclic(m));
  MorseMatching bad;
  bad.pairs.push_back({{0}, {0, 1, 2}});
  CHECK_THROWS_AS(is_acyclic(bad), ContractError);
}

TEST_CASE("matching validation reports each defect") {
  const auto k = build_box(clique(2));
  const SimplexSet all = all_simplices(k);
  SimplexSet sub = all;
  MorseMatching m;
  CHECK_FALSE(matching_violation(k, all, sub, m).has_value());
  sub.erase(Simplex{0, 3});
  CHECK(matching_violation(k, all, sub, m).has_value());
  m.pairs.push_back({{0}, {0, 3}});
  CHECK(matching_violation(k, all, sub, m).has_value());
}

TEST_CASE("certificate format") {
  CollapseCertificate c;
  c.steps.push_back({{0, 2}, {0, 2, 5}});
  std::ostringstream os;
  write_certificate(os, c);
  CHECK(os.str() == "x 0,2 0,2,5\n");
}
