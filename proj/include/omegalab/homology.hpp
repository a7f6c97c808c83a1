#pragma once
// Mod-2 simplicial homology by column reduction of boundary matrices.

#include "omegalab/box.hpp"

#include <cstddef>
#include <vector>

namespace omegalab {

/// b_0, b_1, ... with trailing zeros dropped (the empty complex gives {}).
using BettiVector = std::vector<std::size_t>;

struct ChainComplexGF2 {
  /// simplices[d]: the d-simplices, lexicographic.
  std::vector<std::vector<Simplex>> simplices;

  /// Groups a downward-closed simplex list by dimension.
  static ChainComplexGF2 from_simplices(std::vector<Simplex> all);

  /// Columns of the boundary map from d-simplices to (d-1)-simplices, d >= 1.
  std::vector<Bitset> boundary(std::size_t d) const;

  /// rank of the boundary map in each dimension (rank[0] = 0).
  std::vector<std::size_t> boundary_ranks() const;

  BettiVector betti() const;
  long long euler_characteristic() const;
};

BettiVector betti_mod2(const Z2Complex& k, std::size_t simplex_budget = kDefaultSimplexBudget);
BettiVector betti_from_facets(const std::vector<Simplex>& facets, std::size_t simplex_budget = kDefaultSimplexBudget);
BettiVector betti_from_simplices(std::vector<Simplex> all);

long long euler_characteristic(const Z2Complex& k, std::size_t simplex_budget = kDefaultSimplexBudget);
long long alternating_sum(const BettiVector& b);

/// Betti vector of a product of spaces over a field.
BettiVector betti_convolution(const BettiVector& a, const BettiVector& b);

} // namespace omegalab
