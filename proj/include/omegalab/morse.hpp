#pragma once
// Discrete Morse matchings on Z2-complexes and their collapses.

#include "omegalab/box.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace omegalab {

using SimplexSet = std::unordered_set<Simplex, SimplexHash>;

struct MorsePair {
  Simplex lower;
  Simplex upper;
};

struct MorseMatching {
  std::vector<MorsePair> pairs;
};

/// Checks that `sub` is a subcomplex of `complex`, the pairs are codimension-one,
/// disjoint, equivariant under k's involution, and cover complex \ sub exactly.
std::optional<std::string> matching_violation(const Z2Complex& k, const SimplexSet& complex, const SimplexSet& sub,
                                              const MorseMatching& m);

/// No cycle s1 < mu(s1) > s2 < mu(s2) > ... > s1 among the lower simplices.
/// Throws ContractError for pairs that are not codimension-one or overlap.
bool is_acyclic(const MorseMatching& m);

struct CollapseStep {
  Simplex face;
  Simplex cofacet;
};

struct CollapseCertificate {
  std::vector<CollapseStep> steps;
  /// Surviving simplices, by dimension then lexicographic.
  std::vector<Simplex> result;
};

/// Removes matched pairs as free pairs, each together with its mirror, always
/// taking the highest-dimensional free face first and lexicographically
/// smallest among those. K must be free and the matching valid and acyclic.
CollapseCertificate collapse(const Z2Complex& k, const SimplexSet& complex, const SimplexSet& sub,
                             const MorseMatching& m);

/// Lines `x <face> <cofacet>`, simplices comma-separated.
void write_certificate(std::ostream& out, const CollapseCertificate& c);

/// Simplices of `all` in dimension-then-lexicographic order.
std::vector<Simplex> sorted_simplices(const SimplexSet& all);

} // namespace omegalab
