#pragma once
// The map g: |Bx(Omega_{2k+1}(G))| -> |Bx(G)| in exact rational coordinates.

#include "omegalab/box.hpp"
#include "omegalab/functors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace omegalab {

using Rational = boost::multiprecision::cpp_rational;

/// Convex combination of vertices of Bx(G), keyed by complex vertex id.
struct RationalPoint {
  std::map<std::uint32_t, Rational> coeffs;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

Rational squared_distance(const RationalPoint& a, const RationalPoint& b);

struct ApproxMap {
  Graph base;
  std::size_t k = 1;
  FunctorResult omega;
  Z2Complex source;
  Z2Complex target;
  /// images[id]: g of source vertex id.
  std::vector<RationalPoint> images;
};

/// g(A^s) = average over i of avg(A_i) on shore s for even i and -s for odd i.
/// G must be loopless, k >= 1.
ApproxMap approx_map_g(const Graph& g, std::size_t k, std::size_t vertex_budget = kDefaultVertexBudget);

/// Largest squared distance between images of two vertices of s.
/// Throws ContractError if s is not a simplex of the source.
Rational simplex_image_diameter_sq(const ApproxMap& m, const Simplex& s);

/// For every simplex of the source, the supports of its images together with
/// the projections (v, s) of its vertices span a simplex of `target`, matched
/// by (graph vertex, shore) tokens.
bool carrier_check(const ApproxMap& m, const Z2Complex& target, std::size_t simplex_budget = kDefaultSimplexBudget);

/// g(-x) = -g(x) on every vertex.
bool is_equivariant(const ApproxMap& m);

/// Every denominator divides (k+1) * lcm(1..D).
bool denominators_bounded(const ApproxMap& m);

struct FacetDiameter {
  Simplex facet;
  Rational diameter_sq;
};

struct ApproxReport {
  std::size_t k = 1;
  std::size_t max_degree = 0;
  Rational bound_sq;
  Rational max_diameter_sq;
  std::vector<FacetDiameter> facets;
  bool below_bound = false;
  bool carrier_ok = false;
  bool equivariant = false;
  bool denominators_ok = false;
  bool ok() const { return below_bound && carrier_ok && equivariant && denominators_ok; }
};

ApproxReport approx_report(const Graph& g, std::size_t k, std::size_t vertex_budget = kDefaultVertexBudget,
                           std::size_t simplex_budget = kDefaultSimplexBudget);

} // namespace omegalab
