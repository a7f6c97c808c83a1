#pragma once
// Homomorphism existence by backtracking over bitset domains.

#include "omegalab/graph.hpp"
#include "omegalab/homomorphism.hpp"

#include <cstdint>
#include <optional>

namespace omegalab {

struct HomSearchConfig {
  enum class VariableOrder { degree_desc, input };
  enum class Propagation { arc_consistency, forward_check };

  std::uint64_t node_budget = 50'000'000;
  VariableOrder variable_order = VariableOrder::degree_desc;
  Propagation propagation = Propagation::arc_consistency;
};

struct HomSearchStats {
  std::uint64_t nodes = 0;
};

/// A homomorphism G -> H, or nullopt when the complete search finds none.
/// Throws ResourceError when the node budget runs out.
std::optional<Homomorphism> hom_exists(const Graph& g, const Graph& h, const HomSearchConfig& cfg = {},
                                       HomSearchStats* stats = nullptr);

/// Greedy clique size, a lower bound on the chromatic number.
std::size_t greedy_clique_bound(const Graph& g);

/// Least n with G -> K_n. G must be loopless.
std::size_t chromatic_number(const Graph& g, const HomSearchConfig& cfg = {});

struct HomEquivalence {
  std::optional<Homomorphism> forward;
  std::optional<Homomorphism> backward;
  bool equivalent() const { return forward.has_value() && backward.has_value(); }
};

HomEquivalence hom_equivalent(const Graph& g, const Graph& h, const HomSearchConfig& cfg = {});

} // namespace omegalab
