#pragma once

#include "omegalab/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace omegalab {

/// First edge uv of `source` whose image is not an edge of `target`, as a message.
std::optional<std::string> homomorphism_violation(const Graph& source, const Graph& target,
                                                  const std::vector<std::size_t>& map);

inline bool is_homomorphism(const Graph& source, const Graph& target, const std::vector<std::size_t>& map) {
  return !homomorphism_violation(source, target, map);
}

/// A vertex map validated as edge-preserving when constructed.
class Homomorphism {
public:
  /// Throws ContractError if `map` is not a homomorphism source -> target.
  Homomorphism(const Graph& source, const Graph& target, std::vector<std::size_t> map);

  std::size_t source_order() const noexcept { return map_.size(); }
  std::size_t target_order() const noexcept { return target_order_; }
  std::size_t operator()(std::size_t v) const { return map_[v]; }
  const std::vector<std::size_t>& map() const noexcept { return map_; }
  bool is_injective() const;

  /// (next ∘ this); `mid` and `target` are the graphs the maps were validated against.
  Homomorphism then(const Homomorphism& next, const Graph& source, const Graph& target) const;

private:
  std::vector<std::size_t> map_;
  std::size_t target_order_;
};

} // namespace omegalab
