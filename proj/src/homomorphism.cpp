#include "omegalab/homomorphism.hpp"

#include "omegalab/errors.hpp"

#include <unordered_set>

namespace omegalab {

std::optional<std::string> homomorphism_violation(const Graph& source, const Graph& target,
                                                  const std::vector<std::size_t>& map) {
  if (map.size() != source.order()) return "map size does not match source order";
  for (std::size_t v = 0; v < map.size(); ++v)
    if (map[v] >= target.order()) return "image of " + std::to_string(v) + " out of range";
  for (auto [u, v] : source.edges())
    if (!target.adjacent(map[u], map[v]))
      return "edge " + std::to_string(u) + "-" + std::to_string(v) + " maps to non-edge " +
             std::to_string(map[u]) + "-" + std::to_string(map[v]);
  return std::nullopt;
}

Homomorphism::Homomorphism(const Graph& source, const Graph& target, std::vector<std::size_t> map)
    : map_(std::move(map)), target_order_(target.order()) {
  if (auto why = homomorphism_violation(source, target, map_)) throw ContractError("not a homomorphism: " + *why);
}

bool Homomorphism::is_injective() const {
  std::unordered_set<std::size_t> seen(map_.begin(), map_.end());
  return seen.size() == map_.size();
}

Homomorphism Homomorphism::then(const Homomorphism& next, const Graph& source, const Graph& target) const {
  std::vector<std::size_t> composed(map_.size());
  for (std::size_t v = 0; v < map_.size(); ++v) composed[v] = next(map_[v]);
  return Homomorphism(source, target, std::move(composed));
}

} // namespace omegalab
