#include "omegalab/hom.hpp"

#include "omegalab/errors.hpp"

#include <algorithm>
#include <deque>

namespace omegalab {
namespace {

class Search {
public:
  Search(const Graph& g, const Graph& h, const HomSearchConfig& cfg, HomSearchStats& stats)
      : g_(g), h_(h), cfg_(cfg), stats_(stats), rank_(g.order()), assigned_(g.order(), false), map_(g.order()) {
    std::vector<std::size_t> order(g.order());
    for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
    if (cfg.variable_order == HomSearchConfig::VariableOrder::degree_desc)
      std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return g.degree(a) > g.degree(b); });
    for (std::size_t i = 0; i < order.size(); ++i) rank_[order[i]] = i;

    looped_ = h.empty_set();
    for (std::size_t y = 0; y < h.order(); ++y)
      if (h.has_loop(y)) looped_.set(y);
  }

  bool run() {
    std::vector<VertexSet> domains(g_.order(), h_.full_set());
    for (std::size_t u = 0; u < g_.order(); ++u)
      if (g_.has_loop(u)) domains[u] &= looped_;
    for (const auto& component : connected_components(g_)) {
      vars_ = component;
      if (cfg_.propagation == HomSearchConfig::Propagation::arc_consistency) {
        if (!propagate(domains, vars_)) return false;
      } else {
        for (auto u : vars_)
          if (domains[u].none()) return false;
      }
      if (!solve(domains)) return false;
    }
    return true;
  }

  std::vector<std::size_t> map() const { return map_; }

private:
  // AC-3: D(w) is cut to the union of N_H(y) over y in D(x), for every edge xw.
  bool propagate(std::vector<VertexSet>& domains, const std::vector<std::size_t>& seeds) const {
    std::deque<std::size_t> queue(seeds.begin(), seeds.end());
    std::vector<bool> queued(g_.order(), false);
    for (auto s : seeds) queued[s] = true;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      queued[x] = false;
      VertexSet support = h_.empty_set();
      domains[x].for_each([&](std::size_t y) { support |= h_.neighbors(y); });
      bool failed = false;
      g_.neighbors(x).for_each([&](std::size_t w) {
        if (failed) return;
        if (domains[w].is_subset_of(support)) return;
        domains[w] &= support;
        if (domains[w].none()) {
          failed = true;
          return;
        }
        if (!queued[w]) {
          queued[w] = true;
          queue.push_back(w);
        }
      });
      if (failed) return false;
    }
    return true;
  }

  bool forward_check(std::vector<VertexSet>& domains, std::size_t u, std::size_t y) const {
    bool ok = true;
    g_.neighbors(u).for_each([&](std::size_t w) {
      if (!ok) return;
      domains[w] &= h_.neighbors(y);
      if (domains[w].none()) ok = false;
    });
    return ok;
  }

  bool solve(const std::vector<VertexSet>& domains) {
    std::size_t best = g_.order();
    std::size_t best_size = 0;
    for (auto u : vars_) {
      if (assigned_[u]) continue;
      const std::size_t size = domains[u].count();
      if (best == g_.order() || size < best_size || (size == best_size && rank_[u] < rank_[best])) {
        best = u;
        best_size = size;
      }
    }
    if (best == g_.order()) return true;

    const std::size_t u = best;
    assigned_[u] = true;
    for (auto y : domains[u].members()) {
      if (++stats_.nodes > cfg_.node_budget)
        throw ResourceError("homomorphism search exceeded node budget of " + std::to_string(cfg_.node_budget));
      auto next = domains;
      next[u] = VertexSet::singleton(h_.order(), y);
      const bool ok = cfg_.propagation == HomSearchConfig::Propagation::arc_consistency
                          ? propagate(next, {u})
                          : forward_check(next, u, y);
      if (!ok) continue;
      map_[u] = y;
      if (solve(next)) return true;
    }
    assigned_[u] = false;
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  const HomSearchConfig& cfg_;
  HomSearchStats& stats_;
  std::vector<std::size_t> rank_;
  std::vector<bool> assigned_;
  std::vector<std::size_t> map_;
  std::vector<std::size_t> vars_;
  VertexSet looped_;
};

} // namespace

std::optional<Homomorphism> hom_exists(const Graph& g, const Graph& h, const HomSearchConfig& cfg,
                                       HomSearchStats* stats) {
  if (cfg.node_budget == 0) throw ParameterError("node budget must be positive");
  HomSearchStats local;
  HomSearchStats& s = stats ? *stats : local;
  if (g.order() == 0) return Homomorphism(g, h, {});
  if (h.order() == 0) return std::nullopt;
  Search search(g, h, cfg, s);
  if (!search.run()) return std::nullopt;
  return Homomorphism(g, h, search.map());
}

std::size_t greedy_clique_bound(const Graph& g) {
  std::vector<std::size_t> order(g.order());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return g.degree(a) > g.degree(b); });
  std::size_t best = g.order() > 0 ? 1 : 0;
  for (auto start : order) {
    VertexSet candidates = g.neighbors(start);
    candidates.reset(start);
    std::size_t size = 1;
    for (auto v : order) {
      if (!candidates.test(v)) continue;
      ++size;
      candidates &= g.neighbors(v);
    }
    best = std::max(best, size);
  }
  return best;
}

std::size_t chromatic_number(const Graph& g, const HomSearchConfig& cfg) {
  if (g.has_loops()) throw ParameterError("chromatic number is undefined for graphs with loops");
  for (std::size_t c = greedy_clique_bound(g); c <= g.order(); ++c)
    if (hom_exists(g, clique(c), cfg)) return c;
  return g.order();
}

HomEquivalence hom_equivalent(const Graph& g, const Graph& h, const HomSearchConfig& cfg) {
  HomEquivalence out;
  out.forward = hom_exists(g, h, cfg);
  out.backward = hom_exists(h, g, cfg);
  return out;
}

} // namespace omegalab
