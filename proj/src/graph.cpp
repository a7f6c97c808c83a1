#include "omegalab/graph.hpp"

#include "omegalab/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace omegalab {

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw ParameterError("edge endpoint out of range");
  adj_[u].set(v);
  adj_[v].set(u);
}

bool Graph::has_loops() const {
  for (std::size_t v = 0; v < n_; ++v)
    if (has_loop(v)) return true;
  return false;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0, loops = 0;
  for (std::size_t v = 0; v < n_; ++v) {
    twice += adj_[v].count();
    loops += has_loop(v) ? 1 : 0;
  }
  return (twice - loops) / 2 + loops;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = adj_[u].next_from(u); v < n_; v = adj_[u].next_from(v + 1)) out.emplace_back(u, v);
  return out;
}

std::string Graph::label(std::size_t v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty()) {
    if (labels.size() != n_) throw ParameterError("labels must cover every vertex");
    std::unordered_set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw ParameterError("labels must be unique");
  }
  labels_ = std::move(labels);
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph clique(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph biclique(std::size_t n, std::size_t m) {
  Graph g(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) g.add_edge(i, n + j);
  return g;
}

Graph circular_clique(std::size_t p, std::size_t q) {
  if (q == 0 || p < 2 * q) throw ParameterError("circular clique requires q >= 1 and p/q >= 2");
  Graph g(p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = q; j <= p - q; ++j) g.add_edge(i, (i + j) % p);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);         // outer cycle
    g.add_edge(i, i + 5);               // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
  }
  return g;
}

Graph make_family(FamilyKind kind, std::span<const long long> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) throw ParameterError("wrong number of family parameters");
    for (long long p : params)
      if (p <= 0) throw ParameterError("family parameters must be positive");
  };
  switch (kind) {
  case FamilyKind::path: need(1); return path_graph(static_cast<std::size_t>(params[0]));
  case FamilyKind::cycle: need(1); return cycle_graph(static_cast<std::size_t>(params[0]));
  case FamilyKind::clique: need(1); return clique(static_cast<std::size_t>(params[0]));
  case FamilyKind::biclique:
    need(2);
    return biclique(static_cast<std::size_t>(params[0]), static_cast<std::size_t>(params[1]));
  case FamilyKind::circular_clique:
    need(2);
    return circular_clique(static_cast<std::size_t>(params[0]), static_cast<std::size_t>(params[1]));
  case FamilyKind::petersen: need(0); return petersen_graph();
  }
  throw ParameterError("unknown family");
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& a) {
  VertexSet cn = g.full_set();
  a.for_each([&](std::size_t v) { cn &= g.neighbors(v); });
  return cn;
}

bool is_joined(const Graph& g, const VertexSet& a, const VertexSet& b) {
  bool ok = true;
  a.for_each([&](std::size_t v) {
    if (ok && !b.is_subset_of(g.neighbors(v))) ok = false;
  });
  return ok;
}

VertexSet neighborhood_union(const Graph& g, const VertexSet& a) {
  VertexSet out = g.empty_set();
  a.for_each([&](std::size_t v) { out |= g.neighbors(v); });
  return out;
}

std::vector<VertexSet> walk_layers(const Graph& g, std::size_t v, std::size_t depth) {
  std::vector<VertexSet> layers;
  layers.reserve(depth + 1);
  layers.push_back(g.singleton(v));
  for (std::size_t i = 0; i < depth; ++i) layers.push_back(neighborhood_union(g, layers.back()));
  return layers;
}

Graph tensor_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order(), nh = h.order();
  Graph out(ng * nh);
  for (auto [g1, g2] : g.edges())
    for (auto [h1, h2] : h.edges()) {
      out.add_edge(g1 * nh + h1, g2 * nh + h2);
      out.add_edge(g1 * nh + h2, g2 * nh + h1);
    }
  return out;
}

bool is_square_free(const Graph& g) {
  // A ⋈ B with |A|,|B| >= 2 exists iff two distinct vertices share two neighbors.
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if ((g.neighbors(u) & g.neighbors(v)).count() >= 2) return false;
  return true;
}

std::optional<std::size_t> min_odd_closed_walk(const Graph& g) {
  // BFS on G x K_2: a shortest walk (s,0) -> (s,1) is a shortest odd closed walk at s.
  const std::size_t n = g.order();
  std::optional<std::size_t> best;
  std::vector<std::size_t> dist(2 * n);
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), unseen);
    std::deque<std::size_t> queue{2 * s};
    dist[2 * s] = 0;
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      if (cur == 2 * s + 1) break;
      std::size_t v = cur / 2, parity = cur % 2;
      g.neighbors(v).for_each([&](std::size_t w) {
        std::size_t nxt = 2 * w + (1 - parity);
        if (dist[nxt] == unseen) {
          dist[nxt] = dist[cur] + 1;
          queue.push_back(nxt);
        }
      });
    }
    if (dist[2 * s + 1] != unseen && (!best || dist[2 * s + 1] < *best)) best = dist[2 * s + 1];
  }
  return best;
}

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (std::size_t v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& vertices) {
  Graph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
  if (g.has_labels()) {
    std::vector<std::string> labels;
    for (std::size_t v : vertices) labels.push_back(g.label(v));
    out.set_labels(std::move(labels));
  }
  return out;
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      g.neighbors(comp[i]).for_each([&](std::size_t w) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      });
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

} // namespace omegalab
