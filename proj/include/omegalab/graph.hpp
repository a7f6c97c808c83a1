#pragma once

#include "omegalab/bitset.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace omegalab {

/// A subset of V(G), stored as a bitset of width |V(G)|.
using VertexSet = Bitset;

/// Finite undirected graph on vertices 0..n-1; loops allowed.
///
/// Rows are bitsets, kept symmetric by add_edge. Optional labels are opaque
/// strings (e.g. tuple names of an Omega construction); when present they
/// cover every vertex and are pairwise distinct.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n, VertexSet(n)) {}

  std::size_t order() const noexcept { return n_; }

  void add_edge(std::size_t u, std::size_t v);

  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }
  bool has_loop(std::size_t v) const { return adj_[v].test(v); }
  bool has_loops() const;
  bool is_isolated(std::size_t v) const { return adj_[v].none(); }

  /// Number of edges {u,v}, loops counted once.
  std::size_t edge_count() const;

  /// Edges as (u,v) with u <= v, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  VertexSet empty_set() const { return VertexSet(n_); }
  VertexSet full_set() const { return VertexSet::full(n_); }
  VertexSet singleton(std::size_t v) const { return VertexSet::singleton(n_, v); }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Label of v, or its decimal index when unlabeled.
  std::string label(std::size_t v) const;
  /// Throws ParameterError unless labels are total and unique (or empty).
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_ && a.labels_ == b.labels_;
  }

  /// Same vertex count and adjacency; labels ignored.
  bool same_edges(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
  std::size_t n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

enum class FamilyKind { path, cycle, clique, biclique, circular_clique, petersen };

/// Named graph families, 0-indexed. Parameters: path/cycle/clique take n;
/// biclique takes n,m; circular_clique takes p,q with p >= 2q; petersen none.
Graph make_family(FamilyKind kind, std::span<const long long> params);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph clique(std::size_t n);
Graph biclique(std::size_t n, std::size_t m);
Graph circular_clique(std::size_t p, std::size_t q);
Graph petersen_graph();

/// CN(A): intersection of N(v) over v in A; CN(empty) = V(G).
VertexSet common_neighborhood(const Graph& g, const VertexSet& a);

/// A ⋈ B: every vertex of A is adjacent to every vertex of B.
bool is_joined(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Union of N(v) over v in A.
VertexSet neighborhood_union(const Graph& g, const VertexSet& a);

/// N^0(v), ..., N^depth(v): vertices reachable from v by walks of length exactly i.
std::vector<VertexSet> walk_layers(const Graph& g, std::size_t v, std::size_t depth);

/// Tensor (categorical) product; vertex (g,h) has index g*|V(H)| + h.
Graph tensor_product(const Graph& g, const Graph& h);

/// A ⋈ B implies |A| <= 1 or |B| <= 1.
bool is_square_free(const Graph& g);

/// Length of a shortest odd closed walk, or nullopt when g is bipartite.
std::optional<std::size_t> min_odd_closed_walk(const Graph& g);

std::size_t max_degree(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& vertices);

/// Connected components as ascending vertex lists, ordered by smallest member.
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);

// Text format:
//   p <n> <m>
//   e <u> <v>      (m lines, loops as e v v)
//   l <v> <label>  (optional, all or none)
// The writer emits edges in lexicographic order and labels by vertex, so
// any file it produced reads back and rewrites byte for byte.
void write_graph(std::ostream& out, const Graph& g);
std::string to_text(const Graph& g);
Graph read_graph(std::istream& in);
Graph graph_from_text(const std::string& text);
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

} // namespace omegalab
