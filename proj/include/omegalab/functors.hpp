#pragma once
// Graph functors: k-subdivision, k-th power, and the right adjoint Omega_k
// of the power, together with the explicit homomorphisms relating them.

#include "omegalab/graph.hpp"
#include "omegalab/homomorphism.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace omegalab {

/// A vertex (A_0, ..., A_l) of Omega_{2l+1}(G): A_0 a singleton, every A_i
/// nonempty, consecutive components joined.
struct OmegaVertex {
  std::vector<VertexSet> sets;

  std::size_t base() const { return sets.front().first(); }
  std::size_t depth() const { return sets.size() - 1; }
  const VertexSet& last() const { return sets.back(); }

  /// `v{a b}|{c}` with members ascending; the base vertex alone when l = 0.
  std::string label() const;

  friend bool operator==(const OmegaVertex&, const OmegaVertex&) = default;
};

struct OmegaVertexHash {
  std::size_t operator()(const OmegaVertex& v) const noexcept;
};

/// Parses the label grammar back into sets over a base graph of order n.
OmegaVertex parse_omega_label(const std::string& label, std::size_t n);

enum class FunctorKind { subdivision, power, omega, omega_prime };

/// Where a vertex of a subdivision came from: edge (u,v) with u <= v and the
/// position along the path from u (0 and k are the original endpoints).
struct SubdivisionOrigin {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t position = 0;
  bool original = false;
};

struct FunctorResult {
  Graph graph;
  FunctorKind kind = FunctorKind::power;
  std::size_t k = 1;
  /// omega / omega_prime: vertex i of `graph` is omega_vertices[i].
  std::vector<OmegaVertex> omega_vertices;
  /// subdivision: origin of each vertex of `graph`.
  std::vector<SubdivisionOrigin> subdivision;

  /// Index of an Omega tuple, if it is a vertex of this construction.
  std::optional<std::size_t> index_of(const OmegaVertex& v) const;
  /// Recomputes the tuple lookup after omega_vertices changes.
  void rebuild_index();

private:
  std::unordered_map<OmegaVertex, std::size_t, OmegaVertexHash> index_;
};

constexpr std::size_t kDefaultVertexBudget = 1'000'000;

/// Gamma_k: every edge becomes a path with k edges; a loop at v becomes a
/// closed walk of length k through v. Original vertices keep their index.
FunctorResult subdivide(const Graph& g, std::size_t k);

/// Pi_k: uv is an edge iff some walk of length exactly k joins u and v.
Graph power(const Graph& g, std::size_t k);

/// Omega_k. Tuples are enumerated depth-first, each component running over
/// the nonempty subsets of the previous component's common neighborhood in
/// increasing bit-pattern order; this is the canonical vertex order.
/// Throws ResourceError above `vertex_budget` tuples.
FunctorResult omega(const Graph& g, std::size_t k, std::size_t vertex_budget = kDefaultVertexBudget);

/// (A_0..A_{l-1}, CN(A_{l-1})), for l >= 1.
OmegaVertex phi(const Graph& g, const OmegaVertex& v);

/// Omega'_{2k+1}: Omega_{2k+1} plus {A,phi B}, {phi A,B}, {phi A,phi B} for every edge {A,B}.
FunctorResult omega_prime(const Graph& g, std::size_t k, std::size_t vertex_budget = kDefaultVertexBudget);

/// Indices of im phi inside an omega / omega_prime result.
std::vector<bool> phi_image(const Graph& g, const FunctorResult& om);

/// p_k: Omega_k(G) -> G, (\{v\}, ...) -> v.
Homomorphism projection_p(const Graph& g, const FunctorResult& om);

/// Omega_k(G) -> Omega_{k-2}(G), dropping the last component.
Homomorphism truncation(const FunctorResult& from, const FunctorResult& to);

/// From f: Pi_k(G) -> H, the map v -> (f(N^0(v)), ..., f(N^l(v))) into Omega_k(H).
/// Isolated vertices of G go to the first tuple based at f(v), or to tuple 0.
Homomorphism adjoint_witness_to_omega(const Graph& g, const Graph& h, std::size_t k, const Homomorphism& f,
                                      const FunctorResult& omega_h);

/// From f: G -> Omega_k(H), the map v -> the single vertex of A_0 of f(v), as Pi_k(G) -> H.
Homomorphism adjoint_witness_from_omega(const Graph& g, const Graph& h, std::size_t k, const Homomorphism& f,
                                        const FunctorResult& omega_h);

/// The per-edge row homomorphism Gamma_k(G) -> Omega_k(G) for loopless G without isolated vertices, k >= 3.
/// Injective when every vertex has degree >= 2; a leaf a with N(a) = {b} makes rows 0 and 2 coincide.
Homomorphism subdivision_embedding(const Graph& g, const FunctorResult& gamma, const FunctorResult& om);

/// Omega_k(G) -> Gamma_k(G) for square-free loopless G.
Homomorphism squarefree_retraction(const Graph& g, const FunctorResult& om, const FunctorResult& gamma);

} // namespace omegalab
