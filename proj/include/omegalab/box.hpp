#pragma once
// Box complexes Bx(G) as free-or-not Z2-simplicial complexes.

#include "omegalab/graph.hpp"
#include "omegalab/homomorphism.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace omegalab {

enum class Shore : std::uint8_t { circ = 0, bullet = 1 };

inline Shore opposite(Shore s) { return s == Shore::circ ? Shore::bullet : Shore::circ; }

/// (v, circ) or (v, bullet); written `+` and `-` in files.
struct VertexToken {
  std::size_t graph_vertex = 0;
  Shore shore = Shore::circ;
  friend bool operator==(const VertexToken&, const VertexToken&) = default;
};

/// Ascending complex vertex ids.
using Simplex = std::vector<std::uint32_t>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = s.size();
    for (auto v : s) h = (h ^ v) * 0x100000001b3ULL;
    return h;
  }
};

/// Simplicial complex given by its facets, with the shore-swap involution.
class Z2Complex {
public:
  Z2Complex() = default;
  /// Every token must have its mirror token present. Facets are kept as given.
  Z2Complex(std::vector<VertexToken> vertices, std::vector<Simplex> facets);

  std::size_t num_vertices() const noexcept { return tokens_.size(); }
  const VertexToken& token(std::uint32_t id) const { return tokens_[id]; }
  const std::vector<VertexToken>& tokens() const noexcept { return tokens_; }
  std::uint32_t mirror(std::uint32_t id) const { return mirror_[id]; }
  Simplex mirror(const Simplex& s) const;
  std::optional<std::uint32_t> id_of(VertexToken t) const;

  const std::vector<Simplex>& facets() const noexcept { return facets_; }

  /// No simplex holds both (v,circ) and (v,bullet).
  bool is_free() const noexcept { return free_; }

  /// Nonempty and contained in some facet.
  bool contains(const Simplex& s) const;

  /// Antichain and involution-closed facet list; nullopt when both hold.
  std::optional<std::string> invariant_violation() const;

  friend bool operator==(const Z2Complex& a, const Z2Complex& b) {
    return a.tokens_ == b.tokens_ && a.facets_ == b.facets_;
  }

private:
  std::vector<VertexToken> tokens_;
  std::vector<std::uint32_t> mirror_;
  std::vector<Simplex> facets_;
  std::vector<std::vector<std::uint32_t>> facets_of_vertex_;
  std::vector<std::uint32_t> id_lookup_;
  bool free_ = true;
};

/// Bx(G). Isolated vertices are dropped; the remaining vertex of rank r gets
/// ids 2r (circ) and 2r+1 (bullet). Facets are A∘ ∪ CN(A)• over Galois-closed
/// nonempty A with CN(A) nonempty, sorted lexicographically.
Z2Complex build_box(const Graph& g);

/// σ∘ ⋈ σ•, both common neighborhoods nonempty, σ nonempty.
bool is_box_simplex(const Graph& g, const VertexSet& circ, const VertexSet& bullet);

/// The two shores of a simplex of a complex built from a graph of order n.
std::pair<VertexSet, VertexSet> shores_of(const Z2Complex& k, const Simplex& s, std::size_t n);

struct SimplicialZ2Map {
  const Z2Complex* source = nullptr;
  const Z2Complex* target = nullptr;
  std::vector<std::uint32_t> vertex_map;

  std::uint32_t operator()(std::uint32_t v) const { return vertex_map[v]; }
  Simplex image(const Simplex& s) const;
};

/// Facets map into simplices and mirrors commute with the map.
std::optional<std::string> simplicial_map_violation(const SimplicialZ2Map& f);

/// |h|: (v,s) -> (h(v),s). Throws ContractError if the result is not simplicial and equivariant.
SimplicialZ2Map induced_map(const Homomorphism& h, const Z2Complex& source, const Z2Complex& target);

constexpr std::size_t kDefaultSimplexBudget = 10'000'000;

/// All simplices, ordered by dimension and then lexicographically.
/// Throws ResourceError past `budget` simplices.
std::vector<Simplex> enumerate_simplices(const Z2Complex& k, std::size_t budget = kDefaultSimplexBudget);
std::vector<Simplex> enumerate_simplices(const std::vector<Simplex>& facets, std::size_t budget = kDefaultSimplexBudget);

// Text format:
//   c <num_vertices>
//   n <id> <graph-vertex> <+|->   (one per id, ascending)
//   f <id> <id> ...               (ascending ids, one line per facet)
void write_complex(std::ostream& out, const Z2Complex& k);
std::string complex_to_text(const Z2Complex& k);
Z2Complex read_complex(std::istream& in);
Z2Complex complex_from_text(const std::string& text);
Z2Complex read_complex_file(const std::string& path);
void write_complex_file(const std::string& path, const Z2Complex& k);

std::string simplex_to_string(const Simplex& s);

} // namespace omegalab
