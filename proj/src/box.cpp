#include "omegalab/box.hpp"

#include "omegalab/errors.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace omegalab {
namespace {

constexpr std::uint32_t kNoId = std::numeric_limits<std::uint32_t>::max();

bool is_subset(const Simplex& a, const Simplex& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

} // namespace

Z2Complex::Z2Complex(std::vector<VertexToken> vertices, std::vector<Simplex> facets)
    : tokens_(std::move(vertices)), facets_(std::move(facets)) {
  std::size_t max_gv = 0;
  for (const auto& t : tokens_) max_gv = std::max(max_gv, t.graph_vertex);
  id_lookup_.assign(tokens_.empty() ? 0 : 2 * (max_gv + 1), kNoId);
  for (std::uint32_t id = 0; id < tokens_.size(); ++id) {
    auto& slot = id_lookup_[2 * tokens_[id].graph_vertex + static_cast<std::size_t>(tokens_[id].shore)];
    if (slot != kNoId) throw ContractError("duplicate vertex token");
    slot = id;
  }
  mirror_.resize(tokens_.size());
  for (std::uint32_t id = 0; id < tokens_.size(); ++id) {
    auto m = id_of({tokens_[id].graph_vertex, opposite(tokens_[id].shore)});
    if (!m) throw ContractError("vertex " + std::to_string(id) + " has no mirror");
    mirror_[id] = *m;
  }
  facets_of_vertex_.resize(tokens_.size());
  for (std::uint32_t f = 0; f < facets_.size(); ++f) {
    const auto& s = facets_[f];
    if (s.empty()) throw ContractError("empty facet");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= tokens_.size()) throw ContractError("facet vertex out of range");
      if (i > 0 && s[i - 1] >= s[i]) throw ContractError("facet ids must be strictly ascending");
      facets_of_vertex_[s[i]].push_back(f);
      if (std::binary_search(s.begin(), s.end(), mirror_[s[i]])) free_ = false;
    }
  }
}

Simplex Z2Complex::mirror(const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (auto v : s) out.push_back(mirror_[v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::uint32_t> Z2Complex::id_of(VertexToken t) const {
  const std::size_t slot = 2 * t.graph_vertex + static_cast<std::size_t>(t.shore);
  if (slot >= id_lookup_.size() || id_lookup_[slot] == kNoId) return std::nullopt;
  return id_lookup_[slot];
}

bool Z2Complex::contains(const Simplex& s) const {
  if (s.empty()) return false;
  const std::vector<std::uint32_t>* best = nullptr;
  for (auto v : s) {
    if (v >= tokens_.size()) return false;
    if (!best || facets_of_vertex_[v].size() < best->size()) best = &facets_of_vertex_[v];
  }
  return std::any_of(best->begin(), best->end(), [&](std::uint32_t f) { return is_subset(s, facets_[f]); });
}

std::optional<std::string> Z2Complex::invariant_violation() const {
  std::unordered_set<Simplex, SimplexHash> facet_set(facets_.begin(), facets_.end());
  if (facet_set.size() != facets_.size()) return "duplicate facet";
  for (const auto& f : facets_) {
    if (!facet_set.count(mirror(f))) return "mirror of facet " + simplex_to_string(f) + " is not a facet";
    for (auto v : f)
      for (auto g : facets_of_vertex_[v])
        if (facets_[g] != f && is_subset(f, facets_[g]))
          return "facet " + simplex_to_string(f) + " is contained in " + simplex_to_string(facets_[g]);
  }
  return std::nullopt;
}

bool is_box_simplex(const Graph& g, const VertexSet& circ, const VertexSet& bullet) {
  if (circ.none() && bullet.none()) return false;
  return is_joined(g, circ, bullet) && common_neighborhood(g, circ).any() && common_neighborhood(g, bullet).any();
}

std::pair<VertexSet, VertexSet> shores_of(const Z2Complex& k, const Simplex& s, std::size_t n) {
  std::pair<VertexSet, VertexSet> out{VertexSet(n), VertexSet(n)};
  for (auto id : s) {
    const auto& t = k.token(id);
    (t.shore == Shore::circ ? out.first : out.second).set(t.graph_vertex);
  }
  return out;
}

Z2Complex build_box(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexToken> tokens;
  std::vector<std::uint32_t> rank(n, kNoId);
  for (std::size_t v = 0; v < n; ++v) {
    if (g.is_isolated(v)) continue;
    rank[v] = static_cast<std::uint32_t>(tokens.size() / 2);
    tokens.push_back({v, Shore::circ});
    tokens.push_back({v, Shore::bullet});
  }

  // Closed sets, reached from closures of singletons by adding one vertex at a time.
  std::unordered_set<VertexSet, BitsetHash> seen;
  std::deque<VertexSet> queue;
  auto visit = [&](VertexSet a) {
    if (seen.insert(a).second) queue.push_back(std::move(a));
  };
  for (std::size_t v = 0; v < n; ++v)
    if (!g.is_isolated(v)) visit(common_neighborhood(g, g.neighbors(v)));

  std::vector<Simplex> facets;
  while (!queue.empty()) {
    VertexSet a = std::move(queue.front());
    queue.pop_front();
    const VertexSet cn = common_neighborhood(g, a);
    Simplex f;
    a.for_each([&](std::size_t v) { f.push_back(2 * rank[v]); });
    cn.for_each([&](std::size_t v) { f.push_back(2 * rank[v] + 1); });
    std::sort(f.begin(), f.end());
    facets.push_back(std::move(f));
    for (std::size_t w = 0; w < n; ++w) {
      if (a.test(w)) continue;
      VertexSet shared = cn & g.neighbors(w);
      if (shared.any()) visit(common_neighborhood(g, shared));
    }
  }
  std::sort(facets.begin(), facets.end());
  return Z2Complex(std::move(tokens), std::move(facets));
}

Simplex SimplicialZ2Map::image(const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (auto v : s) out.push_back(vertex_map[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::string> simplicial_map_violation(const SimplicialZ2Map& f) {
  if (!f.source || !f.target) return "map has no source or target";
  if (f.vertex_map.size() != f.source->num_vertices()) return "vertex map size mismatch";
  for (std::uint32_t v = 0; v < f.vertex_map.size(); ++v) {
    if (f.vertex_map[v] >= f.target->num_vertices()) return "vertex image out of range";
    if (f.target->mirror(f.vertex_map[v]) != f.vertex_map[f.source->mirror(v)])
      return "map does not commute with the involution at vertex " + std::to_string(v);
  }
  for (const auto& facet : f.source->facets())
    if (!f.target->contains(f.image(facet))) return "facet " + simplex_to_string(facet) + " maps to a non-simplex";
  return std::nullopt;
}

SimplicialZ2Map induced_map(const Homomorphism& h, const Z2Complex& source, const Z2Complex& target) {
  SimplicialZ2Map f{&source, &target, std::vector<std::uint32_t>(source.num_vertices())};
  for (std::uint32_t v = 0; v < source.num_vertices(); ++v) {
    const auto& t = source.token(v);
    auto id = target.id_of({h(t.graph_vertex), t.shore});
    if (!id) throw ContractError("image of a non-isolated vertex is isolated");
    f.vertex_map[v] = *id;
  }
  if (auto why = simplicial_map_violation(f)) throw ContractError("induced map invalid: " + *why);
  return f;
}

std::vector<Simplex> enumerate_simplices(const std::vector<Simplex>& facets, std::size_t budget) {
  std::unordered_set<Simplex, SimplexHash> all;
  Simplex face;
  for (const auto& f : facets) {
    if (f.size() >= 40) throw ResourceError("facet too large to enumerate");
    const std::uint64_t subsets = std::uint64_t{1} << f.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
      face.clear();
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask >> i & 1U) face.push_back(f[i]);
      if (all.insert(face).second && all.size() > budget)
        throw ResourceError("complex exceeds simplex budget of " + std::to_string(budget));
    }
  }
  std::vector<Simplex> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Simplex> enumerate_simplices(const Z2Complex& k, std::size_t budget) {
  return enumerate_simplices(k.facets(), budget);
}

std::string simplex_to_string(const Simplex& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

void write_complex(std::ostream& out, const Z2Complex& k) {
  out << "c " << k.num_vertices() << '\n';
  for (std::uint32_t id = 0; id < k.num_vertices(); ++id)
    out << "n " << id << ' ' << k.token(id).graph_vertex << ' ' << (k.token(id).shore == Shore::circ ? '+' : '-')
        << '\n';
  for (const auto& f : k.facets()) {
    out << 'f';
    for (auto v : f) out << ' ' << v;
    out << '\n';
  }
}

std::string complex_to_text(const Z2Complex& k) {
  std::ostringstream os;
  write_complex(os, k);
  return os.str();
}

Z2Complex read_complex(std::istream& in) {
  using detail::parse_index;
  const auto lines = detail::read_lines(in);
  if (lines.empty()) throw ParseError(1, "missing 'c <num_vertices>' header");
  auto header = detail::split_fields(lines[0], 1);
  if (header.size() != 2 || header[0] != "c") throw ParseError(1, "expected 'c <num_vertices>'");
  const std::size_t count = parse_index(header[1], 1);
  if (lines.size() < count + 1) throw ParseError(lines.size(), "missing vertex lines");

  std::vector<VertexToken> tokens;
  for (std::size_t id = 0; id < count; ++id) {
    const std::size_t lineno = id + 2;
    auto fields = detail::split_fields(lines[id + 1], lineno);
    if (fields.size() != 4 || fields[0] != "n") throw ParseError(lineno, "expected 'n <id> <graph-vertex> <+|->'");
    if (parse_index(fields[1], lineno) != id) throw ParseError(lineno, "vertex ids must be consecutive from 0");
    const std::size_t gv = parse_index(fields[2], lineno);
    if (fields[3] != "+" && fields[3] != "-") throw ParseError(lineno, "shore must be + or -");
    tokens.push_back({gv, fields[3] == "+" ? Shore::circ : Shore::bullet});
  }

  std::vector<Simplex> facets;
  for (std::size_t i = count + 1; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    auto fields = detail::split_fields(lines[i], lineno);
    if (fields[0] != "f" || fields.size() < 2) throw ParseError(lineno, "expected 'f <id> ...'");
    Simplex f;
    for (std::size_t j = 1; j < fields.size(); ++j) {
      const std::size_t v = parse_index(fields[j], lineno);
      if (v >= count) throw ParseError(lineno, "facet vertex out of range");
      if (!f.empty() && f.back() >= v) throw ParseError(lineno, "facet ids must be strictly ascending");
      f.push_back(static_cast<std::uint32_t>(v));
    }
    facets.push_back(std::move(f));
  }
  try {
    return Z2Complex(std::move(tokens), std::move(facets));
  } catch (const ContractError& e) {
    throw ParseError(lines.size(), e.what());
  }
}

Z2Complex complex_from_text(const std::string& text) {
  std::istringstream is(text);
  return read_complex(is);
}

Z2Complex read_complex_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open " + path);
  return read_complex(in);
}

void write_complex_file(const std::string& path, const Z2Complex& k) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path);
  write_complex(out, k);
}

} // namespace omegalab
