#include "omegalab/functors.hpp"

#include "omegalab/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace omegalab {
namespace {

void require_odd(std::size_t k) {
  if (k == 0 || k % 2 == 0) throw ParameterError("k must be an odd integer >= 1, got " + std::to_string(k));
}

std::vector<std::string> omega_labels(const std::vector<OmegaVertex>& vs) {
  std::vector<std::string> labels;
  labels.reserve(vs.size());
  for (const auto& v : vs) labels.push_back(v.label());
  return labels;
}

// Vertex at distance `pos` from u along the subdivided edge u..v (either orientation).
class SubdivisionIndex {
public:
  SubdivisionIndex(const Graph& g, std::size_t k) : n_(g.order()), k_(k) {
    std::size_t i = 0;
    for (auto e : g.edges()) edge_index_[e] = i++;
  }

  std::size_t vertex(std::size_t u, std::size_t v, std::size_t pos) const {
    if (u > v) {
      std::swap(u, v);
      pos = k_ - pos;
    }
    if (pos == 0) return u;
    if (pos == k_) return v;
    auto it = edge_index_.find({u, v});
    if (it == edge_index_.end()) throw ContractError("not an edge of the base graph");
    return n_ + it->second * (k_ - 1) + (pos - 1);
  }

private:
  std::size_t n_, k_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index_;
};

} // namespace

std::string OmegaVertex::label() const {
  std::ostringstream os;
  os << base();
  for (std::size_t i = 1; i < sets.size(); ++i) {
    if (i > 1) os << '|';
    os << '{';
    bool first = true;
    sets[i].for_each([&](std::size_t m) {
      if (!first) os << ' ';
      os << m;
      first = false;
    });
    os << '}';
  }
  return os.str();
}

std::size_t OmegaVertexHash::operator()(const OmegaVertex& v) const noexcept {
  std::size_t h = v.sets.size();
  for (const auto& s : v.sets) h = h * 1000003u ^ s.hash();
  return h;
}

OmegaVertex parse_omega_label(const std::string& label, std::size_t n) {
  OmegaVertex out;
  std::size_t pos = 0;
  auto read_number = [&]() {
    std::size_t start = pos;
    while (pos < label.size() && label[pos] >= '0' && label[pos] <= '9') ++pos;
    if (start == pos) throw ParameterError("bad omega label '" + label + "'");
    std::size_t v = std::stoul(label.substr(start, pos - start));
    if (v >= n) throw ParameterError("omega label member out of range");
    return v;
  };
  out.sets.push_back(VertexSet::singleton(n, read_number()));
  while (pos < label.size()) {
    if (out.sets.size() > 1) {
      if (label[pos] != '|') throw ParameterError("bad omega label '" + label + "'");
      ++pos;
    }
    if (pos >= label.size() || label[pos] != '{') throw ParameterError("bad omega label '" + label + "'");
    ++pos;
    VertexSet s(n);
    while (pos < label.size() && label[pos] != '}') {
      if (s.any()) {
        if (label[pos] != ' ') throw ParameterError("bad omega label '" + label + "'");
        ++pos;
      }
      s.set(read_number());
    }
    if (pos >= label.size()) throw ParameterError("unterminated omega label '" + label + "'");
    ++pos;
    out.sets.push_back(std::move(s));
  }
  return out;
}

std::optional<std::size_t> FunctorResult::index_of(const OmegaVertex& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void FunctorResult::rebuild_index() {
  index_.clear();
  index_.reserve(omega_vertices.size());
  for (std::size_t i = 0; i < omega_vertices.size(); ++i) index_.emplace(omega_vertices[i], i);
}

FunctorResult subdivide(const Graph& g, std::size_t k) {
  require_odd(k);
  const std::size_t n = g.order();
  const auto edges = g.edges();
  FunctorResult r;
  r.kind = FunctorKind::subdivision;
  r.k = k;
  r.graph = Graph(n + edges.size() * (k - 1));
  r.subdivision.resize(r.graph.order());
  for (std::size_t v = 0; v < n; ++v) r.subdivision[v] = {v, v, 0, true};

  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) labels.push_back(g.label(v));

  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    std::size_t prev = u;
    for (std::size_t pos = 1; pos < k; ++pos) {
      std::size_t x = n + e * (k - 1) + (pos - 1);
      r.subdivision[x] = {u, v, pos, false};
      labels.push_back(std::to_string(u) + "-" + std::to_string(v) + ":" + std::to_string(pos));
      r.graph.add_edge(prev, x);
      prev = x;
    }
    r.graph.add_edge(prev, v);
  }
  r.graph.set_labels(std::move(labels));
  return r;
}

Graph power(const Graph& g, std::size_t k) {
  require_odd(k);
  Graph out(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    VertexSet reach = g.singleton(u);
    for (std::size_t i = 0; i < k; ++i) reach = neighborhood_union(g, reach);
    reach.for_each([&](std::size_t v) {
      if (v >= u) out.add_edge(u, v);
    });
  }
  if (g.has_labels()) out.set_labels(g.labels());
  return out;
}

FunctorResult omega(const Graph& g, std::size_t k, std::size_t vertex_budget) {
  require_odd(k);
  const std::size_t n = g.order();
  const std::size_t depth = (k - 1) / 2;

  FunctorResult r;
  r.kind = FunctorKind::omega;
  r.k = k;

  std::vector<VertexSet> prefix;
  auto emit = [&] {
    if (r.omega_vertices.size() >= vertex_budget)
      throw ResourceError("Omega_" + std::to_string(k) + " exceeds vertex budget of " + std::to_string(vertex_budget));
    r.omega_vertices.push_back(OmegaVertex{prefix});
  };
  auto extend = [&](auto&& self) -> void {
    if (prefix.size() == depth + 1) {
      emit();
      return;
    }
    const auto pool = common_neighborhood(g, prefix.back()).members();
    if (pool.size() >= 63 || ((std::uint64_t{1} << pool.size()) - 1) > vertex_budget)
      throw ResourceError("Omega_" + std::to_string(k) + " exceeds vertex budget of " + std::to_string(vertex_budget));
    const std::uint64_t subsets = std::uint64_t{1} << pool.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
      VertexSet s(n);
      for (std::size_t b = 0; b < pool.size(); ++b)
        if (mask >> b & 1U) s.set(pool[b]);
      prefix.push_back(std::move(s));
      self(self);
      prefix.pop_back();
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    prefix.assign(1, g.singleton(v));
    extend(extend);
  }

  const std::size_t count = r.omega_vertices.size();
  r.graph = Graph(count);
  if (depth == 0) {
    for (auto [u, v] : g.edges()) r.graph.add_edge(u, v);
  } else {
    std::vector<std::vector<std::size_t>> by_base(n);
    std::vector<VertexSet> cn_last;
    cn_last.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      by_base[r.omega_vertices[i].base()].push_back(i);
      cn_last.push_back(common_neighborhood(g, r.omega_vertices[i].last()));
    }
    for (std::size_t a = 0; a < count; ++a) {
      const auto& A = r.omega_vertices[a].sets;
      A[1].for_each([&](std::size_t b) {
        for (std::size_t bi : by_base[b]) {
          if (bi < a) continue;
          const auto& B = r.omega_vertices[bi].sets;
          if (!B[depth].is_subset_of(cn_last[a])) continue;
          bool ok = true;
          for (std::size_t i = 1; i <= depth && ok; ++i)
            ok = A[i - 1].is_subset_of(B[i]) && B[i - 1].is_subset_of(A[i]);
          if (ok) r.graph.add_edge(a, bi);
        }
      });
    }
  }
  r.graph.set_labels(omega_labels(r.omega_vertices));
  r.rebuild_index();
  return r;
}

OmegaVertex phi(const Graph& g, const OmegaVertex& v) {
  if (v.depth() < 1) throw ParameterError("phi needs tuples with at least two components");
  OmegaVertex out = v;
  out.sets.back() = common_neighborhood(g, v.sets[v.depth() - 1]);
  return out;
}

std::vector<bool> phi_image(const Graph& g, const FunctorResult& om) {
  std::vector<bool> image(om.omega_vertices.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    const auto& v = om.omega_vertices[i];
    image[i] = v.last() == common_neighborhood(g, v.sets[v.depth() - 1]);
  }
  return image;
}

FunctorResult omega_prime(const Graph& g, std::size_t k, std::size_t vertex_budget) {
  if (k < 1) throw ParameterError("omega_prime needs k >= 1");
  FunctorResult r = omega(g, 2 * k + 1, vertex_budget);
  r.kind = FunctorKind::omega_prime;
  std::vector<std::size_t> phi_index(r.omega_vertices.size());
  for (std::size_t i = 0; i < phi_index.size(); ++i) {
    auto idx = r.index_of(phi(g, r.omega_vertices[i]));
    if (!idx) throw ContractError("phi image is not an Omega vertex: " + r.omega_vertices[i].label());
    phi_index[i] = *idx;
  }
  const auto base_edges = r.graph.edges();
  for (auto [a, b] : base_edges) {
    r.graph.add_edge(a, phi_index[b]);
    r.graph.add_edge(phi_index[a], b);
    r.graph.add_edge(phi_index[a], phi_index[b]);
  }
  return r;
}

Homomorphism projection_p(const Graph& g, const FunctorResult& om) {
  std::vector<std::size_t> map(om.omega_vertices.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = om.omega_vertices[i].base();
  return Homomorphism(om.graph, g, std::move(map));
}

Homomorphism truncation(const FunctorResult& from, const FunctorResult& to) {
  if (from.k != to.k + 2) throw ParameterError("truncation maps Omega_k to Omega_{k-2}");
  std::vector<std::size_t> map(from.omega_vertices.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    OmegaVertex t = from.omega_vertices[i];
    t.sets.pop_back();
    auto idx = to.index_of(t);
    if (!idx) throw ContractError("truncated tuple missing: " + t.label());
    map[i] = *idx;
  }
  return Homomorphism(from.graph, to.graph, std::move(map));
}

Homomorphism adjoint_witness_to_omega(const Graph& g, const Graph& h, std::size_t k, const Homomorphism& f,
                                      const FunctorResult& omega_h) {
  require_odd(k);
  if (f.source_order() != g.order() || f.target_order() != h.order())
    throw ContractError("witness does not map Pi_k(G) to H");
  const std::size_t depth = (k - 1) / 2;
  std::vector<std::size_t> map(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (g.is_isolated(v) && depth > 0) {
      if (omega_h.omega_vertices.empty()) throw ContractError("Omega_k(H) is empty; isolated vertex has no image");
      map[v] = 0;
      for (std::size_t i = 0; i < omega_h.omega_vertices.size(); ++i)
        if (omega_h.omega_vertices[i].base() == f(v)) {
          map[v] = i;
          break;
        }
      continue;
    }
    OmegaVertex image;
    for (const auto& layer : walk_layers(g, v, depth)) {
      VertexSet s(h.order());
      layer.for_each([&](std::size_t u) { s.set(f(u)); });
      image.sets.push_back(std::move(s));
    }
    auto idx = omega_h.index_of(image);
    if (!idx) throw ContractError("image tuple " + image.label() + " is not a vertex of Omega_k(H)");
    map[v] = *idx;
  }
  return Homomorphism(g, omega_h.graph, std::move(map));
}

Homomorphism adjoint_witness_from_omega(const Graph& g, const Graph& h, std::size_t k, const Homomorphism& f,
                                        const FunctorResult& omega_h) {
  std::vector<std::size_t> map(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) map[v] = omega_h.omega_vertices.at(f(v)).base();
  return Homomorphism(power(g, k), h, std::move(map));
}

Homomorphism subdivision_embedding(const Graph& g, const FunctorResult& gamma, const FunctorResult& om) {
  const std::size_t k = om.k;
  if (k < 3 || gamma.k != k) throw ParameterError("subdivision_embedding needs matching odd k >= 3");
  if (g.has_loops()) throw ParameterError("subdivision_embedding needs a loopless graph");
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.is_isolated(v)) throw ParameterError("subdivision_embedding needs a graph without isolated vertices");
  const std::size_t depth = (k - 1) / 2;

  // Row j of the path a = x_0, ..., x_k = b, built from the nearer endpoint.
  auto row = [&](std::size_t near, std::size_t far, std::size_t j) {
    OmegaVertex t;
    for (std::size_t i = 0; i <= depth; ++i) {
      if (i < j)
        t.sets.push_back((j - i) % 2 == 0 ? g.singleton(near) : g.singleton(far));
      else
        t.sets.push_back((i - j) % 2 == 0 ? g.singleton(near) : g.neighbors(near));
    }
    return t;
  };

  std::vector<std::size_t> map(gamma.graph.order());
  for (std::size_t x = 0; x < map.size(); ++x) {
    const auto& o = gamma.subdivision[x];
    OmegaVertex t = o.original ? row(o.u, o.u, 0)
                    : o.position <= depth ? row(o.u, o.v, o.position)
                                          : row(o.v, o.u, k - o.position);
    auto idx = om.index_of(t);
    if (!idx) throw ContractError("embedding row " + t.label() + " is not an Omega vertex");
    map[x] = *idx;
  }
  return Homomorphism(gamma.graph, om.graph, std::move(map));
}

Homomorphism squarefree_retraction(const Graph& g, const FunctorResult& om, const FunctorResult& gamma) {
  if (g.has_loops() || !is_square_free(g)) throw ContractError("squarefree_retraction needs a square-free loopless graph");
  const std::size_t k = om.k;
  if (gamma.k != k) throw ParameterError("k mismatch between Omega and Gamma");
  SubdivisionIndex paths(g, k);
  std::vector<std::size_t> map(om.omega_vertices.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    const auto& sets = om.omega_vertices[i].sets;
    const std::size_t a = sets[0].first();
    std::size_t j = 0;
    while (j + 1 < sets.size() && sets[j + 1].count() == 1) ++j;
    if (j == 0) {
      map[i] = a;
    } else {
      const std::size_t b = sets[1].first();
      map[i] = paths.vertex(a, b, j % 2 == 0 ? j : k - j);
    }
  }
  return Homomorphism(om.graph, gamma.graph, std::move(map));
}

} // namespace omegalab
