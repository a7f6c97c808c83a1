#include "omegalab/approx.hpp"

#include "omegalab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace omegalab {

Rational squared_distance(const RationalPoint& a, const RationalPoint& b) {
  Rational sum = 0;
  auto ia = a.coeffs.begin();
  auto ib = b.coeffs.begin();
  while (ia != a.coeffs.end() || ib != b.coeffs.end()) {
    Rational d;
    if (ib == b.coeffs.end() || (ia != a.coeffs.end() && ia->first < ib->first)) {
      d = ia++->second;
    } else if (ia == a.coeffs.end() || ib->first < ia->first) {
      d = ib++->second;
    } else {
      d = ia++->second - ib++->second;
    }
    sum += d * d;
  }
  return sum;
}

ApproxMap approx_map_g(const Graph& g, std::size_t k, std::size_t vertex_budget) {
  if (k < 1) throw ParameterError("k must be at least 1");
  if (g.has_loops()) throw ParameterError("the approximation map needs a loopless graph");
  ApproxMap m;
  m.base = g;
  m.k = k;
  m.omega = omega(g, 2 * k + 1, vertex_budget);
  m.source = build_box(m.omega.graph);
  m.target = build_box(g);
  m.images.resize(m.source.num_vertices());
  const Rational outer(1, static_cast<long long>(k + 1));
  for (std::uint32_t id = 0; id < m.source.num_vertices(); ++id) {
    const auto& tok = m.source.token(id);
    const auto& sets = m.omega.omega_vertices[tok.graph_vertex].sets;
    RationalPoint p;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const Shore shore = i % 2 == 0 ? tok.shore : opposite(tok.shore);
      const Rational weight = outer / static_cast<long long>(sets[i].count());
      sets[i].for_each([&](std::size_t v) {
        auto target_id = m.target.id_of({v, shore});
        if (!target_id) throw ContractError("component vertex is isolated in G");
        p.coeffs[*target_id] += weight;
      });
    }
    m.images[id] = std::move(p);
  }
  return m;
}

Rational simplex_image_diameter_sq(const ApproxMap& m, const Simplex& s) {
  if (!m.source.contains(s)) throw ContractError("not a simplex: " + simplex_to_string(s));
  Rational best = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) best = std::max(best, squared_distance(m.images[s[i]], m.images[s[j]]));
  return best;
}

bool carrier_check(const ApproxMap& m, const Z2Complex& target, std::size_t simplex_budget) {
  for (const auto& s : enumerate_simplices(m.source, simplex_budget)) {
    Simplex carrier;
    auto add = [&](VertexToken t) {
      auto id = target.id_of(t);
      if (!id) return false;
      carrier.push_back(*id);
      return true;
    };
    for (auto x : s) {
      const auto& tok = m.source.token(x);
      if (!add({m.omega.omega_vertices[tok.graph_vertex].base(), tok.shore})) return false;
      for (const auto& [y, c] : m.images[x].coeffs)
        if (!add(m.target.token(y))) return false;
    }
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    if (!target.contains(carrier)) return false;
  }
  return true;
}

bool is_equivariant(const ApproxMap& m) {
  for (std::uint32_t id = 0; id < m.images.size(); ++id) {
    RationalPoint mirrored;
    for (const auto& [y, c] : m.images[id].coeffs) mirrored.coeffs[m.target.mirror(y)] = c;
    if (!(mirrored == m.images[m.source.mirror(id)])) return false;
  }
  return true;
}

bool denominators_bounded(const ApproxMap& m) {
  long long lcm = 1;
  for (long long i = 2; i <= static_cast<long long>(max_degree(m.base)); ++i) lcm = std::lcm(lcm, i);
  const boost::multiprecision::cpp_int bound = lcm * static_cast<long long>(m.k + 1);
  for (const auto& p : m.images) {
    Rational total = 0;
    for (const auto& [y, c] : p.coeffs) {
      if (c <= 0 || bound % boost::multiprecision::denominator(c) != 0) return false;
      total += c;
    }
    if (total != 1) return false;
  }
  return true;
}

ApproxReport approx_report(const Graph& g, std::size_t k, std::size_t vertex_budget, std::size_t simplex_budget) {
  const ApproxMap m = approx_map_g(g, k, vertex_budget);
  ApproxReport r;
  r.k = k;
  r.max_degree = max_degree(g);
  const Rational bound(6 * static_cast<long long>(r.max_degree), static_cast<long long>(k));
  r.bound_sq = bound * bound;
  r.max_diameter_sq = 0;
  for (const auto& f : m.source.facets()) {
    Rational d = simplex_image_diameter_sq(m, f);
    r.max_diameter_sq = std::max(r.max_diameter_sq, d);
    r.facets.push_back({f, std::move(d)});
  }
  r.below_bound = r.max_diameter_sq < r.bound_sq;
  r.carrier_ok = carrier_check(m, m.target, simplex_budget);
  r.equivariant = is_equivariant(m);
  r.denominators_ok = denominators_bounded(m);
  return r;
}

} // namespace omegalab
