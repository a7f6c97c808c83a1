#pragma once
// Slow reference implementations used only by the tests. They share no code
// with the library beyond the Graph and Simplex containers.

#include "omegalab/box.hpp"
#include "omegalab/graph.hpp"
#include "omegalab/morse.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency(const omegalab::Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

/// Tries all |H|^|G| maps.
inline bool hom_exists(const omegalab::Graph& g, const omegalab::Graph& h) {
  const std::size_t n = g.order(), m = h.order();
  if (n == 0) return true;
  if (m == 0) return false;
  const Matrix a = adjacency(g), b = adjacency(h);
  std::vector<std::size_t> f(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u; v < n && ok; ++v)
        if (a[u][v] && !b[f[u]][f[v]]) ok = false;
    if (ok) return true;
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) return false;
  }
}

inline bool joined(const Matrix& a, std::uint32_t x, std::uint32_t y) {
  for (std::size_t u = 0; u < a.size(); ++u)
    if (x >> u & 1)
      for (std::size_t v = 0; v < a.size(); ++v)
        if ((y >> v & 1) && !a[u][v]) return false;
  return true;
}

/// Tuples (A_0..A_l) as bitmasks, A_0 a singleton, all nonempty, consecutive joined.
inline std::vector<std::vector<std::uint32_t>> omega_tuples(const omegalab::Graph& g, std::size_t l) {
  const Matrix a = adjacency(g);
  const std::uint32_t full = (1U << g.order()) - 1;
  std::vector<std::vector<std::uint32_t>> out, next;
  for (std::size_t v = 0; v < g.order(); ++v) out.push_back({1U << v});
  for (std::size_t i = 0; i < l; ++i) {
    next.clear();
    for (const auto& t : out)
      for (std::uint32_t s = 1; s <= full; ++s)
        if (joined(a, t.back(), s)) {
          auto u = t;
          u.push_back(s);
          next.push_back(u);
        }
    out.swap(next);
  }
  return out;
}

/// Edge test of Omega_{2l+1} straight from the definition.
inline bool omega_adjacent(const Matrix& a, const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) {
  const std::size_t l = x.size() - 1;
  for (std::size_t i = 1; i <= l; ++i)
    if ((x[i - 1] & ~y[i]) || (y[i - 1] & ~x[i])) return false;
  return joined(a, x[l], y[l]);
}

/// Simplices of Bx(G) as pairs of masks (circ, bullet), enumerated over all pairs.
inline std::set<std::pair<std::uint32_t, std::uint32_t>> box_simplices(const omegalab::Graph& g) {
  const Matrix a = adjacency(g);
  const std::uint32_t full = (1U << g.order()) - 1;
  auto has_cn = [&](std::uint32_t s) {
    for (std::size_t w = 0; w < g.order(); ++w)
      if (joined(a, s, 1U << w)) return true;
    return false;
  };
  std::set<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t x = 0; x <= full; ++x)
    for (std::uint32_t y = 0; y <= full; ++y)
      if ((x | y) && joined(a, x, y) && has_cn(x) && has_cn(y)) out.emplace(x, y);
  return out;
}

inline std::size_t gf2_rank(Matrix m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && !m[p][c]) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][c])
        for (std::size_t j = 0; j < cols; ++j) m[r][j] = m[r][j] != m[rank][j];
    ++rank;
  }
  return rank;
}

/// Betti numbers from all faces of the given facets, trailing zeros dropped.
inline std::vector<std::size_t> betti(const std::vector<omegalab::Simplex>& facets) {
  std::set<omegalab::Simplex> faces;
  for (const auto& f : facets)
    for (std::uint32_t mask = 1; mask < (1U << f.size()); ++mask) {
      omegalab::Simplex s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask >> i & 1) s.push_back(f[i]);
      faces.insert(s);
    }
  std::map<std::size_t, std::vector<omegalab::Simplex>> by_dim;
  for (const auto& s : faces) by_dim[s.size() - 1].push_back(s);
  const std::size_t top = by_dim.empty() ? 0 : by_dim.rbegin()->first;
  std::vector<std::size_t> rank(top + 2, 0);
  for (std::size_t d = 1; d <= top; ++d) {
    const auto& rows = by_dim[d - 1];
    const auto& cols = by_dim[d];
    Matrix m(rows.size(), std::vector<bool>(cols.size(), false));
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t drop = 0; drop < cols[c].size(); ++drop) {
        auto face = cols[c];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        auto it = std::lower_bound(rows.begin(), rows.end(), face);
        m[static_cast<std::size_t>(it - rows.begin())][c] = true;
      }
    rank[d] = gf2_rank(std::move(m));
  }
  std::vector<std::size_t> b;
  if (by_dim.empty()) return b;
  for (std::size_t d = 0; d <= top; ++d) b.push_back(by_dim[d].size() - rank[d] - rank[d + 1]);
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

inline bool is_face(const omegalab::Simplex& small, const omegalab::Simplex& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// Reachability closure over the modified Hasse digraph of the matched pairs.
inline bool has_cycle(const omegalab::MorseMatching& m) {
  const std::size_t n = m.pairs.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && m.pairs[j].lower.size() == m.pairs[i].lower.size() && is_face(m.pairs[j].lower, m.pairs[i].upper))
        reach[i][j] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (reach[i][i]) return true;
  return false;
}

inline omegalab::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p, double loop_p) {
  omegalab::Graph g(n);
  std::bernoulli_distribution edge(p), loop(loop_p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v)
      if (u == v ? loop(rng) : edge(rng)) g.add_edge(u, v);
  return g;
}

/// A free Z2-complex on n graph vertices: random shore-respecting facets and their mirrors.
inline omegalab::Z2Complex random_free_complex(std::mt19937_64& rng, std::size_t n, std::size_t facets) {
  using namespace omegalab;
  std::vector<VertexToken> tokens;
  for (std::size_t v = 0; v < n; ++v) {
    tokens.push_back({v, Shore::circ});
    tokens.push_back({v, Shore::bullet});
  }
  std::uniform_int_distribution<int> pick(0, 2);
  std::set<Simplex> all;
  for (std::size_t f = 0; f < facets; ++f) {
    Simplex s, t;
    for (std::uint32_t v = 0; v < n; ++v) {
      int c = pick(rng);
      if (c == 2) continue;
      s.push_back(2 * v + static_cast<std::uint32_t>(c));
      t.push_back(2 * v + static_cast<std::uint32_t>(1 - c));
    }
    if (s.empty() || s.size() > 4) continue;
    all.insert(s);
    all.insert(t);
  }
  std::vector<Simplex> maximal;
  for (const auto& s : all) {
    bool covered = false;
    for (const auto& t : all)
      if (t.size() > s.size() && is_face(s, t)) covered = true;
    if (!covered) maximal.push_back(s);
  }
  return Z2Complex(tokens, maximal);
}

/// Random equivariant elementary collapses; the matched pairs form an acyclic matching.
inline omegalab::MorseMatching random_collapses(const omegalab::Z2Complex& k, omegalab::SimplexSet& remaining,
                                                std::mt19937_64& rng, int max_steps = 12) {
  omegalab::MorseMatching m;
  std::uniform_int_distribution<int> steps(0, max_steps);
  for (int n = steps(rng); n > 0; --n) {
    std::vector<omegalab::MorsePair> free;
    for (const auto& s : remaining) {
      std::vector<const omegalab::Simplex*> up;
      for (const auto& t : remaining)
        if (t.size() > s.size() && is_face(s, t)) up.push_back(&t);
      if (up.size() == 1 && up[0]->size() == s.size() + 1) free.push_back({s, *up[0]});
    }
    if (free.empty()) break;
    std::sort(free.begin(), free.end(),
              [](const omegalab::MorsePair& a, const omegalab::MorsePair& b) { return a.lower < b.lower; });
    const omegalab::MorsePair p = free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
    const omegalab::MorsePair q{k.mirror(p.lower), k.mirror(p.upper)};
    for (const auto& x : {p, q}) {
      remaining.erase(x.lower);
      remaining.erase(x.upper);
      m.pairs.push_back(x);
    }
  }
  return m;
}

inline std::vector<omegalab::Simplex> maximal(const omegalab::SimplexSet& s) {
  std::vector<omegalab::Simplex> out;
  for (const auto& a : s) {
    bool top = true;
    for (const auto& b : s)
      if (b.size() > a.size() && is_face(a, b)) top = false;
    if (top) out.push_back(a);
  }
  return out;
}

/// Greedy codimension-one pairing over a shuffled simplex list; may contain cycles.
inline omegalab::MorseMatching random_matching(const omegalab::Z2Complex& k, std::mt19937_64& rng) {
  auto simplices = omegalab::enumerate_simplices(k);
  std::shuffle(simplices.begin(), simplices.end(), rng);
  omegalab::MorseMatching m;
  std::set<omegalab::Simplex> used;
  for (const auto& t : simplices) {
    if (t.size() < 2 || used.count(t)) continue;
    for (std::size_t drop = 0; drop < t.size(); ++drop) {
      omegalab::Simplex s = t;
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(drop));
      if (used.count(s)) continue;
      used.insert(s);
      used.insert(t);
      m.pairs.push_back({s, t});
      break;
    }
  }
  return m;
}

} // namespace oracle
