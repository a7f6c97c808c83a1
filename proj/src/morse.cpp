#include "omegalab/morse.hpp"

#include "omegalab/errors.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <unordered_map>

namespace omegalab {
namespace {

bool dim_lex_less(const Simplex& a, const Simplex& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; }

bool is_codim_one_face(const Simplex& lower, const Simplex& upper) {
  return lower.size() + 1 == upper.size() && std::includes(upper.begin(), upper.end(), lower.begin(), lower.end());
}

template <class F>
void for_each_facet(const Simplex& s, F&& f) {
  if (s.size() < 2) return;
  Simplex face(s.size() - 1);
  for (std::size_t skip = 0; skip < s.size(); ++skip) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (i != skip) face[j++] = s[i];
    f(face);
  }
}

} // namespace

std::vector<Simplex> sorted_simplices(const SimplexSet& all) {
  std::vector<Simplex> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), dim_lex_less);
  return out;
}

std::optional<std::string> matching_violation(const Z2Complex& k, const SimplexSet& complex, const SimplexSet& sub,
                                              const MorseMatching& m) {
  for (const auto& s : sub) {
    if (!complex.count(s)) return "subcomplex simplex " + simplex_to_string(s) + " is not in the complex";
    std::optional<std::string> bad;
    for_each_facet(s, [&](const Simplex& f) {
      if (!bad && !sub.count(f)) bad = "subcomplex is not closed under faces at " + simplex_to_string(s);
    });
    if (bad) return bad;
  }
  std::unordered_map<Simplex, const Simplex*, SimplexHash> partner;
  for (const auto& p : m.pairs) {
    if (!is_codim_one_face(p.lower, p.upper))
      return "pair " + simplex_to_string(p.lower) + " / " + simplex_to_string(p.upper) + " is not codimension one";
    for (const auto* s : {&p.lower, &p.upper}) {
      if (!complex.count(*s)) return "matched simplex " + simplex_to_string(*s) + " is not in the complex";
      if (sub.count(*s)) return "matched simplex " + simplex_to_string(*s) + " lies in the subcomplex";
    }
    if (!partner.emplace(p.lower, &p.upper).second || !partner.emplace(p.upper, &p.lower).second)
      return "simplex matched twice near " + simplex_to_string(p.lower);
  }
  if (partner.size() + sub.size() != complex.size()) return "matching does not cover complex minus subcomplex";
  for (const auto& p : m.pairs) {
    auto it = partner.find(k.mirror(p.lower));
    if (it == partner.end() || *it->second != k.mirror(p.upper))
      return "matching is not equivariant at " + simplex_to_string(p.lower);
  }
  return std::nullopt;
}

bool is_acyclic(const MorseMatching& m) {
  std::unordered_map<Simplex, std::size_t, SimplexHash> lower_index;
  SimplexSet uppers;
  for (std::size_t i = 0; i < m.pairs.size(); ++i) {
    const auto& p = m.pairs[i];
    if (!is_codim_one_face(p.lower, p.upper)) throw ContractError("matching pair is not codimension one");
    if (!lower_index.emplace(p.lower, i).second || !uppers.insert(p.upper).second)
      throw ContractError("simplex matched twice");
  }
  for (const auto& p : m.pairs)
    if (uppers.count(p.lower) || lower_index.count(p.upper)) throw ContractError("simplex matched twice");

  // Edge i -> j when lower_j is a facet of upper_i other than lower_i.
  std::vector<std::vector<std::size_t>> out(m.pairs.size());
  for (std::size_t i = 0; i < m.pairs.size(); ++i)
    for_each_facet(m.pairs[i].upper, [&](const Simplex& f) {
      if (f == m.pairs[i].lower) return;
      auto it = lower_index.find(f);
      if (it != lower_index.end()) out[i].push_back(it->second);
    });

  enum : std::uint8_t { white, grey, black };
  std::vector<std::uint8_t> color(m.pairs.size(), white);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < m.pairs.size(); ++root) {
    if (color[root] != white) continue;
    stack.push_back({root, 0});
    color[root] = grey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < out[v].size()) {
        const std::size_t w = out[v][next++];
        if (color[w] == grey) return false;
        if (color[w] == white) {
          color[w] = grey;
          stack.push_back({w, 0});
        }
      } else {
        color[v] = black;
        stack.pop_back();
      }
    }
  }
  return true;
}

CollapseCertificate collapse(const Z2Complex& k, const SimplexSet& complex, const SimplexSet& sub,
                             const MorseMatching& m) {
  if (auto why = matching_violation(k, complex, sub, m)) throw ContractError("invalid matching: " + *why);
  if (!is_acyclic(m)) throw ContractError("matching is not acyclic");
  for (const auto& p : m.pairs)
    for (auto v : p.upper)
      if (std::binary_search(p.upper.begin(), p.upper.end(), k.mirror(v)))
        throw ContractError("collapse needs a free complex");

  const std::vector<Simplex> simplices = sorted_simplices(complex);
  std::unordered_map<Simplex, std::size_t, SimplexHash> index;
  index.reserve(simplices.size());
  for (std::size_t i = 0; i < simplices.size(); ++i) index.emplace(simplices[i], i);

  std::vector<std::size_t> cofacets(simplices.size(), 0);
  std::vector<std::size_t> partner(simplices.size(), SIZE_MAX);
  std::vector<bool> is_lower(simplices.size(), false), alive(simplices.size(), true);
  for (const auto& s : simplices) for_each_facet(s, [&](const Simplex& f) { ++cofacets[index.at(f)]; });
  for (const auto& p : m.pairs) {
    const std::size_t lo = index.at(p.lower), up = index.at(p.upper);
    partner[lo] = up;
    partner[up] = lo;
    is_lower[lo] = true;
  }

  // Highest dimension first, then lexicographic; indices are dimension-lex ordered.
  auto cmp = [&](std::size_t a, std::size_t b) {
    if (simplices[a].size() != simplices[b].size()) return simplices[a].size() > simplices[b].size();
    return a < b;
  };
  std::set<std::size_t, decltype(cmp)> free(cmp);
  for (std::size_t i = 0; i < simplices.size(); ++i)
    if (is_lower[i] && cofacets[i] == 1) free.insert(i);

  auto remove = [&](std::size_t i) {
    alive[i] = false;
    for_each_facet(simplices[i], [&](const Simplex& f) {
      const std::size_t j = index.at(f);
      if (--cofacets[j] == 1 && is_lower[j] && alive[j]) free.insert(j);
    });
  };
  auto is_free_pair = [&](std::size_t lo) { return alive[lo] && alive[partner[lo]] && cofacets[lo] == 1; };

  CollapseCertificate cert;
  std::size_t remaining = m.pairs.size();
  while (remaining > 0) {
    while (!free.empty() && !is_free_pair(*free.begin())) free.erase(free.begin());
    if (free.empty()) throw ContractError("collapse is stuck with " + std::to_string(remaining) + " pairs left");
    const std::size_t lo = *free.begin();
    free.erase(free.begin());
    const std::size_t mirror_lo = index.at(k.mirror(simplices[lo]));
    for (std::size_t face : {lo, mirror_lo}) {
      if (!is_free_pair(face))
        throw ContractError("mirror of a free pair is not free at " + simplex_to_string(simplices[face]));
      cert.steps.push_back({simplices[face], simplices[partner[face]]});
      remove(partner[face]);
      remove(face);
      --remaining;
    }
  }
  for (std::size_t i = 0; i < simplices.size(); ++i)
    if (alive[i]) cert.result.push_back(simplices[i]);
  if (cert.result.size() != sub.size()) throw ContractError("collapse result differs from the subcomplex");
  for (const auto& s : cert.result)
    if (!sub.count(s)) throw ContractError("collapse result differs from the subcomplex");
  return cert;
}

void write_certificate(std::ostream& out, const CollapseCertificate& c) {
  for (const auto& step : c.steps)
    out << "x " << simplex_to_string(step.face) << ' ' << simplex_to_string(step.cofacet) << '\n';
}

} // namespace omegalab
