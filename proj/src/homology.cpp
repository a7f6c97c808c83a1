#include "omegalab/homology.hpp"

#include "omegalab/errors.hpp"

#include <algorithm>

namespace omegalab {
namespace {

constexpr std::size_t kMaxMatrixBits = std::size_t{1} << 33;

BettiVector trimmed(BettiVector b) {
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

} // namespace

ChainComplexGF2 ChainComplexGF2::from_simplices(std::vector<Simplex> all) {
  ChainComplexGF2 c;
  for (auto& s : all) {
    if (s.empty()) continue;
    if (c.simplices.size() < s.size()) c.simplices.resize(s.size());
    c.simplices[s.size() - 1].push_back(std::move(s));
  }
  for (auto& level : c.simplices) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  return c;
}

std::vector<Bitset> ChainComplexGF2::boundary(std::size_t d) const {
  if (d == 0 || d >= simplices.size()) return {};
  const auto& rows = simplices[d - 1];
  const auto& cols = simplices[d];
  if (rows.size() * cols.size() > kMaxMatrixBits) throw ResourceError("boundary matrix too large");
  std::vector<Bitset> out;
  out.reserve(cols.size());
  Simplex face;
  for (const auto& s : cols) {
    Bitset col(rows.size());
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      face.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != skip) face.push_back(s[i]);
      auto it = std::lower_bound(rows.begin(), rows.end(), face);
      if (it == rows.end() || *it != face) throw ContractError("simplex list is not closed under faces");
      col.set(static_cast<std::size_t>(it - rows.begin()));
    }
    out.push_back(std::move(col));
  }
  return out;
}

std::vector<std::size_t> ChainComplexGF2::boundary_ranks() const {
  const std::size_t top = simplices.size();
  std::vector<std::size_t> rank(top + 1, 0);
  // Columns of d-1 that are pivot rows of d reduce to zero and can be skipped.
  std::vector<bool> cleared;
  for (std::size_t d = top; d-- > 1;) {
    auto cols = boundary(d);
    std::vector<bool> next_cleared(simplices[d - 1].size(), false);
    std::vector<std::size_t> pivot_col(simplices[d - 1].size(), SIZE_MAX);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!cleared.empty() && cleared[j]) continue;
      Bitset& c = cols[j];
      while (c.any()) {
        const std::size_t low = c.last();
        if (pivot_col[low] == SIZE_MAX) {
          pivot_col[low] = j;
          next_cleared[low] = true;
          ++rank[d];
          break;
        }
        c ^= cols[pivot_col[low]];
      }
    }
    cleared = std::move(next_cleared);
  }
  return rank;
}

BettiVector ChainComplexGF2::betti() const {
  const auto rank = boundary_ranks();
  BettiVector b(simplices.size());
  for (std::size_t d = 0; d < simplices.size(); ++d) b[d] = simplices[d].size() - rank[d] - rank[d + 1];
  return trimmed(std::move(b));
}

long long ChainComplexGF2::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t d = 0; d < simplices.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(simplices[d].size());
  return chi;
}

BettiVector betti_from_simplices(std::vector<Simplex> all) {
  return ChainComplexGF2::from_simplices(std::move(all)).betti();
}

BettiVector betti_from_facets(const std::vector<Simplex>& facets, std::size_t simplex_budget) {
  return betti_from_simplices(enumerate_simplices(facets, simplex_budget));
}

BettiVector betti_mod2(const Z2Complex& k, std::size_t simplex_budget) {
  return betti_from_facets(k.facets(), simplex_budget);
}

long long euler_characteristic(const Z2Complex& k, std::size_t simplex_budget) {
  return ChainComplexGF2::from_simplices(enumerate_simplices(k, simplex_budget)).euler_characteristic();
}

long long alternating_sum(const BettiVector& b) {
  long long chi = 0;
  for (std::size_t d = 0; d < b.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(b[d]);
  return chi;
}

BettiVector betti_convolution(const BettiVector& a, const BettiVector& b) {
  if (a.empty() || b.empty()) return {};
  BettiVector out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trimmed(std::move(out));
}

} // namespace omegalab
