#include "omegalab/bitset.hpp"
#include "omegalab/kernels.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace omegalab;
using kernels::Word;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n, int density) {
  std::vector<Word> w(n);
  for (auto& x : w) {
    x = rng();
    for (int i = 0; i < density; ++i) x &= rng();
  }
  return w;
}

void check_tables(const kernels::KernelTable& a, const kernels::KernelTable& b) {
  std::mt19937_64 rng(99);
  for (std::size_t n : {0, 1, 3, 4, 5, 7, 8, 9, 16, 17, 33, 64}) {
    for (int density = 0; density < 4; ++density) {
      auto x = random_words(rng, n, density), y = random_words(rng, n, density);
      auto run = [&](auto op) {
        auto p = x, q = x;
        (a.*op)(p.data(), y.data(), n);
        (b.*op)(q.data(), y.data(), n);
        CHECK(p == q);
      };
      run(&kernels::KernelTable::and_into);
      run(&kernels::KernelTable::or_into);
      run(&kernels::KernelTable::xor_into);
      run(&kernels::KernelTable::andnot_into);
      CHECK(a.popcount(x.data(), n) == b.popcount(x.data(), n));
      CHECK(a.is_zero(x.data(), n) == b.is_zero(x.data(), n));
      CHECK(a.intersects(x.data(), y.data(), n) == b.intersects(x.data(), y.data(), n));
      CHECK(a.is_subset(x.data(), y.data(), n) == b.is_subset(x.data(), y.data(), n));
      auto sub = x;
      for (std::size_t i = 0; i < n; ++i) sub[i] &= y[i];
      CHECK(a.is_subset(sub.data(), y.data(), n));
      CHECK(b.is_subset(sub.data(), y.data(), n));
      std::vector<Word> zero(n, 0);
      CHECK(a.is_zero(zero.data(), n));
      CHECK(b.is_zero(zero.data(), n));
    }
  }
}

} // namespace

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const auto* avx = kernels::avx2_table();
  if (!avx) {
    MESSAGE("AVX2 unavailable; comparing the scalar table with itself");
    check_tables(kernels::scalar_table(), kernels::scalar_table());
    return;
  }
  check_tables(kernels::scalar_table(), *avx);
}

TEST_CASE("scalar popcount matches a per-bit count") {
  std::mt19937_64 rng(3);
  auto x = random_words(rng, 13, 1);
  std::size_t bits = 0;
  for (Word w : x)
    for (int i = 0; i < 64; ++i) bits += (w >> i) & 1;
  CHECK(kernels::scalar_table().popcount(x.data(), x.size()) == bits);
}

TEST_CASE("bitset operations on wide and narrow sets") {
  for (std::size_t n : {5, 70, 300, 1000}) {
    Bitset a(n), b(n);
    for (std::size_t i = 0; i < n; i += 3) a.set(i);
    for (std::size_t i = 0; i < n; i += 2) b.set(i);
    Bitset both = a & b;
    std::size_t expect = 0;
    for (std::size_t i = 0; i < n; i += 6) {
      CHECK(both.test(i));
      ++expect;
    }
    CHECK(both.count() == expect);
    CHECK(both.is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(b));
    CHECK((a - b).intersects(b) == false);
    CHECK((a | b).count() == a.count() + b.count() - expect);
    CHECK((a ^ a).none());
    CHECK(Bitset::full(n).count() == n);
    CHECK(a.first() == 0);
    CHECK(a.last() == (n - 1) / 3 * 3);
    CHECK(Bitset(n).first() == n);
  }
}

TEST_CASE("bitset order is numeric on the bit pattern") {
  Bitset a(10), b(10);
  a.set(3);
  b.set(0);
  b.set(1);
  CHECK(b < a);
  b.set(4);
  CHECK(a < b);
}
