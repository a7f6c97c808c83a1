#pragma once
// Word-parallel bitset kernels.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The active table is picked once at startup from CPUID; setting
// OMEGALAB_SIMD=scalar forces the reference path. Both tables stay reachable
// so tests can check them against each other.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace omegalab::kernels {

using Word = std::uint64_t;

struct KernelTable {
  std::string_view name;
  void (*and_into)(Word* dst, const Word* src, std::size_t n);
  void (*or_into)(Word* dst, const Word* src, std::size_t n);
  void (*xor_into)(Word* dst, const Word* src, std::size_t n);
  void (*andnot_into)(Word* dst, const Word* src, std::size_t n); // dst &= ~src
  std::size_t (*popcount)(const Word* a, std::size_t n);
  bool (*is_subset)(const Word* a, const Word* b, std::size_t n); // a ⊆ b
  bool (*intersects)(const Word* a, const Word* b, std::size_t n);
  bool (*is_zero)(const Word* a, std::size_t n);
};

const KernelTable& scalar_table() noexcept;

/// nullptr when the build or the running CPU lacks AVX2.
const KernelTable* avx2_table() noexcept;

/// The table selected for this process.
const KernelTable& active() noexcept;

} // namespace omegalab::kernels
