// Compiled with -mavx2 -mpopcnt; only reached after a CPUID check.
#include "omegalab/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <immintrin.h>

#include <bit>

namespace omegalab::kernels {
namespace {

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void and_into(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
  for (; i < n; ++i) dst[i] &= src[i];
}

void or_into(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
  for (; i < n; ++i) dst[i] |= src[i];
}

void xor_into(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    store(dst + i, _mm256_xor_si256(load(dst + i), load(src + i)));
    store(dst + i + 4, _mm256_xor_si256(load(dst + i + 4), load(src + i + 4)));
  }
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_xor_si256(load(dst + i), load(src + i)));
  for (; i < n; ++i) dst[i] ^= src[i];
}

void andnot_into(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  // _mm256_andnot_si256(a, b) computes ~a & b
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_andnot_si256(load(src + i), load(dst + i)));
  for (; i < n; ++i) dst[i] &= ~src[i];
}

// Nibble-table popcount (vpshufb) with a horizontal byte sum via vpsadbw.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  return _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
}

std::size_t popcount(const Word* a, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(load(a + i)), _mm256_setzero_si256()));
  alignas(32) Word lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t c = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
  return c;
}

bool is_subset(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    if (!_mm256_testc_si256(load(b + i), load(a + i))) return false; // (~b & a) == 0
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool intersects(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
  for (; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool is_zero(const Word* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i v = load(a + i);
    if (!_mm256_testz_si256(v, v)) return false;
  }
  for (; i < n; ++i)
    if (a[i]) return false;
  return true;
}

} // namespace

const KernelTable* avx2_kernels_if_compiled() noexcept {
  static const KernelTable table{"avx2",   and_into,  or_into,    xor_into, andnot_into,
                                 popcount, is_subset, intersects, is_zero};
  return &table;
}

} // namespace omegalab::kernels

#else

namespace omegalab::kernels {
const KernelTable* avx2_kernels_if_compiled() noexcept { return nullptr; }
} // namespace omegalab::kernels

#endif
