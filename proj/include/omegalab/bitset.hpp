#pragma once

#include "omegalab/kernels.hpp"

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace omegalab {

/// Fixed-width dynamic bitset. Bits at positions >= size() are always clear.
///
/// Bulk operations go through the dispatched kernel table once the width
/// reaches one SIMD lane (four words); narrower sets use inline loops.
class Bitset {
public:
  using Word = kernels::Word;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + kWordBits - 1) / kWordBits, 0) {}

  static Bitset full(std::size_t nbits) {
    Bitset b(nbits);
    for (auto& w : b.words_) w = ~Word{0};
    b.trim();
    return b;
  }

  static Bitset singleton(std::size_t nbits, std::size_t bit) {
    Bitset b(nbits);
    b.set(bit);
    return b;
  }

  std::size_t size() const noexcept { return nbits_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> mutable_words() noexcept { return words_; }

  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const noexcept {
    if (narrow()) {
      std::size_t c = 0;
      for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
      return c;
    }
    return kernels::active().popcount(words_.data(), words_.size());
  }

  bool none() const noexcept {
    if (narrow()) {
      for (Word w : words_)
        if (w) return false;
      return true;
    }
    return kernels::active().is_zero(words_.data(), words_.size());
  }
  bool any() const noexcept { return !none(); }

  Bitset& operator&=(const Bitset& o) noexcept {
    if (narrow()) {
      for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    } else {
      kernels::active().and_into(words_.data(), o.words_.data(), words_.size());
    }
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    if (narrow()) {
      for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    } else {
      kernels::active().or_into(words_.data(), o.words_.data(), words_.size());
    }
    return *this;
  }
  Bitset& operator^=(const Bitset& o) noexcept {
    if (narrow()) {
      for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    } else {
      kernels::active().xor_into(words_.data(), o.words_.data(), words_.size());
    }
    return *this;
  }
  /// Set difference.
  Bitset& operator-=(const Bitset& o) noexcept {
    if (narrow()) {
      for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    } else {
      kernels::active().andnot_into(words_.data(), o.words_.data(), words_.size());
    }
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool is_subset_of(const Bitset& o) const noexcept {
    if (narrow()) {
      for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
      return true;
    }
    return kernels::active().is_subset(words_.data(), o.words_.data(), words_.size());
  }

  bool intersects(const Bitset& o) const noexcept {
    if (narrow()) {
      for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
      return false;
    }
    return kernels::active().intersects(words_.data(), o.words_.data(), words_.size());
  }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const noexcept { return next_from(0); }

  /// Index of the lowest set bit >= i, or size().
  std::size_t next_from(std::size_t i) const noexcept {
    if (i >= nbits_) return nbits_;
    std::size_t wi = i / kWordBits;
    Word w = words_[wi] & (~Word{0} << (i % kWordBits));
    while (true) {
      if (w) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= words_.size()) return nbits_;
      w = words_[wi];
    }
  }

  /// Index of the highest set bit, or size() when empty.
  std::size_t last() const noexcept {
    for (std::size_t wi = words_.size(); wi-- > 0;)
      if (words_[wi]) return wi * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(words_[wi])));
    return nbits_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) noexcept {
    return a.nbits_ == b.nbits_ && a.words_ == b.words_;
  }

  /// Numeric order of the bit pattern (bit i has weight 2^i); ties on width by size.
  friend std::strong_ordering operator<=>(const Bitset& a, const Bitset& b) noexcept {
    if (auto c = a.nbits_ <=> b.nbits_; c != 0) return c;
    for (std::size_t wi = a.words_.size(); wi-- > 0;)
      if (auto c = a.words_[wi] <=> b.words_[wi]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL ^ nbits_;
    for (Word w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

private:
  bool narrow() const noexcept { return words_.size() < 4; }
  void trim() noexcept {
    if (nbits_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (nbits_ % kWordBits)) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

} // namespace omegalab
