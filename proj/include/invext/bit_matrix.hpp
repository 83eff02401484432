#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace invext {

// Dense square boolean matrix, one 64-bit-word-aligned bitset per row.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_per_row_((n + kWordBits - 1) / kWordBits), bits_(n * words_per_row_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_per_row_; }

  bool test(std::size_t r, std::size_t c) const noexcept {
    return (bits_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }

  // Returns true when the bit was previously clear.
  bool set(std::size_t r, std::size_t c) noexcept {
    Word& w = bits_[r * words_per_row_ + c / kWordBits];
    const Word mask = Word{1} << (c % kWordBits);
    const bool was_clear = (w & mask) == 0;
    w |= mask;
    return was_clear;
  }

  void reset(std::size_t r, std::size_t c) noexcept {
    bits_[r * words_per_row_ + c / kWordBits] &= ~(Word{1} << (c % kWordBits));
  }

  std::span<Word> row(std::size_t r) noexcept {
    return {bits_.data() + r * words_per_row_, words_per_row_};
  }
  std::span<const Word> row(std::size_t r) const noexcept {
    return {bits_.data() + r * words_per_row_, words_per_row_};
  }

  // row(dst) |= other.row(src); true if row(dst) grew.
  bool or_row(std::size_t dst, const BitMatrix& other, std::size_t src) noexcept {
    Word* d = bits_.data() + dst * words_per_row_;
    const Word* s = other.bits_.data() + src * other.words_per_row_;
    Word grew = 0;
    for (std::size_t i = 0; i < words_per_row_; ++i) {
      grew |= s[i] & ~d[i];
      d[i] |= s[i];
    }
    return grew != 0;
  }

  // *this |= other; true if anything grew.
  bool merge(const BitMatrix& other) noexcept {
    Word grew = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      grew |= other.bits_[i] & ~bits_[i];
      bits_[i] |= other.bits_[i];
    }
    return grew != 0;
  }

  bool subset_of(const BitMatrix& other) const noexcept {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~other.bits_[i]) return false;
    return true;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  template <typename F>
  void for_each_in_row(std::size_t r, F&& f) const {
    const Word* d = bits_.data() + r * words_per_row_;
    for (std::size_t i = 0; i < words_per_row_; ++i) {
      Word w = d[i];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(i * kWordBits + bit);
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<Word> bits_;
};

}  // namespace invext
