#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace shatter {

/// Fixed-length bit vector used for concepts.
///
/// Position i lives in word i/64 at bit 63 - (i % 64), so comparing the word
/// arrays lexicographically is the same as comparing the 0/1 strings
/// lexicographically. Unused tail bits are kept at zero.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_{size}, words_(word_count(size), 0) {}

  /// Parses a 0/1 string; throws std::invalid_argument on any other character.
  static BitVector from_string(std::string_view bits);

  /// The low `size` bits of `value`, most significant first (value 1, size 3 -> "001").
  static BitVector from_integer(std::uint64_t value, std::size_t size);

  static constexpr std::size_t word_count(std::size_t size) {
    return (size + kWordBits - 1) / kWordBits;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool test(std::size_t i) const {
    return (words_[i / kWordBits] >> (kWordBits - 1 - i % kWordBits)) & 1U;
  }
  void set(std::size_t i, bool value = true) {
    const Word bit = Word{1} << (kWordBits - 1 - i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= bit;
    } else {
      words_[i / kWordBits] &= ~bit;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (kWordBits - 1 - i % kWordBits); }

  std::size_t count() const {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  BitVector& operator^=(const BitVector& other);
  BitVector operator^(const BitVector& other) const {
    BitVector out = *this;
    out ^= other;
    return out;
  }

  /// Bits 0..63 packed MSB-first into an integer; requires size() <= 64.
  std::uint64_t to_integer() const;

  const std::vector<Word>& words() const { return words_; }
  std::string to_string() const;

  bool operator==(const BitVector&) const = default;
  std::strong_ordering operator<=>(const BitVector& other) const;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept;
};

}  // namespace shatter
