#include "shatter/bit_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace shatter {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
  }
  return out;
}

BitVector BitVector::from_integer(std::uint64_t value, std::size_t size) {
  if (size > kWordBits) throw std::invalid_argument("from_integer supports at most 64 bits");
  BitVector out(size);
  if (size > 0) out.words_[0] = value << (kWordBits - size);
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("xor of bit vectors with different lengths");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::uint64_t BitVector::to_integer() const {
  if (size_ > kWordBits) throw std::invalid_argument("to_integer supports at most 64 bits");
  if (size_ == 0) return 0;
  return words_[0] >> (kWordBits - size_);
}

std::string BitVector::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

std::strong_ordering BitVector::operator<=>(const BitVector& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(words_.begin(), words_.end(), other.words_.begin(),
                                                other.words_.end());
}

std::size_t BitVectorHash::operator()(const BitVector& v) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
  for (auto w : v.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace shatter
