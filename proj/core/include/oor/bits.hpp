#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "oor/rng.hpp"

namespace oor {

/// Arbitrary-length bit string. Bit i lives in word i/64 at position i%64.
/// Serialized as hex bytes (byte j = bits 8j..8j+7, LSB-first within the
/// byte) together with an explicit bit count, so lengths not divisible by 4
/// round-trip exactly.
class BitString {
 public:
  BitString() = default;

  static BitString zeros(std::size_t nbits);
  static BitString random(std::size_t nbits, Rng& rng);
  /// From "0101..." text; character j becomes bit j.
  static BitString from_bits(std::string_view bits);
  /// Inverse of to_hex(); pad bits beyond nbits must be zero.
  static BitString from_hex(std::string_view hex, std::size_t nbits);

  std::size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }
  bool bit(std::size_t i) const;
  void set_bit(std::size_t i, bool v);
  bool all_zero() const;
  std::size_t popcount() const;

  std::string to_bits() const;
  std::string to_hex() const;

  /// Bitwise XOR; throws errc::length_mismatch on unequal lengths.
  BitString& operator^=(const BitString& other);
  friend BitString operator^(BitString a, const BitString& b) { return a ^= b; }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t nbits_ = 0;

  void clear_padding();
};

}  // namespace oor
