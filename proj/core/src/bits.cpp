#include "oor/bits.hpp"

#include <bit>

#include "oor/errors.hpp"

namespace oor {
namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitString BitString::zeros(std::size_t nbits) {
  BitString b;
  b.nbits_ = nbits;
  b.words_.assign((nbits + 63) / 64, 0);
  return b;
}

BitString BitString::random(std::size_t nbits, Rng& rng) {
  BitString b = zeros(nbits);
  for (auto& w : b.words_) w = rng.next_u64();
  b.clear_padding();
  return b;
}

BitString BitString::from_bits(std::string_view bits) {
  BitString b = zeros(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    require(bits[i] == '0' || bits[i] == '1', errc::parse, "bit string: expected only 0/1");
    if (bits[i] == '1') b.set_bit(i, true);
  }
  return b;
}

BitString BitString::from_hex(std::string_view hex, std::size_t nbits) {
  const std::size_t nbytes = (nbits + 7) / 8;
  require(hex.size() == 2 * nbytes, errc::parse, "hex payload: length does not match bit count");
  BitString b = zeros(nbits);
  for (std::size_t j = 0; j < nbytes; ++j) {
    const int hi = hex_value(hex[2 * j]);
    const int lo = hex_value(hex[2 * j + 1]);
    require(hi >= 0 && lo >= 0, errc::parse, "hex payload: invalid character");
    const std::uint64_t byte = static_cast<std::uint64_t>(hi << 4 | lo);
    b.words_[j / 8] |= byte << (8 * (j % 8));
  }
  // reject pad bits beyond nbits
  BitString copy = b;
  copy.clear_padding();
  require(copy.words_ == b.words_, errc::parse, "hex payload: nonzero padding bits");
  return b;
}

bool BitString::bit(std::size_t i) const {
  require(i < nbits_, errc::domain, "bit index out of range");
  return words_[i / 64] >> (i % 64) & 1;
}

void BitString::set_bit(std::size_t i, bool v) {
  require(i < nbits_, errc::domain, "bit index out of range");
  const std::uint64_t m = std::uint64_t(1) << (i % 64);
  if (v)
    words_[i / 64] |= m;
  else
    words_[i / 64] &= ~m;
}

bool BitString::all_zero() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::size_t BitString::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

std::string BitString::to_bits() const {
  std::string s(nbits_, '0');
  for (std::size_t i = 0; i < nbits_; ++i)
    if (bit(i)) s[i] = '1';
  return s;
}

std::string BitString::to_hex() const {
  static const char* digits = "0123456789abcdef";
  const std::size_t nbytes = (nbits_ + 7) / 8;
  std::string s(2 * nbytes, '0');
  for (std::size_t j = 0; j < nbytes; ++j) {
    const unsigned byte = static_cast<unsigned>(words_[j / 8] >> (8 * (j % 8)) & 0xff);
    s[2 * j] = digits[byte >> 4];
    s[2 * j + 1] = digits[byte & 0xf];
  }
  return s;
}

BitString& BitString::operator^=(const BitString& other) {
  require(nbits_ == other.nbits_, errc::length_mismatch,
          "xor of bit strings with different lengths");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

void BitString::clear_padding() {
  const std::size_t rem = nbits_ % 64;
  if (rem && !words_.empty()) words_.back() &= (std::uint64_t(1) << rem) - 1;
}

}  // namespace oor
