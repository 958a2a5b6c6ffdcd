#include <doctest.h>

#include "helpers.hpp"
#include "oor/bits.hpp"
#include "oor/errors.hpp"

using namespace oor;

TEST_CASE("bit string construction and access") {
  auto b = BitString::from_bits("10110");
  CHECK(b.size() == 5);
  CHECK(b.bit(0));
  CHECK_FALSE(b.bit(1));
  CHECK(b.popcount() == 3);
  CHECK(b.to_bits() == "10110");
  CHECK_THROWS_AS(b.bit(5), error);
  CHECK_THROWS_AS(BitString::from_bits("012"), error);
}

TEST_CASE("hex round trip carries exact bit lengths") {
  Rng rng(99);
  for (std::size_t nbits : {0ull, 1ull, 3ull, 8ull, 13ull, 64ull, 65ull, 200ull}) {
    const auto b = BitString::random(nbits, rng);
    const auto back = BitString::from_hex(b.to_hex(), nbits);
    CHECK(back == b);
  }
  CHECK(BitString::from_bits("1010").to_hex() == "05");  // bit 0 first within the byte
  CHECK_THROWS_AS(BitString::from_hex("ff", 4), error);  // nonzero padding
  CHECK_THROWS_AS(BitString::from_hex("f", 8), error);   // wrong length
  CHECK_THROWS_AS(BitString::from_hex("zz", 8), error);  // bad digit
}

TEST_CASE("xor is an involution and respects lengths") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = BitString::random(97, rng);
    const auto k = BitString::random(97, rng);
    CHECK(((m ^ k) ^ k) == m);
  }
  CHECK_THROWS_AS(BitString::random(8, rng) ^ BitString::random(9, rng), error);
}
