#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "oor/errors.hpp"
#include "oor/onion.hpp"

using namespace oor;

namespace {

BitString bits(const char* s) { return BitString::from_bits(s); }

}  // namespace

TEST_CASE("xor_combine truth-table examples") {
  CHECK(xor_combine(bits("0000"), bits("0000")) == bits("0000"));
  CHECK(xor_combine(bits("1010"), bits("1010")) == bits("0000"));
  CHECK(xor_combine(bits("1010"), bits("0110")) == bits("1100"));
  CHECK_THROWS_AS(xor_combine(bits("101"), bits("10")), error);
}

TEST_CASE("layer_encrypt basics") {
  CHECK(layer_encrypt(bits("1010"), KeySchedule{}) == bits("1010"));
  CHECK(layer_encrypt(bits("1010"), KeySchedule({bits("0110")})) == bits("1100"));
}

TEST_CASE("layer_encrypt is order independent (random 64-bit schedules)") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = BitString::random(64, rng);
    std::vector<BitString> keys;
    for (int i = 0; i < 3; ++i) keys.push_back(BitString::random(64, rng));
    const auto direct = layer_encrypt(m, KeySchedule(keys));
    // (m ^ c2) ^ c1 style regrouping
    auto swapped = keys;
    std::reverse(swapped.begin(), swapped.end());
    CHECK(layer_encrypt(m, KeySchedule(swapped)) == direct);
    CHECK(direct.size() == m.size());
  }
}

TEST_CASE("key schedule invariants") {
  CHECK_THROWS_AS(KeySchedule({bits("0000")}), error);                   // zero key
  CHECK_THROWS_AS(KeySchedule({bits("1010"), bits("1010")}), error);     // duplicate
  CHECK_THROWS_AS(KeySchedule({bits("101"), bits("1011")}), error);      // lengths differ
  CHECK_THROWS_AS(layer_encrypt(bits("1010"), KeySchedule({bits("1010")})), error);  // key == m'
}

TEST_CASE("peel inverts layers in any order") {
  CHECK(peel(bits("1100"), bits("0110")) == bits("1010"));
  CHECK(peel(peel(bits("1100"), bits("0110")), bits("0110")) == bits("1100"));

  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = BitString::random(48, rng);
    std::vector<BitString> keys;
    for (int i = 0; i < 4; ++i) keys.push_back(BitString::random(48, rng));
    KeySchedule schedule(keys);
    auto wire = layer_encrypt(m, schedule);
    // random peel order
    for (std::size_t i = 0; i + 1 < keys.size(); ++i)
      std::swap(keys[i], keys[i + rng.below(keys.size() - i)]);
    for (const auto& k : keys) wire = peel(wire, k);
    CHECK(wire == m);
  }
}

TEST_CASE("hop visibility: every peel changes the wire image") {
  Rng rng(31);
  const auto m = BitString::random(64, rng);
  std::vector<BitString> keys;
  for (int i = 0; i < 5; ++i) keys.push_back(BitString::random(64, rng));
  auto wire = layer_encrypt(m, KeySchedule(keys));
  for (const auto& k : keys) {
    const auto next = peel(wire, k);
    CHECK_FALSE(next == wire);  // nonzero key flips some bit
    wire = next;
  }
}

TEST_CASE("key_entropy_h1 worked values") {
  CHECK(test::approx(key_entropy_h1({2, 2}), 1.585, 1e-3));   // log2(1*3)
  CHECK(test::approx(key_entropy_h1({3, 3}), 3.807, 1e-3));   // log2(2*7)
  CHECK(test::approx(key_entropy_h1({2, 3}), 5.392, 1e-3));   // sum of both
}

TEST_CASE("perfect_secrecy_check verdicts") {
  CHECK(perfect_secrecy_check({3, {3, 3}}) == SecrecyVerdict::holds);
  CHECK(perfect_secrecy_check({10, {3, 3}}) == SecrecyVerdict::fails_length);
  CHECK(perfect_secrecy_check({7, {3, 3}}) == SecrecyVerdict::fails_entropy);
  // length failure takes precedence when both inequalities fail
  CHECK(perfect_secrecy_check({100, {3, 3}}) == SecrecyVerdict::fails_length);
}

TEST_CASE("perfect_secrecy_check is monotone in g_max") {
  for (std::uint64_t L : {3ull, 7ull, 20ull, 60ull}) {
    for (unsigned g_min = 2; g_min <= 8; ++g_min) {
      bool held = false;
      for (unsigned g_max = g_min; g_max <= 16; ++g_max) {
        const auto v = perfect_secrecy_check({L, {g_min, g_max}});
        if (held) CHECK(v == SecrecyVerdict::holds);  // enlarging never flips back
        if (v == SecrecyVerdict::holds) held = true;
      }
    }
  }
}

TEST_CASE("secure_degree_range passes its own gate") {
  for (std::uint64_t L : {1ull, 8ull, 64ull, 128ull, 1024ull}) {
    const auto range = secure_degree_range(L);
    CHECK(range.g_min == min_degree(L));
    CHECK(perfect_secrecy_check({L, range}) == SecrecyVerdict::holds);
    if (range.g_max > range.g_min) {
      const DegreeRange narrower{range.g_min, range.g_max - 1};
      CHECK(perfect_secrecy_check({L, narrower}) != SecrecyVerdict::holds);
    }
  }
}
