#include <doctest.h>

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "oor/errors.hpp"
#include "oor/gf2.hpp"
#include "oor/number_theory.hpp"

using namespace oor;

namespace {

// Independent trial-division irreducibility oracle: carry-less multiply and
// long division on masks, trying every divisor of degree 1..g/2.
std::uint64_t slow_clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t acc = 0;
  for (unsigned i = 0; i < 64; ++i)
    if (b >> i & 1) acc ^= a << i;
  return acc;
}

std::uint64_t slow_mod(std::uint64_t a, std::uint64_t p) {
  const auto width = [](std::uint64_t v) {
    unsigned w = 0;
    while (v) {
      ++w;
      v >>= 1;
    }
    return w;
  };
  const unsigned dp = width(p);
  while (width(a) >= dp && a) a ^= p << (width(a) - dp);
  return a;
}

bool oracle_irreducible(std::uint64_t p, unsigned g) {
  for (unsigned d = 1; 2 * d <= g; ++d) {
    for (std::uint64_t q = (1ull << d); q < (1ull << (d + 1)); ++q) {
      if (slow_mod(p, q) == 0) return false;
    }
  }
  return true;
}

// Order of x modulo p by stepping x^k until it returns to 1.
std::uint64_t oracle_order_of_x(std::uint64_t p, unsigned) {
  std::uint64_t acc = slow_mod(0b10, p);
  std::uint64_t k = 1;
  while (acc != 1) {
    acc = slow_mod(slow_clmul(acc, 0b10), p);
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("is_irreducible on the worked examples") {
  CHECK(is_irreducible(Gf2Poly{0b111}));    // x^2+x+1, no degree-1 divisor
  CHECK(oracle_irreducible(0b111, 2));
  CHECK_FALSE(is_irreducible(Gf2Poly{0b101}));  // x^2+1 = (x+1)^2
  CHECK_FALSE(oracle_irreducible(0b101, 2));
  CHECK(is_irreducible(Gf2Poly{0b1011}));   // x^3+x+1
  CHECK(oracle_irreducible(0b1011, 3));
}

TEST_CASE("is_irreducible agrees with trial division through degree 12") {
  for (unsigned g = 2; g <= 12; ++g) {
    for (std::uint64_t m = (1ull << g); m < (1ull << (g + 1)); ++m) {
      CAPTURE(m);
      CHECK(is_irreducible(Gf2Poly{m}) == oracle_irreducible(m, g));
    }
  }
}

TEST_CASE("is_primitive on the worked examples") {
  CHECK(is_primitive(Gf2Poly{0b1011}));  // x^3+x+1: order of x is 7
  CHECK(oracle_order_of_x(0b1011, 3) == 7);
  // x^4+x^3+x^2+x+1 is irreducible but x has order 5, not 15
  CHECK(is_irreducible(Gf2Poly{0b11111}));
  CHECK(oracle_order_of_x(0b11111, 4) == 5);
  CHECK_FALSE(is_primitive(Gf2Poly{0b11111}));
  CHECK_FALSE(is_primitive(Gf2Poly{0b101}));  // reducible
}

TEST_CASE("primitive implies irreducible, converse fails at degree 4") {
  bool counterexample = false;
  for (std::uint64_t m = (1ull << 4); m < (1ull << 5); ++m) {
    const Gf2Poly p{m};
    if (is_primitive(p)) CHECK(is_irreducible(p));
    if (is_irreducible(p) && !is_primitive(p)) counterexample = true;
  }
  CHECK(counterexample);  // x^4+x^3+x^2+x+1
}

TEST_CASE("count_primitive worked examples") {
  CHECK(count_primitive(1) == 1);
  CHECK(count_primitive(2) == 1);  // phi(3)/2
  CHECK(count_primitive(3) == 2);  // phi(7)/3
  CHECK(count_primitive(4) == 2);  // phi(15)/4
  CHECK_THROWS_AS(count_primitive(63), error);
  CHECK_THROWS_AS(count_primitive(0), error);
}

TEST_CASE("enumerate_primitive worked examples") {
  CHECK(enumerate_primitive(1) == std::vector<Gf2Poly>{Gf2Poly{0b11}});
  CHECK(enumerate_primitive(2) == std::vector<Gf2Poly>{Gf2Poly{0b111}});
  CHECK(enumerate_primitive(3) == std::vector<Gf2Poly>{Gf2Poly{0b1011}, Gf2Poly{0b1101}});
  CHECK_THROWS_AS(enumerate_primitive(k_gf2_enum_cap + 1), error);
}

TEST_CASE("enumeration count equals phi(2^g-1)/g for g <= 14") {
  for (unsigned g = 1; g <= 14; ++g) {
    const auto all = enumerate_primitive(g);
    CHECK(all.size() == count_primitive(g));
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].mask < all[i].mask);
  }
}

TEST_CASE("random_primitive: membership, determinism, uniformity") {
  Rng rng(42);
  CHECK(random_primitive(2, rng).mask == 0b111);  // only one exists

  Rng a(7), b(7);
  for (int i = 0; i < 10; ++i) CHECK(random_primitive(3, a) == random_primitive(3, b));

  const auto all3 = enumerate_primitive(3);
  std::map<std::uint64_t, int> freq;
  Rng u(12345);
  const int draws = 10'000;
  for (int i = 0; i < draws; ++i) ++freq[random_primitive(3, u).mask];
  REQUIRE(freq.size() == all3.size());
  for (const auto& [mask, count] : freq) {
    CHECK(std::find(all3.begin(), all3.end(), Gf2Poly{mask}) != all3.end());
    const double f = static_cast<double>(count) / draws;
    CHECK(test::approx(f, 0.5, 0.02));
  }

  // rejection-sampling regime above the enumeration cap
  Rng big(3);
  const auto p = random_primitive(k_gf2_enum_cap + 2, big);
  CHECK(p.degree() == k_gf2_enum_cap + 2);
  CHECK(is_primitive(p));
}

TEST_CASE("polynomial hex mask round trip") {
  CHECK(Gf2Poly{0xB}.to_hex() == "0xb");
  CHECK(Gf2Poly::parse_hex("0xb").mask == 0xB);
  CHECK(Gf2Poly::parse_hex("0xB").mask == 0xB);
  CHECK(Gf2Poly{0xB}.to_string() == "x^3 + x + 1");
  CHECK_THROWS_AS(Gf2Poly::parse_hex("zz"), error);
  CHECK_THROWS_AS(Gf2Poly::parse_hex("0x0"), error);
}
