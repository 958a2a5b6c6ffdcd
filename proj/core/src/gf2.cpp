#include "oor/gf2.hpp"

#include <bit>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>

#include "oor/errors.hpp"
#include "oor/number_theory.hpp"

namespace oor {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

unsigned bit_width_u128(u128 v) {
  const u64 hi = static_cast<u64>(v >> 64);
  if (hi) return 64 + std::bit_width(hi);
  return std::bit_width(static_cast<u64>(v));
}

// Carry-less product of two coefficient masks; degrees up to 62 each.
u128 clmul(u64 a, u64 b) {
  u128 acc = 0;
  while (b) {
    acc ^= u128(a) << std::countr_zero(b);
    b &= b - 1;
  }
  return acc;
}

// Remainder of a 128-bit coefficient mask modulo polynomial p.
u64 clmod(u128 a, u64 p) {
  const unsigned dp = std::bit_width(p) - 1;
  while (bit_width_u128(a) > dp) {
    a ^= u128(p) << (bit_width_u128(a) - 1 - dp);
  }
  return static_cast<u64>(a);
}

u64 gf2_mulmod(u64 a, u64 b, u64 p) { return clmod(clmul(a, b), p); }

// x^(2^k) mod p via k squarings.
u64 gf2_pow2k(u64 x, unsigned k, u64 p) {
  u64 t = clmod(x, p);
  for (unsigned i = 0; i < k; ++i) t = gf2_mulmod(t, t, p);
  return t;
}

u64 gf2_powmod(u64 base, u64 e, u64 p) {
  u64 r = clmod(1, p);
  u64 b = clmod(base, p);
  while (e) {
    if (e & 1) r = gf2_mulmod(r, b, p);
    b = gf2_mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

u64 gf2_gcd(u64 a, u64 b) {
  while (b) {
    const u64 r = clmod(a, b);
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

unsigned Gf2Poly::degree() const {
  require(mask != 0, errc::domain, "degree of the zero polynomial");
  return std::bit_width(mask) - 1;
}

bool Gf2Poly::is_generator() const {
  return mask != 0 && (mask & 1) != 0 && degree() >= 1 && degree() <= k_gf2_degree_cap;
}

std::string Gf2Poly::to_hex() const {
  char buf[20];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(mask));
  return buf;
}

Gf2Poly Gf2Poly::parse_hex(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos, 16);
  } catch (const std::exception&) {
    fail(errc::parse, "polynomial mask: not a hex integer: " + text);
  }
  require(pos == text.size(), errc::parse, "polynomial mask: trailing characters: " + text);
  require(v != 0, errc::parse, "polynomial mask must be nonzero");
  return Gf2Poly{v};
}

std::string Gf2Poly::to_string() const {
  if (mask == 0) return "0";
  std::string out;
  for (int i = 63; i >= 0; --i) {
    if (!(mask >> i & 1)) continue;
    if (!out.empty()) out += " + ";
    if (i == 0)
      out += "1";
    else if (i == 1)
      out += "x";
    else
      out += "x^" + std::to_string(i);
  }
  return out;
}

bool is_irreducible(Gf2Poly p) {
  const unsigned g = p.degree();
  require(g >= 1, errc::domain, "is_irreducible: degree must be >= 1");
  if (g == 1) return true;             // x and x+1
  if ((p.mask & 1) == 0) return false;  // divisible by x
  // x^(2^g) must reduce to x
  if (gf2_pow2k(0b10, g, p.mask) != 0b10) return false;
  for (u64 q : distinct_prime_factors(g)) {
    const u64 t = gf2_pow2k(0b10, g / static_cast<unsigned>(q), p.mask) ^ 0b10u;
    if (gf2_gcd(p.mask, t) != 1) return false;
  }
  return true;
}

bool is_primitive(Gf2Poly p) {
  const unsigned g = p.degree();
  require(g >= 1, errc::domain, "is_primitive: degree must be >= 1");
  require(g <= k_gf2_degree_cap, errc::capacity, "is_primitive: degree above cap");
  if ((p.mask & 1) == 0) return false;  // x is not a unit mod p
  if (!is_irreducible(p)) return false;
  const u64 order = (u64(1) << g) - 1;
  if (gf2_powmod(0b10, order, p.mask) != 1) return false;
  for (u64 r : distinct_prime_factors(order)) {
    if (gf2_powmod(0b10, order / r, p.mask) == 1) return false;
  }
  return true;
}

std::uint64_t count_primitive(unsigned degree) {
  require(degree >= 1, errc::domain, "count_primitive: degree must be >= 1");
  require(degree <= k_gf2_degree_cap, errc::capacity,
          "count_primitive: 2^g - 1 exceeds the configured 64-bit width");
  const u64 order = (u64(1) << degree) - 1;
  return euler_totient(order) / degree;
}

std::vector<Gf2Poly> enumerate_primitive(unsigned degree) {
  require(degree >= 1, errc::domain, "enumerate_primitive: degree must be >= 1");
  require(degree <= k_gf2_enum_cap, errc::capacity,
          "enumerate_primitive: degree above exhaustive-scan cap");
  std::vector<Gf2Poly> out;
  const u64 base = (u64(1) << degree) | 1;
  const u64 middle = degree >= 2 ? (u64(1) << (degree - 1)) : 1;
  for (u64 m = 0; m < middle; ++m) {
    const Gf2Poly cand{base | (m << 1)};
    if (is_primitive(cand)) out.push_back(cand);
  }
  return out;
}

namespace {

// Memoized enumerations for the degrees the planner draws from repeatedly.
const std::vector<Gf2Poly>& cached_enumeration(unsigned degree) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<std::vector<Gf2Poly>>> cache;
  std::scoped_lock lock(mu);
  auto& slot = cache[degree];
  if (!slot) slot = std::make_unique<std::vector<Gf2Poly>>(enumerate_primitive(degree));
  return *slot;
}

}  // namespace

Gf2Poly random_primitive(unsigned degree, Rng& rng) {
  require(degree >= 1, errc::domain, "random_primitive: degree must be >= 1");
  require(degree <= k_gf2_degree_cap, errc::capacity, "random_primitive: degree above cap");
  if (degree <= k_gf2_enum_cap) {
    const auto& all = cached_enumeration(degree);
    require(!all.empty(), errc::domain, "random_primitive: no primitive polynomial at degree");
    return all[rng.below(all.size())];
  }
  const u64 base = (u64(1) << degree) | 1;
  const u64 middle_mask = ((u64(1) << (degree - 1)) - 1) << 1;
  for (;;) {
    const Gf2Poly cand{base | (rng.next_u64() & middle_mask)};
    if (is_primitive(cand)) return cand;
  }
}

}  // namespace oor
