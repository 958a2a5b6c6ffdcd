#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oor/rng.hpp"

namespace oor {

/// Polynomial over GF(2), bit i of `mask` = coefficient of x^i.
/// A session-key generator polynomial additionally has both end bits set
/// (monic with nonzero constant term); see is_generator().
struct Gf2Poly {
  std::uint64_t mask = 0;

  unsigned degree() const;  // mask must be nonzero
  bool is_generator() const;

  /// Hex coefficient mask, e.g. x^3+x+1 -> "0xb".
  std::string to_hex() const;
  static Gf2Poly parse_hex(const std::string& text);  // throws errc::parse

  /// Human-readable form, e.g. "x^3 + x + 1".
  std::string to_string() const;

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;
  friend auto operator<=>(const Gf2Poly& a, const Gf2Poly& b) { return a.mask <=> b.mask; }
};

/// Largest degree for which 2^g - 1 fits the 64-bit totient machinery.
inline constexpr unsigned k_gf2_degree_cap = 62;
/// Largest degree for which exhaustive enumeration is performed.
inline constexpr unsigned k_gf2_enum_cap = 20;

/// True iff p has no nontrivial factorization over GF(2). Degree must be >= 1.
/// Rabin's test: x^(2^g) == x (mod p) and gcd(x^(2^(g/q)) - x, p) = 1 for
/// every prime q | g.
bool is_irreducible(Gf2Poly p);

/// True iff p is irreducible and x generates the full multiplicative group
/// mod p, i.e. ord(x) = 2^g - 1.
bool is_primitive(Gf2Poly p);

/// Number of primitive polynomials of the given degree: phi(2^g - 1) / g.
/// Throws errc::capacity above k_gf2_degree_cap.
std::uint64_t count_primitive(unsigned degree);

/// All primitive polynomials of the given degree, ascending by mask.
/// Throws errc::capacity above k_gf2_enum_cap.
std::vector<Gf2Poly> enumerate_primitive(unsigned degree);

/// Uniformly random primitive polynomial of the given degree. Indexes the
/// cached enumeration up to k_gf2_enum_cap, rejection-samples candidates
/// above it; uniform in both regimes, deterministic given the rng.
Gf2Poly random_primitive(unsigned degree, Rng& rng);

}  // namespace oor
