#include "oor/lfsr.hpp"

#include <bit>

#include "oor/errors.hpp"

namespace oor {

void validate(const LfsrSpec& spec) {
  require(spec.polynomial.is_generator(), errc::validation,
          "lfsr: polynomial must be monic with nonzero constant term");
  const unsigned g = spec.polynomial.degree();
  require(spec.seed != 0, errc::invalid_seed, "lfsr: all-zero seed");
  require(g == 64 || spec.seed < (std::uint64_t(1) << g), errc::validation,
          "lfsr: seed wider than the register");
}

void validate(const DegreeRange& range) {
  require(range.g_min >= 1 && range.g_min <= range.g_max, errc::validation,
          "degree range: need 1 <= g_min <= g_max");
  require(range.g_max <= k_gf2_degree_cap, errc::validation, "degree range: g_max above cap");
}

BitString keystream(const LfsrSpec& spec, std::size_t nbits) {
  validate(spec);
  const unsigned g = spec.polynomial.degree();
  const std::uint64_t taps = spec.polynomial.mask & ((std::uint64_t(1) << g) - 1);
  std::uint64_t state = spec.seed;
  BitString out = BitString::zeros(nbits);
  for (std::size_t t = 0; t < nbits; ++t) {
    if (state & 1) out.set_bit(t, true);
    const std::uint64_t fb = std::popcount(state & taps) & 1u;
    state = (state >> 1) | (fb << (g - 1));
  }
  return out;
}

unsigned min_degree(std::uint64_t message_bits) {
  for (unsigned g = 1; g <= k_gf2_degree_cap; ++g) {
    if (((std::uint64_t(1) << g) - 1) > message_bits) return g;
  }
  fail(errc::capacity, "min_degree: message longer than 2^62 - 2 bits");
}

}  // namespace oor
