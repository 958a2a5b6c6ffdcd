#pragma once

#include <cstdint>

#include "oor/bits.hpp"
#include "oor/gf2.hpp"

namespace oor {

/// Session-key generator: a primitive polynomial plus a nonzero start state.
/// Seed bit i initializes register stage i; seed must lie in [1, 2^g).
struct LfsrSpec {
  Gf2Poly polynomial;
  std::uint64_t seed = 0;
};

/// Bounds on generator-polynomial degrees for one key draw.
/// Valid when g_min <= g_max <= k_gf2_degree_cap.
struct DegreeRange {
  unsigned g_min = 1;
  unsigned g_max = 1;
};

void validate(const LfsrSpec& spec);     // throws errc::invalid_seed / validation
void validate(const DegreeRange& range);  // throws errc::validation

/// First `nbits` output bits of the Fibonacci (external-XOR) register: the
/// emitted bit each step is stage 0; the feedback bit XORs the stages at the
/// polynomial's set coefficient positions below g and enters stage g-1.
/// With a primitive polynomial and nonzero seed the sequence has exact
/// period 2^g - 1 and the register walks every nonzero g-bit state.
BitString keystream(const LfsrSpec& spec, std::size_t nbits);

/// Smallest degree g with 2^g - 1 > message_bits, so a maximal-length key
/// covers the message without wrapping.
unsigned min_degree(std::uint64_t message_bits);

}  // namespace oor
