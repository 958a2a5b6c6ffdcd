#pragma once

#include <cstdint>

namespace oor {

/// Message lengths up to this many bits use exact big-integer evaluation;
/// larger lengths switch to the log-domain form (the binomials over 2^L
/// outgrow any fixed width).
inline constexpr std::uint64_t k_entropy_exact_bits = 24;

/// A secrecy evaluation point: an L-bit message routed through eta of at
/// most eta_max anonymization nodes. Requires 2^L - 2 >= eta_max + 1 so the
/// key-combination binomials are well formed.
struct SecrecyScenario {
  std::uint64_t message_bits = 0;  // L
  unsigned eta = 0;
  unsigned eta_max = 0;
};

void validate(const SecrecyScenario& s);  // throws errc::scenario_too_small / validation

/// Entropy of the encrypted stream after eta anonymization keys plus the
/// destination key:  log2( (eta+1)! * C(2^L - 2, eta+1) * 2^L ).
double encrypted_entropy(std::uint64_t message_bits, unsigned eta);

/// Exact big-integer evaluation (message_bits <= k_entropy_exact_bits).
double encrypted_entropy_exact(std::uint64_t message_bits, unsigned eta);
/// Log-domain evaluation, valid for any message length.
double encrypted_entropy_approx(std::uint64_t message_bits, unsigned eta);

/// Attacker equivocation H(m'|m): the attacker cannot know how many keys
/// remain, so all eta_max+1 layer counts must be considered:
///   sum_{k=1}^{eta_max+1} log2( k! * C(2^L - 2, k) * 2^L ).
double attacker_equivocation(std::uint64_t message_bits, unsigned eta_max);

struct EquivocationReport {
  double plain_entropy = 0;           // H(m') = L
  double encrypted_entropy = 0;       // H_e(m') at eta
  double attacker_equivocation = 0;   // H(m'|m) at eta_max
  double normalized_by_encrypted = 0; // H(m'|m) / H_e(m')
  double normalized_by_plain = 0;     // H(m'|m) / L
  bool lemma1_holds = false;          // H(m'|m) >= H(m')
};

EquivocationReport secrecy_report(const SecrecyScenario& s);

}  // namespace oor
