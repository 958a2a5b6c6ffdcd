#pragma once

#include <cstdint>
#include <vector>

#include "oor/bits.hpp"
#include "oor/lfsr.hpp"

namespace oor {

/// Optical payload: a bit string whose length is preserved by every
/// encryption step.
using Payload = BitString;

/// Ordered session keys c_1..c_{eta+1}: one per anonymization node, the
/// destination key last. All keys share the payload length, none is all-zero
/// and no two are equal.
class KeySchedule {
 public:
  KeySchedule() = default;
  explicit KeySchedule(std::vector<BitString> keys);  // validates; throws errc::validation

  const std::vector<BitString>& keys() const { return keys_; }
  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }
  std::size_t key_length() const { return keys_.empty() ? 0 : keys_.front().size(); }

 private:
  std::vector<BitString> keys_;
};

/// Bitwise exclusive-or of two equal-length bit strings.
BitString xor_combine(const BitString& a, const BitString& b);

/// m' XOR c_1 XOR ... XOR c_{eta+1}. The empty schedule returns m' unchanged.
/// Keys must match the payload length and, per the distinct-elements counting
/// behind the secrecy analysis, no key may equal the plaintext itself.
Payload layer_encrypt(const Payload& m_prime, const KeySchedule& schedule);

/// m XOR key; an involution, so peel(peel(m, k), k) == m.
Payload peel(const Payload& m, const BitString& key);

/// Key-space entropy of one session key over a degree range:
///   H1 = sum_{g=g_min}^{g_max} log2(C_g * (2^g - 1))
/// where C_g counts primitive polynomials of degree g.
double key_entropy_h1(const DegreeRange& range);

enum class SecrecyVerdict { holds, fails_entropy, fails_length };
const char* to_string(SecrecyVerdict v);

struct SecrecyParams {
  std::uint64_t message_bits = 0;  // L_m
  DegreeRange degree_range;
};

/// Perfect-secrecy gate on the key space:
///   holds  iff  H1 >= L_m  and  L_m <= 2^{g_min} - 1.
/// When both inequalities fail the length verdict wins.
SecrecyVerdict perfect_secrecy_check(const SecrecyParams& params);

/// Smallest degree range [min_degree(L), g_max] whose key space passes
/// perfect_secrecy_check for an L-bit message.
DegreeRange secure_degree_range(std::uint64_t message_bits);

}  // namespace oor
