#include "oor/onion.hpp"

#include <cmath>

#include "oor/errors.hpp"
#include "oor/gf2.hpp"

namespace oor {

KeySchedule::KeySchedule(std::vector<BitString> keys) : keys_(std::move(keys)) {
  if (keys_.empty()) return;
  const std::size_t len = keys_.front().size();
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    require(keys_[i].size() == len, errc::validation, "key schedule: keys of unequal length");
    require(!keys_[i].all_zero(), errc::validation, "key schedule: all-zero key");
    for (std::size_t j = i + 1; j < keys_.size(); ++j)
      require(!(keys_[i] == keys_[j]), errc::validation, "key schedule: duplicate key");
  }
}

BitString xor_combine(const BitString& a, const BitString& b) { return a ^ b; }

Payload layer_encrypt(const Payload& m_prime, const KeySchedule& schedule) {
  if (schedule.empty()) return m_prime;
  require(schedule.key_length() == m_prime.size(), errc::length_mismatch,
          "layer_encrypt: key length differs from payload length");
  Payload out = m_prime;
  for (const auto& key : schedule.keys()) {
    require(!(key == m_prime), errc::validation,
            "layer_encrypt: key equal to the plaintext is excluded");
    out ^= key;
  }
  return out;
}

Payload peel(const Payload& m, const BitString& key) { return m ^ key; }

double key_entropy_h1(const DegreeRange& range) {
  validate(range);
  double sum = 0;
  bool any = false;
  for (unsigned g = range.g_min; g <= range.g_max; ++g) {
    const auto cg = count_primitive(g);
    if (cg == 0) continue;  // cannot happen for g >= 1; guarded per contract
    any = true;
    const double states = std::ldexp(1.0, static_cast<int>(g)) - 1.0;  // 2^g - 1
    sum += std::log2(static_cast<double>(cg) * states);
  }
  require(any, errc::domain, "key_entropy_h1: empty effective key space");
  return sum;
}

const char* to_string(SecrecyVerdict v) {
  switch (v) {
    case SecrecyVerdict::holds: return "holds";
    case SecrecyVerdict::fails_entropy: return "fails_entropy";
    case SecrecyVerdict::fails_length: return "fails_length";
  }
  return "?";
}

SecrecyVerdict perfect_secrecy_check(const SecrecyParams& params) {
  validate(params.degree_range);
  const std::uint64_t max_len = (std::uint64_t(1) << params.degree_range.g_min) - 1;
  if (params.message_bits > max_len) return SecrecyVerdict::fails_length;
  if (key_entropy_h1(params.degree_range) < static_cast<double>(params.message_bits))
    return SecrecyVerdict::fails_entropy;
  return SecrecyVerdict::holds;
}

DegreeRange secure_degree_range(std::uint64_t message_bits) {
  DegreeRange range;
  range.g_min = min_degree(message_bits);
  range.g_max = range.g_min;
  while (perfect_secrecy_check({message_bits, range}) != SecrecyVerdict::holds) {
    require(range.g_max < k_gf2_degree_cap, errc::capacity,
            "secure_degree_range: key space cannot cover the message below the degree cap");
    ++range.g_max;
  }
  return range;
}

}  // namespace oor
