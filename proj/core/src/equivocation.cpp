#include "oor/equivocation.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "oor/errors.hpp"

namespace oor {
namespace {

using boost::multiprecision::cpp_int;

constexpr double k_ln2 = 0.6931471805599453;

void check_point(std::uint64_t message_bits, unsigned keys) {
  require(message_bits >= 1, errc::validation, "entropy: message must be at least one bit");
  // need 2^L - 2 >= keys; beyond 63 bits this always holds
  if (message_bits <= 63) {
    const std::uint64_t pool = (std::uint64_t(1) << message_bits) - 2;
    require(pool >= keys, errc::scenario_too_small,
            "entropy: fewer than eta+1 distinct nonzero key values exist at this length");
  }
}

double log2_cpp_int(const cpp_int& x) {
  const unsigned b = boost::multiprecision::msb(x);
  if (b < 900) return std::log2(x.convert_to<double>());
  cpp_int top(x);
  top >>= b - 63;
  return std::log2(static_cast<double>(top.convert_to<std::uint64_t>())) +
         static_cast<double>(b - 63);
}

// log2(2^L - 2 - i) without forming the value.
double log2_pool_minus(std::uint64_t L, unsigned i) {
  if (L <= 52) {
    const double n = std::ldexp(1.0, static_cast<int>(L)) - 2.0 - i;
    return std::log2(n);
  }
  // 2^L (1 - (i+2)/2^L); the correction underflows to 0 for very large L
  const double frac = std::ldexp(static_cast<double>(i) + 2.0, -static_cast<int>(L));
  return static_cast<double>(L) + std::log1p(-frac) / k_ln2;
}

}  // namespace

void validate(const SecrecyScenario& s) {
  require(s.eta <= s.eta_max, errc::validation, "scenario: eta exceeds eta_max");
  check_point(s.message_bits, s.eta_max + 1);
}

double encrypted_entropy_exact(std::uint64_t message_bits, unsigned eta) {
  require(message_bits <= k_entropy_exact_bits, errc::capacity,
          "encrypted_entropy_exact: message length above the exact-arithmetic cap");
  check_point(message_bits, eta + 1);
  const unsigned k = eta + 1;
  const std::uint64_t pool = (std::uint64_t(1) << message_bits) - 2;

  cpp_int value = 1;
  for (unsigned i = 2; i <= k; ++i) value *= i;  // k!
  cpp_int binom = 1;
  for (unsigned i = 0; i < k; ++i) {
    binom *= pool - i;
    binom /= i + 1;  // exact at every step
  }
  value *= binom;
  value <<= message_bits;  // * 2^L
  return log2_cpp_int(value);
}

double encrypted_entropy_approx(std::uint64_t message_bits, unsigned eta) {
  check_point(message_bits, eta + 1);
  const unsigned k = eta + 1;
  // log2(k! * C(n,k) * 2^L) = sum_{i<k} log2(n-i) + L: the factorial of the
  // permutation count cancels against the binomial's denominator.
  double sum = 0;
  for (unsigned i = 0; i < k; ++i) sum += log2_pool_minus(message_bits, i);
  return sum + static_cast<double>(message_bits);
}

double encrypted_entropy(std::uint64_t message_bits, unsigned eta) {
  if (message_bits <= k_entropy_exact_bits) return encrypted_entropy_exact(message_bits, eta);
  return encrypted_entropy_approx(message_bits, eta);
}

double attacker_equivocation(std::uint64_t message_bits, unsigned eta_max) {
  check_point(message_bits, eta_max + 1);
  double sum = 0;
  for (unsigned e = 0; e <= eta_max; ++e) sum += encrypted_entropy(message_bits, e);
  return sum;
}

EquivocationReport secrecy_report(const SecrecyScenario& s) {
  validate(s);
  EquivocationReport r;
  r.plain_entropy = static_cast<double>(s.message_bits);
  r.encrypted_entropy = encrypted_entropy(s.message_bits, s.eta);
  r.attacker_equivocation = attacker_equivocation(s.message_bits, s.eta_max);
  r.normalized_by_encrypted = r.attacker_equivocation / r.encrypted_entropy;
  r.normalized_by_plain = r.attacker_equivocation / r.plain_entropy;
  r.lemma1_holds = r.attacker_equivocation >= r.plain_entropy;
  return r;
}

}  // namespace oor
