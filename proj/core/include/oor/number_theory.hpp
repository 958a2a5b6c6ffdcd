#pragma once

#include <cstdint>
#include <vector>

namespace oor {

/// Deterministic Miller-Rabin primality test for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// Distinct prime factors of n, ascending. n must be >= 1 (1 -> empty list).
/// Small-prime trial division plus Pollard-Brent rho for the large cofactors.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/// Euler's totient: phi(n) = n * prod(1 - 1/p) over distinct primes p | n.
/// Throws errc::domain for n = 0.
std::uint64_t euler_totient(std::uint64_t n);

}  // namespace oor
