#include "oor/number_theory.hpp"

#include <algorithm>
#include <numeric>

#include "oor/errors.hpp"

namespace oor {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's cycle variant of Pollard rho. n must be odd composite, not a prime power guard needed.
u64 pollard_brent(u64 n, u64 c, u64 seed) {
  auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
  u64 x = seed % n, y = x, q = 1, g = 1, xs = x;
  const u64 block = 128;
  for (u64 r = 1; g == 1; r <<= 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    for (u64 k = 0; k < r && g == 1; k += block) {
      xs = y;
      const u64 steps = std::min(block, r - k);
      for (u64 i = 0; i < steps; ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
    }
  }
  if (g == n) {
    // backtrack one step at a time
    g = 1;
    while (g == 1) {
      xs = f(xs);
      g = std::gcd(x > xs ? x - xs : xs - x, n);
    }
  }
  return g;
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  u64 d = n;
  for (u64 c = 1; d == n; ++c) d = pollard_brent(n, c, c + 2);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // witness set deterministic for all 64-bit integers
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

std::vector<u64> distinct_prime_factors(u64 n) {
  require(n >= 1, errc::domain, "distinct_prime_factors: n must be >= 1");
  std::vector<u64> out;
  for (u64 p = 2; p < 1000 && p * p <= n; p == 2 ? p = 3 : p += 2) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) factor_rec(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

u64 euler_totient(u64 n) {
  require(n >= 1, errc::domain, "euler_totient: undefined for n = 0");
  u64 phi = n;
  for (u64 p : distinct_prime_factors(n)) phi -= phi / p;
  return phi;
}

}  // namespace oor
