#pragma once

#include <cstdint>

namespace oor {

/// Deterministic 64-bit generator (splitmix64 core). Fixed-width arithmetic
/// only, so streams are byte-identical across platforms. Consumers always
/// take an Rng parameter; there is no hidden global state.
///
/// split(k) derives an independent child stream from the *construction* seed,
/// not the mutated state, which is what makes per-trial sub-streams
/// reproducible regardless of how much the parent has been consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). n must be nonzero. Unbiased via rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (~n + 1) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  bool bernoulli(double p) { return next_unit() < p; }

  /// Independent child stream; deterministic in (seed, stream).
  Rng split(std::uint64_t stream) const {
    Rng h(seed_ ^ (0x6a09e667f3bcc909ull + stream * 0x9e3779b97f4a7c15ull));
    // one scramble round so adjacent stream ids do not yield adjacent states
    h.state_ = h.next_u64();
    h.seed_ = h.state_;
    return h;
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace oor
