#include <benchmark/benchmark.h>

#include "oor/gf2.hpp"
#include "oor/number_theory.hpp"
#include "oor/rng.hpp"

namespace {

void BM_IsPrimitive(benchmark::State& state) {
  const unsigned g = static_cast<unsigned>(state.range(0));
  // walk through candidate masks so the branch history stays realistic
  const std::uint64_t base = (std::uint64_t(1) << g) | 1;
  std::uint64_t middle = 0;
  for (auto _ : state) {
    middle = (middle + 2) & (((std::uint64_t(1) << (g - 1)) - 1) << 1);
    benchmark::DoNotOptimize(oor::is_primitive(oor::Gf2Poly{base | middle}));
  }
}
BENCHMARK(BM_IsPrimitive)->Arg(8)->Arg(16)->Arg(32)->Arg(61);

void BM_EnumeratePrimitive(benchmark::State& state) {
  const unsigned g = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oor::enumerate_primitive(g));
  }
}
BENCHMARK(BM_EnumeratePrimitive)->Arg(8)->Arg(12)->Arg(16);

void BM_RandomPrimitive(benchmark::State& state) {
  const unsigned g = static_cast<unsigned>(state.range(0));
  oor::Rng rng(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oor::random_primitive(g, rng));
  }
}
BENCHMARK(BM_RandomPrimitive)->Arg(8)->Arg(16)->Arg(32);

void BM_EulerTotientMersenne(benchmark::State& state) {
  const unsigned g = static_cast<unsigned>(state.range(0));
  const std::uint64_t n = (std::uint64_t(1) << g) - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oor::euler_totient(n));
  }
}
BENCHMARK(BM_EulerTotientMersenne)->Arg(31)->Arg(49)->Arg(62);

}  // namespace
