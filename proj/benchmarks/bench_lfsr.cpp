#include <benchmark/benchmark.h>

#include "oor/lfsr.hpp"
#include "oor/onion.hpp"

namespace {

void BM_Keystream(benchmark::State& state) {
  const std::size_t nbits = static_cast<std::size_t>(state.range(0));
  const oor::LfsrSpec spec{oor::Gf2Poly{0x20000000029ull /* degree 41 */}, 0x1234567};
  for (auto _ : state) {
    benchmark::DoNotOptimize(oor::keystream(spec, nbits));
  }
  state.SetItemsProcessed(state.iterations() * nbits);
}
BENCHMARK(BM_Keystream)->Arg(128)->Arg(1024)->Arg(65536);

void BM_LayerEncrypt(benchmark::State& state) {
  const std::size_t nbits = static_cast<std::size_t>(state.range(0));
  oor::Rng rng(3);
  const auto m = oor::BitString::random(nbits, rng);
  std::vector<oor::BitString> keys;
  for (int i = 0; i < 5; ++i) keys.push_back(oor::BitString::random(nbits, rng));
  const oor::KeySchedule schedule(keys);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oor::layer_encrypt(m, schedule));
  }
  state.SetItemsProcessed(state.iterations() * nbits);
}
BENCHMARK(BM_LayerEncrypt)->Arg(1024)->Arg(65536);

}  // namespace
