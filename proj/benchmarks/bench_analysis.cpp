#include <benchmark/benchmark.h>

#include "oor/availability.hpp"
#include "oor/dataset.hpp"
#include "oor/monte_carlo.hpp"
#include "oor/threat.hpp"

namespace {

const oor::TopologyDocument& doc() {
  static const oor::TopologyDocument d = oor::load_bundled_topology();
  return d;
}

const oor::PathEnsemble& ensemble() {
  static const oor::PathEnsemble e = oor::build_ensemble(doc().topology, doc().ensembles.front());
  return e;
}

void BM_EnumeratePaths(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oor::enumerate_paths(doc().topology, 1, 5));
  }
}
BENCHMARK(BM_EnumeratePaths);

void BM_AvailabilityDistribution(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oor::analyze_availability(ensemble()));
  }
}
BENCHMARK(BM_AvailabilityDistribution);

void BM_WiretappedTransmission(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oor::wiretapped_transmission_prob(ensemble(), 0.3));
  }
}
BENCHMARK(BM_WiretappedTransmission);

void BM_FixedSetSweep(benchmark::State& state) {
  const std::vector<oor::LinkRef> taps{{3, 7}, {8, 9}, {17, 18}, {13, 11}};
  const unsigned w = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oor::fixed_set_sweep(doc().topology, ensemble(), taps, w));
  }
}
BENCHMARK(BM_FixedSetSweep)->Arg(2)->Arg(4);

void BM_MonteCarloTrials(benchmark::State& state) {
  oor::MonteCarloConfig config;
  config.threat = oor::ThreatConfig{oor::ThreatMode::probabilistic, 0.3, {}};
  config.trials = static_cast<std::uint64_t>(state.range(0));
  config.seed = 11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oor::run_monte_carlo(doc().topology, ensemble(), config));
  }
  state.SetItemsProcessed(state.iterations() * config.trials);
}
BENCHMARK(BM_MonteCarloTrials)->Arg(10'000)->Arg(100'000);

}  // namespace

BENCHMARK_MAIN();
