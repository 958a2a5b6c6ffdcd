#pragma once

#include <cstdint>

#include "oor/threat.hpp"
#include "oor/topology.hpp"

namespace oor {

/// Outcome counts of a Monte Carlo run plus the documented estimators.
/// `estimate` excludes blocked trials from the denominator; the
/// all-trials convention is emitted alongside so either comparison against
/// the closed form can be made.
struct TrialStats {
  std::uint64_t trials = 0;
  std::uint64_t blocked = 0;
  std::uint64_t wiretapped = 0;

  double blocking_estimate = 0.0;           // blocked / trials
  double blocking_ci95_half_width = 0.0;    // 1.96 * sqrt(p(1-p)/trials)
  double estimate = 0.0;                    // wiretapped / (trials - blocked)
  double estimate_all_trials = 0.0;         // wiretapped / trials
  double ci95_half_width = 0.0;             // Wald, on `estimate`
};

/// 95% Wilson score interval; well behaved at zero counts, used by the
/// calibration checks (the Wald width above degenerates at p_hat = 0).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double p) const { return p >= lo && p <= hi; }
};

Interval wilson95(std::uint64_t successes, std::uint64_t n);

struct MonteCarloConfig {
  ThreatConfig threat;
  unsigned eta_max = 2;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 1;
};

/// One trial: sample per-path availability Bernoulli(P_l); if none is up the
/// trial is blocked (this validates the blocking closed form). Otherwise a
/// path is selected from the model's selection distribution, link attacks
/// are sampled per the threat config, and the trial records whether the
/// chosen path crosses an attacked link (this validates the wiretap closed
/// forms). Deterministic in the seed: trial i uses the split(i) substream,
/// so serial and parallel execution agree.
TrialStats run_monte_carlo(const Topology& t, const PathEnsemble& ensemble,
                           const MonteCarloConfig& config);

}  // namespace oor
