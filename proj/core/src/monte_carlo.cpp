#include "oor/monte_carlo.hpp"

#include <algorithm>
#include <cmath>

#include "oor/availability.hpp"
#include "oor/errors.hpp"
#include "oor/rng.hpp"

namespace oor {

Interval wilson95(std::uint64_t successes, std::uint64_t n) {
  require(n >= 1, errc::validation, "wilson95: empty sample");
  constexpr double z = 1.959963984540054;
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  const double z2n = z * z / nn;
  const double center = (p + z2n / 2.0) / (1.0 + z2n);
  const double half = z * std::sqrt(p * (1.0 - p) / nn + z2n / (4.0 * nn)) / (1.0 + z2n);
  return Interval{std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

double wald_half_width(std::uint64_t successes, std::uint64_t n) {
  if (n == 0) return 0.0;
  const double p = static_cast<double>(successes) / static_cast<double>(n);
  return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace

TrialStats run_monte_carlo(const Topology& t, const PathEnsemble& ensemble,
                           const MonteCarloConfig& config) {
  require(config.trials >= 1, errc::validation, "run_monte_carlo: trials must be >= 1");
  validate(config.threat, t);
  const std::vector<double> p = ensemble.availabilities();
  const std::size_t n_paths = p.size();
  require(n_paths >= 1, errc::validation, "run_monte_carlo: empty ensemble");

  // selection CDF from the model distribution, normalized to 1
  std::vector<double> cdf = selection_distribution(ensemble);
  const double total = pairwise_sum(cdf);
  double acc = 0.0;
  for (auto& v : cdf) {
    acc += v / total;
    v = acc;
  }
  cdf.back() = 1.0;

  // per-path link sets as bitmasks over the topology links (<= 64 links
  // fits one word; otherwise fall back to id lists)
  const bool mask_ok = t.links().size() <= 64;
  std::vector<std::uint64_t> path_masks(n_paths, 0);
  if (mask_ok) {
    for (std::size_t a = 0; a < n_paths; ++a)
      for (auto lid : ensemble.path(a).link_ids) path_masks[a] |= std::uint64_t(1) << lid;
  }

  std::uint64_t fixed_mask = 0;
  std::vector<std::size_t> fixed_ids;
  if (config.threat.mode == ThreatMode::fixed_set) {
    for (const auto& ref : config.threat.wiretap_links) {
      const auto id = t.find_link(ref.from, ref.to);
      fixed_ids.push_back(*id);  // validated above
      if (mask_ok) fixed_mask |= std::uint64_t(1) << *id;
    }
  }

  const Rng master(config.seed);
  TrialStats stats;
  stats.trials = config.trials;

  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    Rng rng = master.split(trial);

    bool any_up = false;
    for (std::size_t i = 0; i < n_paths; ++i) any_up |= rng.bernoulli(p[i]);
    if (!any_up) {
      ++stats.blocked;
      continue;
    }

    const double u = rng.next_unit();
    const std::size_t chosen =
        std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
    // eta draw mirrors the planner; it does not affect the wiretap indicator
    const unsigned theta = ensemble.path(chosen).hops();
    (void)rng.below(std::min(config.eta_max, theta) + 1);

    bool tapped = false;
    if (config.threat.mode == ThreatMode::probabilistic) {
      for ([[maybe_unused]] auto lid : ensemble.path(chosen).link_ids) {
        if (rng.bernoulli(config.threat.phi)) tapped = true;
      }
    } else if (mask_ok) {
      tapped = (path_masks[chosen] & fixed_mask) != 0;
    } else {
      for (auto lid : ensemble.path(chosen).link_ids)
        for (auto fid : fixed_ids)
          if (lid == fid) tapped = true;
    }
    if (tapped) ++stats.wiretapped;
  }

  const std::uint64_t usable = stats.trials - stats.blocked;
  stats.blocking_estimate = static_cast<double>(stats.blocked) / static_cast<double>(stats.trials);
  stats.blocking_ci95_half_width = wald_half_width(stats.blocked, stats.trials);
  stats.estimate = usable ? static_cast<double>(stats.wiretapped) / static_cast<double>(usable) : 0.0;
  stats.estimate_all_trials =
      static_cast<double>(stats.wiretapped) / static_cast<double>(stats.trials);
  stats.ci95_half_width = usable ? wald_half_width(stats.wiretapped, usable) : 0.0;
  return stats;
}

}  // namespace oor
