#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "oor/topology.hpp"

namespace oor {

enum class ThreatMode { probabilistic, fixed_set };

/// Directed fiber link named by its endpoints, e.g. the "3-7" of a wiretap
/// list. Wiretapping is per fiber; a tap sees every wavelength on the link.
struct LinkRef {
  NodeId from = 0;
  NodeId to = 0;

  friend bool operator==(const LinkRef&, const LinkRef&) = default;
};

struct ThreatConfig {
  ThreatMode mode = ThreatMode::probabilistic;
  double phi = 0.0;                    // per-link eavesdrop probability
  std::vector<LinkRef> wiretap_links;  // fixed_set mode
};

void validate(const ThreatConfig& config, const Topology& topology);

/// P^w(path) = 1 - (1 - phi)^(theta + 1): at least one of the theta+1 links
/// is tapped when each is attacked independently with probability phi.
double wiretap_path_prob(const WavelengthPath& path, double phi);

/// P^phi_w = sum_alpha P^w(path_alpha) * P(alpha) over single-path sets.
double wiretapped_transmission_prob(const PathEnsemble& ensemble, double phi);

/// Selection mass of the paths sharing at least one link with the wiretap
/// set. Links must exist in the topology.
double fixed_set_wiretap_prob(const Topology& t, const PathEnsemble& ensemble,
                              std::span<const LinkRef> wiretap_links);

/// Mean of fixed_set_wiretap_prob over all C(|candidates|, w) subsets of
/// size w; w = 0 yields 0.
double fixed_set_sweep(const Topology& t, const PathEnsemble& ensemble,
                       std::span<const LinkRef> candidates, unsigned w);

struct ThreatReport {
  ThreatMode mode = ThreatMode::probabilistic;
  std::vector<double> per_path;  // P^w(path_alpha)
  double aggregate = 0.0;        // P^phi_w or P_w
};

ThreatReport analyze_threat(const Topology& t, const PathEnsemble& ensemble,
                            const ThreatConfig& config);

}  // namespace oor
