#include "oor/threat.hpp"

#include <cmath>

#include "oor/availability.hpp"
#include "oor/errors.hpp"

namespace oor {
namespace {

void check_phi(double phi) {
  require(phi >= 0.0 && phi <= 1.0, errc::validation, "phi must lie in [0,1]");
}

std::vector<std::size_t> resolve_links(const Topology& t, std::span<const LinkRef> refs) {
  std::vector<std::size_t> ids;
  ids.reserve(refs.size());
  for (const auto& r : refs) {
    const auto id = t.find_link(r.from, r.to);
    require(id.has_value(), errc::validation,
            "wiretap set: link " + std::to_string(r.from) + "-" + std::to_string(r.to) +
                " not in topology");
    ids.push_back(*id);
  }
  return ids;
}

// Selection mass of paths intersecting the links selected by `mask` over `ids`.
double covered_mass(const PathEnsemble& ensemble, const std::vector<double>& selection,
                    const std::vector<std::size_t>& ids, std::uint64_t mask) {
  std::vector<double> hit;
  hit.reserve(ensemble.size());
  for (std::size_t a = 0; a < ensemble.size(); ++a) {
    const auto& path = ensemble.path(a);
    bool tapped = false;
    for (std::size_t k = 0; k < ids.size() && !tapped; ++k) {
      if (!(mask >> k & 1)) continue;
      for (auto lid : path.link_ids) {
        if (lid == ids[k]) {
          tapped = true;
          break;
        }
      }
    }
    if (tapped) hit.push_back(selection[a]);
  }
  return pairwise_sum(hit);
}

std::uint64_t next_subset(std::uint64_t mask) {
  const std::uint64_t c = mask & (~mask + 1);
  const std::uint64_t r = mask + c;
  return (((r ^ mask) >> 2) / c) | r;
}

}  // namespace

void validate(const ThreatConfig& config, const Topology& topology) {
  if (config.mode == ThreatMode::probabilistic) {
    check_phi(config.phi);
  } else {
    resolve_links(topology, config.wiretap_links);
  }
}

double wiretap_path_prob(const WavelengthPath& path, double phi) {
  check_phi(phi);
  const unsigned links = path.link_count();
  return 1.0 - std::pow(1.0 - phi, static_cast<double>(links));
}

double wiretapped_transmission_prob(const PathEnsemble& ensemble, double phi) {
  check_phi(phi);
  const std::vector<double> selection = selection_distribution(ensemble);
  std::vector<double> terms(ensemble.size());
  for (std::size_t a = 0; a < ensemble.size(); ++a)
    terms[a] = wiretap_path_prob(ensemble.path(a), phi) * selection[a];
  return pairwise_sum(terms);
}

double fixed_set_wiretap_prob(const Topology& t, const PathEnsemble& ensemble,
                              std::span<const LinkRef> wiretap_links) {
  const auto ids = resolve_links(t, wiretap_links);
  if (ids.empty()) return 0.0;
  const std::vector<double> selection = selection_distribution(ensemble);
  const std::uint64_t all = (std::uint64_t(1) << ids.size()) - 1;
  return covered_mass(ensemble, selection, ids, all);
}

double fixed_set_sweep(const Topology& t, const PathEnsemble& ensemble,
                       std::span<const LinkRef> candidates, unsigned w) {
  const auto ids = resolve_links(t, candidates);
  require(w <= ids.size(), errc::validation, "fixed_set_sweep: w exceeds the candidate count");
  require(ids.size() <= 63, errc::capacity, "fixed_set_sweep: candidate set too large");
  if (w == 0) return 0.0;
  const std::vector<double> selection = selection_distribution(ensemble);
  const std::uint64_t total = binomial(static_cast<unsigned>(ids.size()), w);
  std::vector<double> values;
  values.reserve(total);
  std::uint64_t mask = (std::uint64_t(1) << w) - 1;
  for (std::uint64_t i = 0; i < total; ++i) {
    values.push_back(covered_mass(ensemble, selection, ids, mask));
    if (i + 1 < total) mask = next_subset(mask);
  }
  return pairwise_sum(values) / static_cast<double>(total);
}

ThreatReport analyze_threat(const Topology& t, const PathEnsemble& ensemble,
                            const ThreatConfig& config) {
  validate(config, t);
  ThreatReport report;
  report.mode = config.mode;
  if (config.mode == ThreatMode::probabilistic) {
    report.per_path.reserve(ensemble.size());
    for (const auto& p : ensemble.paths()) report.per_path.push_back(wiretap_path_prob(p, config.phi));
    report.aggregate = wiretapped_transmission_prob(ensemble, config.phi);
  } else {
    const auto ids = resolve_links(t, config.wiretap_links);
    report.per_path.reserve(ensemble.size());
    for (const auto& path : ensemble.paths()) {
      bool tapped = false;
      for (auto id : ids) {
        for (auto lid : path.link_ids)
          if (lid == id) {
            tapped = true;
            break;
          }
        if (tapped) break;
      }
      report.per_path.push_back(tapped ? 1.0 : 0.0);
    }
    report.aggregate = fixed_set_wiretap_prob(t, ensemble, config.wiretap_links);
  }
  return report;
}

}  // namespace oor
