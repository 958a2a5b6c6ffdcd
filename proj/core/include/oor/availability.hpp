#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "oor/topology.hpp"

namespace oor {

/// Deterministic pairwise (tree) summation; bounds rounding drift for the
/// C(N, gamma)-term combination sums.
double pairwise_sum(std::span<const double> xs);

/// Binomial coefficient in 64 bits; throws errc::capacity on overflow.
std::uint64_t binomial(unsigned n, unsigned k);

/// One subset query against an ensemble: the alpha-th (1-based,
/// lexicographic by member positions) size-gamma subset A of the paths.
struct ComboQuery {
  const PathEnsemble* ensemble = nullptr;
  unsigned subset_size = 0;     // gamma
  std::uint64_t index = 1;      // alpha in 1..C(N, gamma)
};

/// Probability that exactly the paths of A_alpha are available and the rest
/// are not: prod_{i in A} P_i * prod_{t not in A} (1 - P_t).
double prob_combo(const ComboQuery& q);

/// P(exactly j of the N paths are available) = sum over all C(N, j) subsets.
double prob_exactly(const PathEnsemble& ensemble, unsigned j);

/// Blocking probability P_B = P(no path available) = prod (1 - P_l).
/// The empty ensemble blocks with probability 1 by convention.
double blocking_probability(const PathEnsemble& ensemble);

/// Selection probability of the single-path set A_alpha:
///   P(alpha) = P''(alpha, 1) * (1 - P_B) / P(exactly 1).
/// Throws errc::degenerate_model when P(exactly 1) = 0.
double selection_probability(const PathEnsemble& ensemble, std::uint64_t alpha);

/// All N selection probabilities at once (shared normalization).
std::vector<double> selection_distribution(const PathEnsemble& ensemble);

struct AvailabilityReport {
  std::vector<double> exactly;    // P(Omega = j) for j = 0..N
  double blocking = 1.0;          // == exactly[0]
  std::vector<double> selection;  // P(alpha) for alpha = 1..N
};

AvailabilityReport analyze_availability(const PathEnsemble& ensemble);

}  // namespace oor
