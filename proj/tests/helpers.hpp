#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "oor/dataset.hpp"
#include "oor/topology.hpp"

namespace oor::test {

inline bool approx(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

inline bool approx_rel(double a, double b, double rel) {
  return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b));
}

/// gcd-scan totient oracle, independent of the factorization path.
inline std::uint64_t totient_by_gcd_scan(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

/// The bundled 24-node evaluation document (cached).
inline const TopologyDocument& eval_doc() {
  static const TopologyDocument doc = load_bundled_topology();
  return doc;
}

inline const Topology& eval_topology() { return eval_doc().topology; }

/// The s=1, d=5 evaluation ensemble with availabilities attached.
inline const PathEnsemble& eval_ensemble() {
  static const PathEnsemble e = build_ensemble(eval_topology(), eval_doc().ensembles.front());
  return e;
}

/// Exhaustive 2^N outcome enumeration: P(exactly j available). Independent
/// of the combination-indexed implementation.
inline std::vector<double> brute_force_exactly(const std::vector<double>& p) {
  std::vector<double> dist(p.size() + 1, 0.0);
  const std::uint64_t outcomes = std::uint64_t(1) << p.size();
  for (std::uint64_t mask = 0; mask < outcomes; ++mask) {
    double pr = 1.0;
    unsigned up = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (mask >> i & 1) {
        pr *= p[i];
        ++up;
      } else {
        pr *= 1.0 - p[i];
      }
    }
    dist[up] += pr;
  }
  return dist;
}

}  // namespace oor::test
