#include "oor/availability.hpp"

#include "oor/errors.hpp"

namespace oor {
namespace {

// Availabilities with the "exactly available" complement weights.
struct Weights {
  std::vector<double> p;
  explicit Weights(const PathEnsemble& e) : p(e.availabilities()) {}
};

// Probability of the outcome described by a membership bitmask.
double outcome_probability(const std::vector<double>& p, std::uint64_t mask) {
  double v = 1.0;
  for (std::size_t i = 0; i < p.size(); ++i) v *= (mask >> i & 1) ? p[i] : 1.0 - p[i];
  return v;
}

// Next size-k subset mask in ascending numeric order (Gosper's hack).
// Ascending masks coincide with lexicographic order of member-position lists.
std::uint64_t next_subset(std::uint64_t mask) {
  const std::uint64_t c = mask & (~mask + 1);
  const std::uint64_t r = mask + c;
  return (((r ^ mask) >> 2) / c) | r;
}

std::uint64_t first_subset(unsigned k) { return k == 0 ? 0 : (std::uint64_t(1) << k) - 1; }

}  // namespace

double pairwise_sum(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  if (xs.size() <= 4) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    require(c <= UINT64_MAX / num, errc::capacity, "binomial: 64-bit overflow");
    c = c * num / i;  // exact: c * num divisible by i at every step
  }
  return c;
}

double prob_combo(const ComboQuery& q) {
  require(q.ensemble != nullptr, errc::validation, "prob_combo: null ensemble");
  const Weights w(*q.ensemble);
  const unsigned n = static_cast<unsigned>(w.p.size());
  require(n <= 63, errc::capacity, "prob_combo: ensemble too large for subset indexing");
  require(q.subset_size <= n, errc::validation, "prob_combo: gamma exceeds ensemble size");
  const std::uint64_t total = binomial(n, q.subset_size);
  require(q.index >= 1 && q.index <= total, errc::validation,
          "prob_combo: alpha outside 1..C(N, gamma)");

  std::uint64_t mask = first_subset(q.subset_size);
  for (std::uint64_t i = 1; i < q.index; ++i) mask = next_subset(mask);
  return outcome_probability(w.p, mask);
}

double prob_exactly(const PathEnsemble& ensemble, unsigned j) {
  const Weights w(ensemble);
  const unsigned n = static_cast<unsigned>(w.p.size());
  require(j <= n, errc::validation, "prob_exactly: j exceeds the number of paths");
  require(n <= 63, errc::capacity, "prob_exactly: ensemble too large for subset enumeration");
  const std::uint64_t total = binomial(n, j);
  std::vector<double> terms;
  terms.reserve(total);
  std::uint64_t mask = first_subset(j);
  for (std::uint64_t i = 0; i < total; ++i) {
    terms.push_back(outcome_probability(w.p, mask));
    if (i + 1 < total) mask = next_subset(mask);
  }
  return pairwise_sum(terms);
}

double blocking_probability(const PathEnsemble& ensemble) {
  if (ensemble.empty()) return 1.0;  // no path exists at all
  double v = 1.0;
  for (double p : ensemble.availabilities()) v *= 1.0 - p;
  return v;
}

std::vector<double> selection_distribution(const PathEnsemble& ensemble) {
  const Weights w(ensemble);
  const unsigned n = static_cast<unsigned>(w.p.size());
  require(n >= 1, errc::validation, "selection_distribution: empty ensemble");
  std::vector<double> singles(n);
  for (unsigned i = 0; i < n; ++i) singles[i] = outcome_probability(w.p, std::uint64_t(1) << i);
  const double omega1 = pairwise_sum(singles);
  require(omega1 > 0.0, errc::degenerate_model,
          "selection_probability: P(exactly one path available) is zero");
  const double scale = (1.0 - blocking_probability(ensemble)) / omega1;
  for (double& v : singles) v *= scale;
  return singles;
}

double selection_probability(const PathEnsemble& ensemble, std::uint64_t alpha) {
  require(alpha >= 1 && alpha <= ensemble.size(), errc::validation,
          "selection_probability: alpha outside 1..N");
  return selection_distribution(ensemble)[alpha - 1];
}

AvailabilityReport analyze_availability(const PathEnsemble& ensemble) {
  AvailabilityReport r;
  const unsigned n = static_cast<unsigned>(ensemble.size());
  r.exactly.reserve(n + 1);
  for (unsigned j = 0; j <= n; ++j) r.exactly.push_back(prob_exactly(ensemble, j));
  r.blocking = r.exactly.front();
  if (n >= 1) r.selection = selection_distribution(ensemble);
  return r;
}

}  // namespace oor
