#include <doctest.h>

#include "helpers.hpp"
#include "oor/availability.hpp"
#include "oor/errors.hpp"
#include "oor/rng.hpp"

using namespace oor;

namespace {

// ensemble over a chain topology with the given availabilities
PathEnsemble chain_ensemble(const std::vector<double>& p) {
  std::vector<WavelengthPath> paths;
  for (std::size_t i = 0; i < p.size(); ++i) {
    WavelengthPath wp;
    // synthetic parallel two-node routes; structure is irrelevant here
    wp.nodes = {1, 2};
    wp.link_ids = {i};
    wp.availability = p[i];
    paths.push_back(std::move(wp));
  }
  return PathEnsemble(1, 2, std::move(paths));
}

}  // namespace

TEST_CASE("prob_combo worked examples") {
  const auto one = chain_ensemble({0.9});
  CHECK(prob_combo({&one, 1, 1}) == doctest::Approx(0.9).epsilon(1e-12));

  const auto two = chain_ensemble({0.9, 0.5});
  CHECK(prob_combo({&two, 1, 1}) == doctest::Approx(0.45).epsilon(1e-12));  // A={path1}
  CHECK(prob_combo({&two, 0, 1}) == doctest::Approx(0.05).epsilon(1e-12));  // all unavailable
  CHECK_THROWS_AS(prob_combo({&two, 1, 3}), error);  // alpha out of range
  CHECK_THROWS_AS(prob_combo({&two, 3, 1}), error);  // gamma too large
}

TEST_CASE("prob_exactly worked examples") {
  const auto certain = chain_ensemble({1.0});
  CHECK(prob_exactly(certain, 1) == doctest::Approx(1.0));

  const auto two = chain_ensemble({0.9, 0.5});
  // 0.9*(1-0.5) + (1-0.9)*0.5 enumerated over the 4 outcomes
  CHECK(prob_exactly(two, 1) == doctest::Approx(0.50).epsilon(1e-12));
  CHECK_THROWS_AS(prob_exactly(two, 3), error);
}

TEST_CASE("prob_exactly matches 2^N brute force on random ensembles") {
  Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + rng.below(10);
    std::vector<double> p(n);
    for (auto& v : p) v = rng.next_unit();
    const auto ensemble = chain_ensemble(p);
    const auto brute = test::brute_force_exactly(p);
    for (unsigned j = 0; j <= n; ++j)
      CHECK(prob_exactly(ensemble, j) == doctest::Approx(brute[j]).epsilon(1e-12));
  }
}

TEST_CASE("distribution sums to one on the evaluation ensemble") {
  const auto& e = test::eval_ensemble();
  REQUIRE(e.size() == 12);
  std::vector<double> dist;
  for (unsigned j = 0; j <= 12; ++j) dist.push_back(prob_exactly(e, j));
  CHECK(pairwise_sum(dist) == doctest::Approx(1.0).epsilon(1e-9));

  const auto brute = test::brute_force_exactly(e.availabilities());
  for (unsigned j = 0; j <= 12; ++j) CHECK(dist[j] == doctest::Approx(brute[j]).epsilon(1e-12));
}

TEST_CASE("blocking probability") {
  const auto sure = chain_ensemble({1.0, 1.0});
  CHECK(blocking_probability(sure) == 0.0);

  const auto two = chain_ensemble({0.9, 0.5});
  CHECK(blocking_probability(two) == doctest::Approx(0.05).epsilon(1e-12));

  // evaluation vector: 12-term product, frozen from the independent product
  // (and confirmed by the 2^12 enumeration above)
  const auto& e = test::eval_ensemble();
  CHECK(blocking_probability(e) == doctest::Approx(3.98671875e-7).epsilon(1e-12));
  CHECK(blocking_probability(e) == prob_exactly(e, 0));

  CHECK(blocking_probability(PathEnsemble{}) == 1.0);  // no path exists
}

TEST_CASE("selection probability worked examples") {
  const auto one = chain_ensemble({0.7});
  CHECK(selection_probability(one, 1) == doctest::Approx(0.7).epsilon(1e-12));

  const auto sym = chain_ensemble({0.5, 0.5});
  CHECK(selection_probability(sym, 1) == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(selection_probability(sym, 2) == doctest::Approx(0.375).epsilon(1e-12));

  const auto degenerate = chain_ensemble({1.0, 1.0});
  CHECK_THROWS_AS(selection_probability(degenerate, 1), error);
  try {
    selection_probability(degenerate, 1);
  } catch (const error& e) {
    CHECK(e.code() == errc::degenerate_model);
  }
}

TEST_CASE("selection mass equals 1 - P_B") {
  const auto& e = test::eval_ensemble();
  const auto q = selection_distribution(e);
  CHECK(pairwise_sum(q) == doctest::Approx(1.0 - blocking_probability(e)).epsilon(1e-9));

  Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> p(1 + rng.below(8));
    for (auto& v : p) v = 0.05 + 0.9 * rng.next_unit();
    const auto ens = chain_ensemble(p);
    CHECK(pairwise_sum(selection_distribution(ens)) ==
          doctest::Approx(1.0 - blocking_probability(ens)).epsilon(1e-9));
  }
}

TEST_CASE("analyze_availability assembles a coherent report") {
  const auto r = analyze_availability(test::eval_ensemble());
  CHECK(r.exactly.size() == 13);
  CHECK(r.selection.size() == 12);
  CHECK(r.blocking == r.exactly[0]);
  CHECK(pairwise_sum(r.exactly) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(12, 6) == 924);
  CHECK(binomial(12, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(62, 31) > 0);
  CHECK_THROWS_AS(binomial(200, 100), error);
}
