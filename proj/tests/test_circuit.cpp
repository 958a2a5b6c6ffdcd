#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "oor/availability.hpp"
#include "oor/circuit.hpp"
#include "oor/errors.hpp"

using namespace oor;

namespace {

AvailabilityMask all_up(std::size_t n) { return AvailabilityMask(n, 1); }

CircuitPlan plan_eval(unsigned eta_max, std::uint64_t seed, std::uint64_t message_bits = 64) {
  Rng rng(seed);
  const auto up = sample_availability(test::eval_ensemble(), rng);
  KeyPolicy policy;
  policy.message_bits = message_bits;
  return plan_circuit(test::eval_topology(), test::eval_ensemble(),
                      std::none_of(up.begin(), up.end(), [](std::uint8_t b) { return b != 0; }) ? all_up(12) : up,
                      eta_max, policy, rng);
}

}  // namespace

TEST_CASE("registry hands out matching handle pairs") {
  const NodeRegistry reg(test::eval_topology(), 77);
  CHECK(reg.node_count() == 24);
  for (NodeId n = 1; n <= 24; ++n) {
    CHECK(reg.public_handle(n).node == n);
    CHECK(reg.public_handle(n).pair_id == reg.private_handle(n).pair_id);
  }
  CHECK_THROWS_AS(reg.public_handle(0), error);
  CHECK_THROWS_AS(reg.private_handle(25), error);
}

TEST_CASE("sealed layers open only with the owner's handle") {
  const NodeRegistry reg(test::eval_topology(), 5);
  const auto plan = plan_eval(3, 11);
  const auto onion = setup_circuit(plan, reg);
  REQUIRE(onion.layers.size() == plan.keys.size());

  // wrong node's private handle is refused
  const NodeId owner = plan.keys.front().node;
  const NodeId outsider = owner == 24 ? 23 : 24;
  CHECK_THROWS_AS(open_layer(onion, reg.private_handle(outsider)), error);
  try {
    open_layer(onion, reg.private_handle(outsider));
  } catch (const error& e) {
    CHECK(e.code() == errc::access_denied);
  }

  // a handle forged from the public fields lacks the issued secret
  PrivateHandle forged{owner, reg.public_handle(owner).pair_id, 0};
  CHECK_THROWS_AS(open_layer(onion, forged), error);
}

TEST_CASE("sequential opening reconstructs every distributed key") {
  const NodeRegistry reg(test::eval_topology(), 5);
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
    const auto plan = plan_eval(4, seed);
    ControlOnion onion = setup_circuit(plan, reg);
    for (const auto& holder : plan.keys) {
      const auto opened = open_layer(onion, reg.private_handle(holder.node));
      CHECK(opened.config.node == holder.node);
      CHECK(opened.config.wavelength == plan.wavelength);
      CHECK(opened.config.key_material.polynomial == holder.spec.polynomial);
      CHECK(opened.config.key_material.seed == holder.spec.seed);
      onion = opened.residual;
    }
    CHECK(onion.layers.empty());
  }
}

TEST_CASE("single-hop plan: destination-only key") {
  const Topology two("two", 2, {{1, 2, 3}});
  auto paths = enumerate_paths(two, 1, 2);
  const double p[] = {1.0};
  const auto ens = attach_availabilities(paths, p);
  Rng rng(9);
  const auto plan = plan_circuit(two, ens, all_up(1), 0, KeyPolicy{32, {}}, rng);
  CHECK(plan.eta == 0);
  REQUIRE(plan.keys.size() == 1);
  CHECK(plan.keys[0].node == 2);

  const NodeRegistry reg(two, 1);
  const auto onion = setup_circuit(plan, reg);
  REQUIRE(onion.layers.size() == 1);
  CHECK_NOTHROW(open_layer(onion, reg.private_handle(2)));
  CHECK_THROWS_AS(open_layer(onion, reg.private_handle(1)), error);
}

TEST_CASE("plan_circuit is deterministic in the rng seed") {
  for (std::uint64_t seed : {3ull, 14ull, 159ull}) {
    const auto a = plan_eval(4, seed);
    const auto b = plan_eval(4, seed);
    CHECK(a.path_index == b.path_index);
    CHECK(a.eta == b.eta);
    CHECK(a.wavelength == b.wavelength);
    REQUIRE(a.keys.size() == b.keys.size());
    for (std::size_t i = 0; i < a.keys.size(); ++i) {
      CHECK(a.keys[i].node == b.keys[i].node);
      CHECK(a.keys[i].spec.polynomial == b.keys[i].spec.polynomial);
      CHECK(a.keys[i].spec.seed == b.keys[i].spec.seed);
      CHECK(a.keys[i].key == b.keys[i].key);
    }
  }
}

TEST_CASE("plan_circuit structure invariants") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto plan = plan_eval(4, seed);
    CHECK(plan.eta <= std::min(4u, plan.path.hops()));
    REQUIRE(plan.keys.size() == plan.eta + 1);
    CHECK(plan.keys.back().node == plan.path.nodes.back());  // destination decrypts
    // anonymization nodes listed in path order, all intermediate, distinct
    std::set<NodeId> seen;
    std::size_t cursor = 0;
    for (std::size_t i = 0; i + 1 < plan.keys.size(); ++i) {
      const NodeId n = plan.keys[i].node;
      CHECK(seen.insert(n).second);
      const auto pos = std::find(plan.path.nodes.begin(), plan.path.nodes.end(), n) -
                       plan.path.nodes.begin();
      CHECK(pos > 0);
      CHECK(pos + 1 < static_cast<std::ptrdiff_t>(plan.path.nodes.size()));
      CHECK(static_cast<std::size_t>(pos) > cursor);
      cursor = pos;
    }
    // keys are pairwise distinct and nonzero by construction
    CHECK_NOTHROW(plan.schedule());
  }
}

TEST_CASE("plan_circuit signals blocked trials") {
  Rng rng(4);
  CHECK_THROWS_AS(plan_circuit(test::eval_topology(), test::eval_ensemble(),
                               AvailabilityMask(12, 0), 2, KeyPolicy{}, rng),
                  error);
  try {
    Rng r2(4);
    plan_circuit(test::eval_topology(), test::eval_ensemble(), AvailabilityMask(12, 0), 2,
                 KeyPolicy{}, r2);
  } catch (const error& e) {
    CHECK(e.code() == errc::blocked);
  }
}

TEST_CASE("selection frequencies follow the model distribution") {
  const auto& e = test::eval_ensemble();
  const auto q = selection_distribution(e);
  const double mass = pairwise_sum(q);

  std::map<std::size_t, int> counts;
  const int n = 10'000;
  Rng rng(2024);
  KeyPolicy policy;
  policy.message_bits = 32;
  for (int i = 0; i < n; ++i) {
    Rng trial = rng.split(i);
    const auto up = sample_availability(e, trial);
    if (std::none_of(up.begin(), up.end(), [](std::uint8_t b) { return b != 0; })) continue;
    const auto plan =
        plan_circuit(test::eval_topology(), e, up, 2, policy, trial);
    ++counts[plan.path_index];
  }
  for (std::size_t a = 0; a < e.size(); ++a) {
    const double expected = q[a] / mass;
    const double freq = static_cast<double>(counts[a]) / n;
    // 12 simultaneous checks: use a 4-sigma band
    const double band = 4.0 * std::sqrt(expected * (1.0 - expected) / n);
    CHECK(test::approx(freq, expected, band));
  }
}

TEST_CASE("transmit: eta = 0 shows m' ^ c_d on every link and delivers m'") {
  Rng rng(12);
  const auto& e = test::eval_ensemble();
  KeyPolicy policy;
  policy.message_bits = 64;
  const auto plan = plan_circuit(test::eval_topology(), e, all_up(12), 0, policy, rng);
  REQUIRE(plan.keys.size() == 1);

  const auto m = BitString::random(64, rng);
  const auto result = transmit(test::eval_topology(), plan, m);
  CHECK(result.delivered == m);
  REQUIRE(result.trace.hops.size() == plan.path.link_count());
  const auto expected_wire = m ^ plan.keys[0].key;
  for (const auto& hop : result.trace.hops) {
    CHECK(hop.payload == expected_wire);
    CHECK(hop.wavelength == plan.wavelength);
  }
}

TEST_CASE("transmit delivers bit-exactly and changes the wire at every peel") {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const auto plan = plan_eval(4, 1000 + trial);
    Rng payload_rng(trial);
    const auto m = BitString::random(plan.message_bits, payload_rng);
    const auto result = transmit(test::eval_topology(), plan, m);
    CHECK(result.delivered == m);

    // the wire image changes exactly at key-holding intermediate nodes
    std::set<NodeId> holders;
    for (const auto& k : plan.keys) holders.insert(k.node);
    for (std::size_t hop = 0; hop + 1 < result.trace.hops.size(); ++hop) {
      const NodeId mid = plan.path.nodes[hop + 1];
      const bool changed = !(result.trace.hops[hop].payload == result.trace.hops[hop + 1].payload);
      CHECK(changed == (holders.count(mid) > 0));
    }
    // unlinkability proxy: with eta >= 1 an observer of the first and last
    // links sees different payloads
    if (plan.eta >= 1)
      CHECK_FALSE(result.trace.hops.front().payload == result.trace.hops.back().payload);
  }
}

TEST_CASE("transmit rejects tampered circuits") {
  auto plan = plan_eval(3, 21);
  Rng rng(0);
  const auto m = BitString::random(plan.message_bits, rng);
  CHECK_NOTHROW(transmit(test::eval_topology(), plan, m));

  auto tampered = plan;
  tampered.keys.back().incoming_link = 9999;
  CHECK_THROWS_AS(transmit(test::eval_topology(), tampered, m), error);
  try {
    transmit(test::eval_topology(), tampered, m);
  } catch (const error& e) {
    CHECK(e.code() == errc::misconfigured);
  }

  const auto wrong_len = BitString::random(plan.message_bits + 1, rng);
  CHECK_THROWS_AS(transmit(test::eval_topology(), plan, wrong_len), error);
}

TEST_CASE("wavelength continuity: the chosen lambda fits every hop") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto plan = plan_eval(4, 500 + seed);
    std::uint32_t min_cap = UINT32_MAX;
    for (auto lid : plan.path.link_ids)
      min_cap = std::min(min_cap, test::eval_topology().links()[lid].wavelengths);
    CHECK(plan.wavelength >= 1);
    CHECK(plan.wavelength <= min_cap);
  }
}
