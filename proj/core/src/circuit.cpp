#include "oor/circuit.hpp"

#include <algorithm>

#include <json.hpp>

#include "oor/availability.hpp"
#include "oor/errors.hpp"

namespace oor {
namespace {

using nlohmann::json;

// Access-control token scheme standing in for public-key sealing: opening
// requires possession of the issued secret, and the body is whitened with a
// stream keyed by it. A model, not cryptography.
class TokenScheme final : public SealedBoxScheme {
 public:
  std::pair<PublicHandle, PrivateHandle> generate(NodeId node, Rng& rng) const override {
    const std::uint64_t pair_id = rng.next_u64();
    return {PublicHandle{node, pair_id}, PrivateHandle{node, pair_id, derive(pair_id)}};
  }

  SealedBlob seal(const PublicHandle& to, std::span<const std::uint8_t> plaintext) const override {
    SealedBlob blob;
    blob.pair_id = to.pair_id;
    blob.body.assign(plaintext.begin(), plaintext.end());
    whiten(blob.body, derive(to.pair_id));
    return blob;
  }

  std::vector<std::uint8_t> open(const PrivateHandle& with, const SealedBlob& blob) const override {
    require(with.pair_id == blob.pair_id && with.secret == derive(blob.pair_id),
            errc::access_denied, "sealed layer: private handle does not match the addressee");
    std::vector<std::uint8_t> out = blob.body;
    whiten(out, with.secret);
    return out;
  }

 private:
  static std::uint64_t derive(std::uint64_t pair_id) {
    Rng r(pair_id ^ 0x5ec0b0c5a11edb07ull);
    return r.next_u64();
  }

  static void whiten(std::vector<std::uint8_t>& bytes, std::uint64_t key) {
    Rng stream(key);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < bytes.size(); ++i) {
      if (i % 8 == 0) word = stream.next_u64();
      bytes[i] ^= static_cast<std::uint8_t>(word >> (8 * (i % 8)));
    }
  }
};

std::vector<std::uint8_t> encode_config(const NodeConfig& c) {
  json j{{"node", c.node},
         {"segment", c.route_segment},
         {"wavelength", c.wavelength},
         {"poly", c.key_material.polynomial.mask},
         {"seed", c.key_material.seed}};
  const std::string s = j.dump();
  return {s.begin(), s.end()};
}

NodeConfig decode_config(std::span<const std::uint8_t> bytes) {
  NodeConfig c;
  try {
    const json j = json::parse(bytes.begin(), bytes.end());
    c.node = j.at("node").get<NodeId>();
    c.route_segment = j.at("segment").get<std::vector<NodeId>>();
    c.wavelength = j.at("wavelength").get<std::uint32_t>();
    c.key_material.polynomial.mask = j.at("poly").get<std::uint64_t>();
    c.key_material.seed = j.at("seed").get<std::uint64_t>();
  } catch (const json::exception&) {
    fail(errc::access_denied, "sealed layer: body does not decode (wrong handle?)");
  }
  return c;
}

}  // namespace

const SealedBoxScheme& token_sealed_box() {
  static const TokenScheme scheme;
  return scheme;
}

NodeRegistry::NodeRegistry(const Topology& t, std::uint64_t seed, const SealedBoxScheme& scheme)
    : scheme_(&scheme) {
  Rng rng(seed);
  publics_.reserve(t.node_count());
  privates_.reserve(t.node_count());
  for (NodeId n = 1; n <= t.node_count(); ++n) {
    auto [pub, priv] = scheme.generate(n, rng);
    publics_.push_back(pub);
    privates_.push_back(priv);
  }
}

const PublicHandle& NodeRegistry::public_handle(NodeId node) const {
  require(node >= 1 && node <= publics_.size(), errc::validation, "registry: unknown node");
  return publics_[node - 1];
}

const PrivateHandle& NodeRegistry::private_handle(NodeId node) const {
  require(node >= 1 && node <= privates_.size(), errc::validation, "registry: unknown node");
  return privates_[node - 1];
}

OpenedLayer open_layer(const ControlOnion& onion, const PrivateHandle& with,
                       const SealedBoxScheme& scheme) {
  require(!onion.layers.empty(), errc::validation, "control onion: no layers left");
  const auto plain = scheme.open(with, onion.layers.front());
  OpenedLayer result;
  result.config = decode_config(plain);
  result.residual.layers.assign(onion.layers.begin() + 1, onion.layers.end());
  return result;
}

KeySchedule CircuitPlan::schedule() const {
  std::vector<BitString> ks;
  ks.reserve(keys.size());
  for (const auto& k : keys) ks.push_back(k.key);
  return KeySchedule(std::move(ks));
}

AvailabilityMask sample_availability(const PathEnsemble& ensemble, Rng& rng) {
  AvailabilityMask up(ensemble.size());
  const auto p = ensemble.availabilities();
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = rng.bernoulli(p[i]);
  return up;
}

namespace {

constexpr int k_max_key_redraws = 64;

// Categorical draw from the model's selection distribution.
std::size_t select_path(const PathEnsemble& ensemble, Rng& rng) {
  const std::vector<double> q = selection_distribution(ensemble);
  const double total = pairwise_sum(q);
  double u = rng.next_unit() * total;
  for (std::size_t i = 0; i < q.size(); ++i) {
    u -= q[i];
    if (u < 0) return i;
  }
  return q.size() - 1;
}

BitString draw_key(std::uint64_t message_bits, const DegreeRange& range, Rng& rng, LfsrSpec& spec_out,
                   const std::vector<PlannedKey>& existing) {
  for (int attempt = 0; attempt < k_max_key_redraws; ++attempt) {
    const unsigned g = range.g_min + static_cast<unsigned>(rng.below(range.g_max - range.g_min + 1));
    LfsrSpec spec;
    spec.polynomial = random_primitive(g, rng);
    spec.seed = 1 + rng.below((std::uint64_t(1) << g) - 1);
    BitString key = keystream(spec, message_bits);
    if (key.all_zero()) continue;  // possible when g > L: the seed window may be zero
    bool collides = false;
    for (const auto& k : existing) {
      if (k.key == key) {
        collides = true;
        break;
      }
    }
    if (collides) continue;
    spec_out = spec;
    return key;
  }
  fail(errc::misconfigured, "plan_circuit: could not draw distinct nonzero keys");
}

}  // namespace

CircuitPlan plan_circuit(const Topology& t, const PathEnsemble& ensemble,
                         std::span<const std::uint8_t> available, unsigned eta_max,
                         const KeyPolicy& policy, Rng& rng) {
  require(available.size() == ensemble.size(), errc::validation,
          "plan_circuit: availability sample size mismatch");
  require(policy.message_bits >= 1, errc::validation, "plan_circuit: zero-length message");
  if (std::none_of(available.begin(), available.end(), [](std::uint8_t b) { return b != 0; }))
    fail(errc::blocked, "plan_circuit: no path available in this trial");

  CircuitPlan plan;
  plan.path_index = select_path(ensemble, rng);
  plan.path = ensemble.path(plan.path_index);
  plan.eta_max = eta_max;
  plan.message_bits = policy.message_bits;

  // wavelength continuity: one lambda must be free on every hop; the model
  // draws uniformly from the bottleneck capacity
  std::uint32_t min_cap = UINT32_MAX;
  for (auto lid : plan.path.link_ids) min_cap = std::min(min_cap, t.links()[lid].wavelengths);
  plan.wavelength = 1 + static_cast<std::uint32_t>(rng.below(min_cap));

  const unsigned theta = plan.path.hops();
  plan.eta = static_cast<unsigned>(rng.below(std::min(eta_max, theta) + 1));

  // uniform eta-subset of intermediate nodes, kept in path order
  std::vector<std::size_t> positions(theta);
  for (std::size_t i = 0; i < theta; ++i) positions[i] = i + 1;  // index into path.nodes
  for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
    const std::size_t j = i + rng.below(positions.size() - i);
    std::swap(positions[i], positions[j]);
  }
  positions.resize(plan.eta);
  std::sort(positions.begin(), positions.end());

  const DegreeRange range =
      policy.degrees ? *policy.degrees : secure_degree_range(policy.message_bits);
  validate(range);

  auto add_key = [&](std::size_t node_pos) {
    PlannedKey pk;
    pk.node = plan.path.nodes[node_pos];
    pk.incoming_link = plan.path.link_ids[node_pos - 1];
    pk.key = draw_key(policy.message_bits, range, rng, pk.spec, plan.keys);
    plan.keys.push_back(std::move(pk));
  };
  for (auto pos : positions) add_key(pos);
  add_key(plan.path.nodes.size() - 1);  // destination always decrypts
  return plan;
}

ControlOnion setup_circuit(const CircuitPlan& plan, const NodeRegistry& registry) {
  ControlOnion onion;
  onion.layers.reserve(plan.keys.size());
  for (std::size_t i = 0; i < plan.keys.size(); ++i) {
    const auto& holder = plan.keys[i];
    NodeConfig config;
    config.node = holder.node;
    config.wavelength = plan.wavelength;
    config.key_material = holder.spec;
    // route segment: nodes strictly after this holder up to the next holder
    const auto begin = std::find(plan.path.nodes.begin(), plan.path.nodes.end(), holder.node);
    require(begin != plan.path.nodes.end(), errc::validation, "setup_circuit: holder not on path");
    if (i + 1 < plan.keys.size()) {
      const auto end = std::find(begin, plan.path.nodes.end(), plan.keys[i + 1].node);
      config.route_segment.assign(begin + 1, end + 1);
    }
    onion.layers.push_back(
        registry.scheme().seal(registry.public_handle(holder.node), encode_config(config)));
  }
  return onion;
}

TransmitResult transmit(const Topology& t, const CircuitPlan& plan, const Payload& m_prime) {
  require(m_prime.size() == plan.message_bits, errc::length_mismatch,
          "transmit: payload length differs from the planned message length");
  for (const auto& k : plan.keys)
    require(k.key.size() == m_prime.size(), errc::misconfigured,
            "transmit: key length differs from payload length");

  TransmitResult result;
  Payload current = layer_encrypt(m_prime, plan.schedule());

  for (std::size_t hop = 0; hop < plan.path.link_ids.size(); ++hop) {
    const std::size_t link = plan.path.link_ids[hop];
    result.trace.hops.push_back(WireHop{link, plan.wavelength, current});
    const NodeId arrival = plan.path.nodes[hop + 1];
    // lambda reader + key matching: a key holder peels when the stream
    // arrives on its configured (incoming link, wavelength)
    for (const auto& k : plan.keys) {
      if (k.node != arrival) continue;
      require(k.incoming_link == link, errc::misconfigured,
              "transmit: key holder saw the stream on an unexpected link");
      require(t.links()[link].wavelengths >= plan.wavelength, errc::misconfigured,
              "transmit: circuit wavelength not provisioned on this link");
      current = peel(current, k.key);
    }
  }
  result.delivered = current;
  return result;
}

}  // namespace oor
