#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <string>
#include <vector>

#include "oor/bits.hpp"
#include "oor/lfsr.hpp"
#include "oor/onion.hpp"
#include "oor/rng.hpp"
#include "oor/topology.hpp"

namespace oor {

/// Opaque key-pair handles standing in for a real public-key scheme. The
/// public side is freely copyable; the private side is handed out once per
/// node by the registry and is required to open sealed layers.
struct PublicHandle {
  NodeId node = 0;
  std::uint64_t pair_id = 0;
};

struct PrivateHandle {
  NodeId node = 0;
  std::uint64_t pair_id = 0;
  std::uint64_t secret = 0;
};

struct SealedBlob {
  std::uint64_t pair_id = 0;
  std::vector<std::uint8_t> body;  // whitened plaintext
};

/// Pluggable sealed-box abstraction: the scheme generates key-pair handles,
/// seals to a public handle and opens with the matching private handle. A
/// real cryptosystem can be substituted behind this interface without
/// touching the circuit logic.
class SealedBoxScheme {
 public:
  virtual ~SealedBoxScheme() = default;
  virtual std::pair<PublicHandle, PrivateHandle> generate(NodeId node, Rng& rng) const = 0;
  virtual SealedBlob seal(const PublicHandle& to, std::span<const std::uint8_t> plaintext) const = 0;
  /// Throws errc::access_denied unless the handle pair-id and secret match.
  virtual std::vector<std::uint8_t> open(const PrivateHandle& with, const SealedBlob& blob) const = 0;
};

/// Default model scheme: the blob records the pair id and the body is
/// whitened with a stream derived from the pair secret. Not cryptography;
/// an access-control stand-in with the right API shape.
const SealedBoxScheme& token_sealed_box();

/// Per-node role flags and key-pair handles for every node of a topology.
class NodeRegistry {
 public:
  NodeRegistry(const Topology& t, std::uint64_t seed,
               const SealedBoxScheme& scheme = token_sealed_box());

  const PublicHandle& public_handle(NodeId node) const;
  const PrivateHandle& private_handle(NodeId node) const;
  const SealedBoxScheme& scheme() const { return *scheme_; }
  NodeId node_count() const { return static_cast<NodeId>(publics_.size()); }

 private:
  std::vector<PublicHandle> publics_;    // index node-1
  std::vector<PrivateHandle> privates_;  // model: accessible to the owner only
  const SealedBoxScheme* scheme_;
};

/// One onion layer's plaintext: the route segment to the next key holder,
/// the circuit wavelength and the node's session-key material.
struct NodeConfig {
  NodeId node = 0;
  std::vector<NodeId> route_segment;  // nodes after this holder up to the next holder
  std::uint32_t wavelength = 0;
  LfsrSpec key_material;

  friend bool operator==(const NodeConfig&, const NodeConfig&) = default;
};

/// Layered control message; layers[0] is the outermost and must be opened
/// first. Opening yields that node's config and the residual onion.
struct ControlOnion {
  std::vector<SealedBlob> layers;
};

struct OpenedLayer {
  NodeConfig config;
  ControlOnion residual;
};

OpenedLayer open_layer(const ControlOnion& onion, const PrivateHandle& with,
                       const SealedBoxScheme& scheme = token_sealed_box());

/// A key-holding node on the circuit: the anonymization nodes in path order,
/// then the destination.
struct PlannedKey {
  NodeId node = 0;
  std::size_t incoming_link = 0;  // link id whose arrival triggers the peel
  LfsrSpec spec;
  BitString key;  // keystream truncated to the payload length
};

struct CircuitPlan {
  std::size_t path_index = 0;  // position in the ensemble (alpha - 1)
  WavelengthPath path;
  std::uint32_t wavelength = 0;
  unsigned eta = 0;
  unsigned eta_max = 0;
  std::uint64_t message_bits = 0;
  std::vector<PlannedKey> keys;  // eta anonymization keys + destination key

  KeySchedule schedule() const;
};

struct KeyPolicy {
  std::uint64_t message_bits = 128;
  /// Degrees are drawn uniformly from secure_degree_range(message_bits)
  /// unless a fixed range is supplied here.
  std::optional<DegreeRange> degrees;
};

/// Per-trial availability sample; entry i is 1 when path i is up.
using AvailabilityMask = std::vector<std::uint8_t>;

/// Samples each path's availability as an independent Bernoulli(P_l) trial.
AvailabilityMask sample_availability(const PathEnsemble& ensemble, Rng& rng);

/// Plans one circuit for a non-blocked trial: selects the transmission path
/// from the model's selection distribution (see selection_probability),
/// draws eta uniformly from {0..min(eta_max, theta)}, picks a uniform
/// eta-subset of intermediate nodes, and equips every key holder plus the
/// destination with a fresh LFSR spec and keystream. Colliding or all-zero
/// keystreams are re-drawn. Throws errc::blocked when no path is available.
CircuitPlan plan_circuit(const Topology& t, const PathEnsemble& ensemble,
                         std::span<const std::uint8_t> available, unsigned eta_max,
                         const KeyPolicy& policy, Rng& rng);

/// Seals one layer per key holder, in path order, destination last.
ControlOnion setup_circuit(const CircuitPlan& plan, const NodeRegistry& registry);

/// What the adversary sees on one traversed link.
struct WireHop {
  std::size_t link_id = 0;
  std::uint32_t wavelength = 0;
  BitString payload;
};

struct WireTrace {
  std::vector<WireHop> hops;
};

struct TransmitResult {
  Payload delivered;
  WireTrace trace;
};

/// Runs the data plane: the source XORs all session keys onto the payload,
/// every anonymization node peels its own key when the stream arrives on the
/// expected (link, wavelength), and the destination peels last. The trace
/// records the payload observed on every link.
TransmitResult transmit(const Topology& t, const CircuitPlan& plan, const Payload& m_prime);

}  // namespace oor
