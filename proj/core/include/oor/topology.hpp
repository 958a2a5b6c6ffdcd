#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace oor {

using NodeId = std::uint32_t;  // 1-based

/// Directed fiber link with its number of parallel wavelength channels.
struct FiberLink {
  NodeId from = 0;
  NodeId to = 0;
  std::uint32_t wavelengths = 1;

  friend bool operator==(const FiberLink&, const FiberLink&) = default;
};

/// Immutable directed WDM network. Node ids are 1..node_count; duplicate
/// directed links, self-loops and zero capacities are rejected.
class Topology {
 public:
  Topology(std::string name, NodeId node_count, std::vector<FiberLink> links);

  const std::string& name() const { return name_; }
  NodeId node_count() const { return node_count_; }
  std::span<const FiberLink> links() const { return links_; }
  std::optional<std::size_t> find_link(NodeId from, NodeId to) const;

 private:
  std::string name_;
  NodeId node_count_ = 0;
  std::vector<FiberLink> links_;
};

/// One candidate s-d route: its node sequence (endpoints included), the
/// traversed link indices, and an optional availability probability P_l.
struct WavelengthPath {
  std::vector<NodeId> nodes;           // s, v_1..v_theta, d
  std::vector<std::size_t> link_ids;   // indices into Topology::links()
  std::optional<double> availability;  // P_l in [0,1]

  unsigned hops() const { return static_cast<unsigned>(nodes.size()) - 2; }  // theta
  unsigned link_count() const { return static_cast<unsigned>(link_ids.size()); }
  std::string node_string() const;  // "1-3-4-5"
};

/// All candidate paths for one s-d pair, sorted ascending by hop count with
/// lexicographic node-sequence tie-breaking. Index i corresponds to the
/// combination index alpha = i + 1 in reports.
class PathEnsemble {
 public:
  PathEnsemble() = default;
  PathEnsemble(NodeId source, NodeId dest, std::vector<WavelengthPath> paths);  // verifies order

  NodeId source() const { return source_; }
  NodeId dest() const { return dest_; }
  std::size_t size() const { return paths_.size(); }
  bool empty() const { return paths_.empty(); }
  const WavelengthPath& path(std::size_t i) const { return paths_.at(i); }
  std::span<const WavelengthPath> paths() const { return paths_; }

  bool has_availabilities() const;
  std::vector<double> availabilities() const;  // throws if unset

 private:
  NodeId source_ = 0;
  NodeId dest_ = 0;
  std::vector<WavelengthPath> paths_;
};

struct EnumerationLimits {
  std::size_t max_paths = 1'000'000;  // guard against pathological inputs
};

/// Exhaustive DFS over loop-free directed paths from s to d. Deterministic:
/// result sorted by (hop count, node sequence).
PathEnsemble enumerate_paths(const Topology& t, NodeId s, NodeId d, EnumerationLimits limits = {});

/// Assigns availabilities positionally to the sorted ensemble.
/// |values| must equal the ensemble size and each value lie in [0,1].
PathEnsemble attach_availabilities(PathEnsemble ensemble, std::span<const double> values);

/// A topology document: the network plus named evaluation ensembles.
struct EnsembleSpec {
  NodeId source = 0;
  NodeId dest = 0;
  std::vector<double> availabilities;
};

struct TopologyDocument {
  Topology topology;
  std::vector<EnsembleSpec> ensembles;
};

/// Parses the JSON topology document
///   {name, node_count, links: [{from,to,wavelengths}],
///    ensembles: [{source,dest,availabilities:[...]}]}
/// Schema violations raise errc::parse, invariant violations errc::validation.
TopologyDocument load_topology_document(std::istream& in);
TopologyDocument load_topology_document(const std::string& text);
Topology load_topology(const std::string& text);

/// Builds the evaluation ensemble for one document entry: enumerate + attach.
PathEnsemble build_ensemble(const Topology& t, const EnsembleSpec& spec);

}  // namespace oor
