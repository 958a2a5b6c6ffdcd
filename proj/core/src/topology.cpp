#include "oor/topology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "oor/errors.hpp"

namespace oor {

Topology::Topology(std::string name, NodeId node_count, std::vector<FiberLink> links)
    : name_(std::move(name)), node_count_(node_count), links_(std::move(links)) {
  require(node_count_ >= 1, errc::validation, "topology: node_count must be >= 1");
  std::map<std::pair<NodeId, NodeId>, std::size_t> seen;
  for (std::size_t i = 0; i < links_.size(); ++i) {
    const auto& l = links_[i];
    require(l.from >= 1 && l.from <= node_count_ && l.to >= 1 && l.to <= node_count_,
            errc::validation,
            "topology: link " + std::to_string(l.from) + "-" + std::to_string(l.to) +
                " references a node outside 1.." + std::to_string(node_count_));
    require(l.from != l.to, errc::validation, "topology: self-loop at node " + std::to_string(l.from));
    require(l.wavelengths >= 1, errc::validation, "topology: zero-capacity link");
    require(seen.emplace(std::pair{l.from, l.to}, i).second, errc::validation,
            "topology: duplicate directed link " + std::to_string(l.from) + "-" + std::to_string(l.to));
  }
}

std::optional<std::size_t> Topology::find_link(NodeId from, NodeId to) const {
  for (std::size_t i = 0; i < links_.size(); ++i)
    if (links_[i].from == from && links_[i].to == to) return i;
  return std::nullopt;
}

std::string WavelengthPath::node_string() const {
  std::string s;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(nodes[i]);
  }
  return s;
}

PathEnsemble::PathEnsemble(NodeId source, NodeId dest, std::vector<WavelengthPath> paths)
    : source_(source), dest_(dest), paths_(std::move(paths)) {
  for (std::size_t i = 0; i + 1 < paths_.size(); ++i) {
    const bool ordered = paths_[i].hops() < paths_[i + 1].hops() ||
                         (paths_[i].hops() == paths_[i + 1].hops() &&
                          paths_[i].nodes <= paths_[i + 1].nodes);
    require(ordered, errc::validation, "ensemble: paths not sorted by (hops, node sequence)");
  }
  for (const auto& p : paths_) {
    require(p.nodes.size() >= 2 && p.nodes.front() == source_ && p.nodes.back() == dest_,
            errc::validation, "ensemble: path endpoints do not match source/dest");
    if (p.availability) {
      require(*p.availability >= 0.0 && *p.availability <= 1.0, errc::validation,
              "ensemble: availability outside [0,1]");
    }
  }
}

bool PathEnsemble::has_availabilities() const {
  return !paths_.empty() &&
         std::all_of(paths_.begin(), paths_.end(), [](const auto& p) { return p.availability.has_value(); });
}

std::vector<double> PathEnsemble::availabilities() const {
  std::vector<double> out;
  out.reserve(paths_.size());
  for (const auto& p : paths_) {
    require(p.availability.has_value(), errc::validation, "ensemble: availabilities not attached");
    out.push_back(*p.availability);
  }
  return out;
}

PathEnsemble enumerate_paths(const Topology& t, NodeId s, NodeId d, EnumerationLimits limits) {
  require(s != d, errc::validation, "enumerate_paths: source equals destination");
  require(s >= 1 && s <= t.node_count() && d >= 1 && d <= t.node_count(), errc::validation,
          "enumerate_paths: endpoint outside the node range");

  // adjacency as (next node, link index)
  std::vector<std::vector<std::pair<NodeId, std::size_t>>> adj(t.node_count() + 1);
  for (std::size_t i = 0; i < t.links().size(); ++i) {
    const auto& l = t.links()[i];
    adj[l.from].emplace_back(l.to, i);
  }

  std::vector<WavelengthPath> found;
  std::vector<NodeId> node_stack{s};
  std::vector<std::size_t> link_stack;
  std::vector<char> visited(t.node_count() + 1, 0);
  visited[s] = 1;

  auto dfs = [&](auto&& self, NodeId at) -> void {
    if (at == d) {
      require(found.size() < limits.max_paths, errc::capacity,
              "enumerate_paths: path count exceeds the configured ceiling");
      found.push_back(WavelengthPath{node_stack, link_stack, std::nullopt});
      return;
    }
    for (const auto& [next, link] : adj[at]) {
      if (visited[next]) continue;
      visited[next] = 1;
      node_stack.push_back(next);
      link_stack.push_back(link);
      self(self, next);
      link_stack.pop_back();
      node_stack.pop_back();
      visited[next] = 0;
    }
  };
  dfs(dfs, s);

  std::sort(found.begin(), found.end(), [](const WavelengthPath& a, const WavelengthPath& b) {
    if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
    return a.nodes < b.nodes;
  });
  return PathEnsemble(s, d, std::move(found));
}

PathEnsemble attach_availabilities(PathEnsemble ensemble, std::span<const double> values) {
  require(values.size() == ensemble.size(), errc::validation,
          "attach_availabilities: expected " + std::to_string(ensemble.size()) + " values, got " +
              std::to_string(values.size()));
  std::vector<WavelengthPath> paths(ensemble.paths().begin(), ensemble.paths().end());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    require(values[i] >= 0.0 && values[i] <= 1.0, errc::validation,
            "attach_availabilities: probability outside [0,1]");
    paths[i].availability = values[i];
  }
  return PathEnsemble(ensemble.source(), ensemble.dest(), std::move(paths));
}

namespace {

using nlohmann::json;

template <typename T>
T get_field(const json& j, const char* key) {
  if (!j.contains(key)) fail(errc::parse, std::string("topology document: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(errc::parse, std::string("topology document: field '") + key + "': " + e.what());
  }
}

TopologyDocument parse_document(const json& j) {
  require(j.is_object(), errc::parse, "topology document: top level must be an object");
  const auto name = get_field<std::string>(j, "name");
  const auto node_count = get_field<NodeId>(j, "node_count");

  std::vector<FiberLink> links;
  const auto jlinks = get_field<json>(j, "links");
  require(jlinks.is_array(), errc::parse, "topology document: 'links' must be an array");
  for (const auto& jl : jlinks) {
    FiberLink l;
    l.from = get_field<NodeId>(jl, "from");
    l.to = get_field<NodeId>(jl, "to");
    l.wavelengths = get_field<std::uint32_t>(jl, "wavelengths");
    links.push_back(l);
  }

  TopologyDocument doc{Topology(name, node_count, std::move(links)), {}};
  if (j.contains("ensembles")) {
    const auto& je = j.at("ensembles");
    require(je.is_array(), errc::parse, "topology document: 'ensembles' must be an array");
    for (const auto& e : je) {
      EnsembleSpec spec;
      spec.source = get_field<NodeId>(e, "source");
      spec.dest = get_field<NodeId>(e, "dest");
      spec.availabilities = get_field<std::vector<double>>(e, "availabilities");
      require(spec.source >= 1 && spec.source <= doc.topology.node_count() && spec.dest >= 1 &&
                  spec.dest <= doc.topology.node_count() && spec.source != spec.dest,
              errc::validation, "topology document: ensemble endpoints invalid");
      doc.ensembles.push_back(std::move(spec));
    }
  }
  return doc;
}

}  // namespace

TopologyDocument load_topology_document(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(errc::parse, std::string("topology document: ") + e.what());
  }
  return parse_document(j);
}

TopologyDocument load_topology_document(const std::string& text) {
  std::istringstream in(text);
  return load_topology_document(in);
}

Topology load_topology(const std::string& text) { return load_topology_document(text).topology; }

PathEnsemble build_ensemble(const Topology& t, const EnsembleSpec& spec) {
  PathEnsemble paths = enumerate_paths(t, spec.source, spec.dest);
  return attach_availabilities(std::move(paths), spec.availabilities);
}

}  // namespace oor
