#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace diffmax {

using NodeId = int;
using LinkId = int;
using FlowId = int;
using Packets = long long;

struct Link {
  NodeId src = -1;
  NodeId dst = -1;
  Packets rate = 1;  // R_l, packets per slot while the channel is ON
};

enum class InterferenceRule {
  NodeExclusive,  // links sharing an endpoint conflict (half-duplex radios)
  TwoHop,         // additionally, links joined by a topology edge conflict
};

// Static network description: nodes, directed capacitated links, and the
// symmetric conflict relation consumed by the scheduler.
class Topology {
 public:
  NodeId add_node(std::string name);
  LinkId add_link(NodeId src, NodeId dst, Packets rate = 1);
  void add_conflict(LinkId a, LinkId b);
  void apply_interference(InterferenceRule rule);

  int node_count() const { return static_cast<int>(names_.size()); }
  int link_count() const { return static_cast<int>(links_.size()); }
  const std::string& node_name(NodeId i) const { return names_.at(i); }
  std::optional<NodeId> find_node(const std::string& name) const;
  const Link& link(LinkId l) const { return links_.at(l); }
  const std::vector<Link>& links() const { return links_; }
  std::optional<LinkId> find_link(NodeId src, NodeId dst) const;
  const std::vector<LinkId>& out_links(NodeId i) const { return out_links_.at(i); }
  const std::vector<NodeId>& neighbors(NodeId i) const { return neighbors_.at(i); }
  bool conflicts(LinkId a, LinkId b) const { return conflict_.at(a).at(b) != 0; }
  std::vector<std::pair<LinkId, LinkId>> conflict_pairs() const;

  // Throws ValidationError listing every violated structural invariant.
  void validate() const;

 private:
  std::vector<std::string> names_;
  std::vector<Link> links_;
  std::vector<std::vector<LinkId>> out_links_;
  std::vector<std::vector<NodeId>> neighbors_;
  std::vector<std::vector<char>> conflict_;  // symmetric, zero diagonal
};

enum class ArrivalKind { Saturated, Cbr, Bernoulli };

struct ArrivalSpec {
  ArrivalKind kind = ArrivalKind::Saturated;
  double rate = 0.0;  // mean packets/slot; unused for Saturated
};

struct Flow {
  FlowId id = -1;
  NodeId src = -1;
  NodeId dst = -1;
  ArrivalSpec arrival;
};

enum class TopologyKind { Triangle, Diamond, Grid };

TopologyKind parse_topology_kind(const std::string& name);  // throws ConfigError
std::string to_string(TopologyKind kind);

struct Network {
  Topology topo;
  std::vector<Flow> flows;
  std::string name;
};

// Topology presets. Deterministic for a fixed (kind, seed); the seed only
// matters for the grid (random node placement and flow endpoints).
Network build_topology(TopologyKind kind, std::uint64_t seed,
                       InterferenceRule rule = InterferenceRule::NodeExclusive);

}  // namespace diffmax
