#include "diffmax/topology.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <sstream>

#include "diffmax/errors.hpp"
#include "diffmax/rng.hpp"

namespace diffmax {

NodeId Topology::add_node(std::string name) {
  for (const auto& n : names_) {
    if (n == name) throw ValidationError("duplicate node name: " + name);
  }
  names_.push_back(std::move(name));
  out_links_.emplace_back();
  neighbors_.emplace_back();
  return static_cast<NodeId>(names_.size()) - 1;
}

LinkId Topology::add_link(NodeId src, NodeId dst, Packets rate) {
  if (src < 0 || src >= node_count() || dst < 0 || dst >= node_count())
    throw ValidationError("link endpoint is not a declared node");
  if (src == dst) throw ValidationError("self-links are not allowed");
  if (rate < 1) throw ValidationError("link rate must be >= 1 packet/slot");
  if (find_link(src, dst)) throw ValidationError("duplicate link " + names_[src] + "->" + names_[dst]);
  links_.push_back({src, dst, rate});
  const LinkId id = static_cast<LinkId>(links_.size()) - 1;
  out_links_[src].push_back(id);
  neighbors_[src].push_back(dst);
  for (auto& row : conflict_) row.push_back(0);
  conflict_.emplace_back(links_.size(), 0);
  return id;
}

void Topology::add_conflict(LinkId a, LinkId b) {
  if (a < 0 || a >= link_count() || b < 0 || b >= link_count())
    throw ValidationError("conflict references an unknown link");
  if (a == b) throw ValidationError("conflict relation must be irreflexive");
  conflict_[a][b] = 1;
  conflict_[b][a] = 1;
}

void Topology::apply_interference(InterferenceRule rule) {
  const int l_count = link_count();
  // Undirected node adjacency, used by the two-hop rule.
  std::vector<std::vector<char>> adj(node_count(), std::vector<char>(node_count(), 0));
  for (const Link& lk : links_) {
    adj[lk.src][lk.dst] = 1;
    adj[lk.dst][lk.src] = 1;
  }
  auto touches = [](const Link& x, NodeId n) { return x.src == n || x.dst == n; };
  for (LinkId a = 0; a < l_count; ++a) {
    for (LinkId b = a + 1; b < l_count; ++b) {
      const Link& la = links_[a];
      const Link& lb = links_[b];
      bool share = touches(la, lb.src) || touches(la, lb.dst);
      bool hop = false;
      if (!share && rule == InterferenceRule::TwoHop) {
        for (NodeId x : {la.src, la.dst}) {
          for (NodeId y : {lb.src, lb.dst}) {
            if (adj[x][y]) hop = true;
          }
        }
      }
      if (share || hop) add_conflict(a, b);
    }
  }
}

std::optional<NodeId> Topology::find_node(const std::string& name) const {
  for (NodeId i = 0; i < node_count(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<LinkId> Topology::find_link(NodeId src, NodeId dst) const {
  for (LinkId l = 0; l < link_count(); ++l) {
    if (links_[l].src == src && links_[l].dst == dst) return l;
  }
  return std::nullopt;
}

std::vector<std::pair<LinkId, LinkId>> Topology::conflict_pairs() const {
  std::vector<std::pair<LinkId, LinkId>> out;
  for (LinkId a = 0; a < link_count(); ++a) {
    for (LinkId b = a + 1; b < link_count(); ++b) {
      if (conflict_[a][b]) out.emplace_back(a, b);
    }
  }
  return out;
}

void Topology::validate() const {
  std::vector<std::string> errs;
  if (node_count() == 0) errs.push_back("topology has no nodes");
  for (LinkId l = 0; l < link_count(); ++l) {
    const Link& lk = links_[l];
    if (lk.src == lk.dst) errs.push_back("self-link at link " + std::to_string(l));
    if (lk.src < 0 || lk.src >= node_count() || lk.dst < 0 || lk.dst >= node_count())
      errs.push_back("endpoint out of range at link " + std::to_string(l));
    if (lk.rate < 1) errs.push_back("nonpositive rate at link " + std::to_string(l));
  }
  for (LinkId a = 0; a < link_count(); ++a) {
    if (conflict_[a][a]) errs.push_back("reflexive conflict at link " + std::to_string(a));
    for (LinkId b = 0; b < link_count(); ++b) {
      if (conflict_[a][b] != conflict_[b][a])
        errs.push_back("asymmetric conflict between links " + std::to_string(a) + " and " +
                       std::to_string(b));
    }
  }
  if (!errs.empty()) {
    std::ostringstream msg;
    msg << "invalid topology:";
    for (const auto& e : errs) msg << "\n  - " << e;
    throw ValidationError(msg.str());
  }
}

TopologyKind parse_topology_kind(const std::string& name) {
  if (name == "triangle") return TopologyKind::Triangle;
  if (name == "diamond") return TopologyKind::Diamond;
  if (name == "grid") return TopologyKind::Grid;
  throw ConfigError("unknown topology kind: " + name);
}

std::string to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::Triangle: return "triangle";
    case TopologyKind::Diamond: return "diamond";
    case TopologyKind::Grid: return "grid";
  }
  return "?";
}

namespace {

void add_both(Topology& t, NodeId a, NodeId b) {
  // Directed pairs inserted in (src, dst) node order so link ids are sorted.
  if (a > b) std::swap(a, b);
  t.add_link(a, b);
}

std::vector<char> reachable_from(const Topology& t, NodeId start) {
  std::vector<char> seen(t.node_count(), 0);
  std::queue<NodeId> q;
  q.push(start);
  seen[start] = 1;
  while (!q.empty()) {
    NodeId i = q.front();
    q.pop();
    for (NodeId j : t.neighbors(i)) {
      if (!seen[j]) {
        seen[j] = 1;
        q.push(j);
      }
    }
  }
  return seen;
}

Network build_grid(std::uint64_t seed, InterferenceRule rule) {
  constexpr int kNodes = 12;
  constexpr int kCols = 4;
  constexpr int kRows = 3;
  constexpr int kFlows = 4;
  std::mt19937_64 rng(substream_seed(seed, kTopologyStream));

  Network net;
  net.name = "grid";
  Topology t;
  std::vector<int> cell(kNodes);
  for (int i = 0; i < kNodes; ++i) {
    t.add_node("N" + std::to_string(i));
    cell[i] = static_cast<int>(bounded_draw(rng, kCols * kRows));
  }
  auto col = [&](int i) { return cell[i] % kCols; };
  auto row = [&](int i) { return cell[i] / kCols; };
  for (NodeId a = 0; a < kNodes; ++a) {
    for (NodeId b = a + 1; b < kNodes; ++b) {
      if (std::abs(col(a) - col(b)) <= 1 && std::abs(row(a) - row(b)) <= 1) {
        t.add_link(a, b);
        t.add_link(b, a);
      }
    }
  }
  t.apply_interference(rule);
  net.topo = std::move(t);

  // Four random flows between distinct reachable pairs; degenerate
  // placements fall back to arbitrary distinct pairs.
  std::vector<std::pair<NodeId, NodeId>> chosen;
  for (int attempt = 0; attempt < 400 && static_cast<int>(chosen.size()) < kFlows; ++attempt) {
    NodeId src = static_cast<NodeId>(bounded_draw(rng, kNodes));
    NodeId dst = static_cast<NodeId>(bounded_draw(rng, kNodes));
    if (src == dst) continue;
    if (std::find(chosen.begin(), chosen.end(), std::make_pair(src, dst)) != chosen.end()) continue;
    if (!reachable_from(net.topo, src)[dst]) continue;
    chosen.emplace_back(src, dst);
  }
  for (int attempt = 0; static_cast<int>(chosen.size()) < kFlows && attempt < 400; ++attempt) {
    NodeId src = static_cast<NodeId>(bounded_draw(rng, kNodes));
    NodeId dst = static_cast<NodeId>(bounded_draw(rng, kNodes));
    if (src != dst &&
        std::find(chosen.begin(), chosen.end(), std::make_pair(src, dst)) == chosen.end())
      chosen.emplace_back(src, dst);
  }
  for (int s = 0; s < static_cast<int>(chosen.size()); ++s)
    net.flows.push_back({s, chosen[s].first, chosen[s].second, {}});
  return net;
}

}  // namespace

Network build_topology(TopologyKind kind, std::uint64_t seed, InterferenceRule rule) {
  switch (kind) {
    case TopologyKind::Triangle: {
      Network net;
      net.name = "triangle";
      Topology t;
      NodeId a = t.add_node("A");
      NodeId b = t.add_node("B");
      NodeId c = t.add_node("C");
      add_both(t, a, b);
      add_both(t, a, c);
      add_both(t, b, a);
      add_both(t, b, c);
      add_both(t, c, a);
      add_both(t, c, b);
      t.apply_interference(rule);
      net.topo = std::move(t);
      net.flows = {{0, a, b, {}}, {1, a, c, {}}};
      return net;
    }
    case TopologyKind::Diamond: {
      // Edge set A-B, A-C, B-D, C-D inferred from the flow descriptions and
      // the shape's name; the source material never lists it explicitly.
      Network net;
      net.name = "diamond";
      Topology t;
      NodeId a = t.add_node("A");
      NodeId b = t.add_node("B");
      NodeId c = t.add_node("C");
      NodeId d = t.add_node("D");
      t.add_link(a, b);
      t.add_link(a, c);
      t.add_link(b, a);
      t.add_link(b, d);
      t.add_link(c, a);
      t.add_link(c, d);
      t.add_link(d, b);
      t.add_link(d, c);
      t.apply_interference(rule);
      net.topo = std::move(t);
      net.flows = {{0, a, b, {}}, {1, a, d, {}}};
      return net;
    }
    case TopologyKind::Grid:
      return build_grid(seed, rule);
  }
  throw ConfigError("unknown topology kind");
}

}  // namespace diffmax
