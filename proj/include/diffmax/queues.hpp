#pragma once

#include <deque>
#include <vector>

#include "diffmax/topology.hpp"

namespace diffmax {

// Single-slot queue recursions. The engine's stateful FIFO bookkeeping must
// agree with these closed forms at every slot boundary; they are also the
// unit the algebraic tests exercise.
Packets update_network_queue(Packets u_prev, Packets outgoing, Packets incoming,
                             Packets exogenous);
Packets update_link_queue(Packets v_prev, Packets service, Packets routed_in);

struct PacketRec {
  FlowId flow = -1;
  long long enqueue_slot = 0;
};

// Whole-network queue state. U is a per-(node, flow) count; V keeps actual
// packet records so FIFO order and per-packet timing survive.
struct QueueState {
  std::vector<std::vector<Packets>> network;  // U[node][flow]
  std::vector<std::deque<PacketRec>> link;    // V[link], held at link src
  std::vector<std::vector<Packets>> link_flow_count;  // [link][flow], audit helper
  std::vector<Packets> reservoir;             // [flow], transport backlog at o(s)

  QueueState() = default;
  QueueState(int nodes, int links, int flows)
      : network(nodes, std::vector<Packets>(flows, 0)),
        link(links),
        link_flow_count(links, std::vector<Packets>(flows, 0)),
        reservoir(flows, 0) {}

  Packets link_size(LinkId l) const { return static_cast<Packets>(link[l].size()); }
  std::vector<Packets> link_sizes() const {
    std::vector<Packets> v(link.size());
    for (size_t l = 0; l < link.size(); ++l) v[l] = static_cast<Packets>(link[l].size());
    return v;
  }
  void push_link(LinkId l, PacketRec rec) {
    link[l].push_back(rec);
    ++link_flow_count[l][rec.flow];
  }
  PacketRec pop_link(LinkId l) {
    PacketRec rec = link[l].front();
    link[l].pop_front();
    --link_flow_count[l][rec.flow];
    return rec;
  }
};

// Conservation ledger: injected = delivered + dropped + in-flight, where
// in-flight spans reservoirs, U queues and V queues.
struct PacketLedger {
  std::vector<Packets> injected;
  std::vector<Packets> delivered;
  std::vector<Packets> dropped;

  PacketLedger() = default;
  explicit PacketLedger(int flows) : injected(flows, 0), delivered(flows, 0), dropped(flows, 0) {}
};

}  // namespace diffmax
