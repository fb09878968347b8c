#pragma once

#include <map>
#include <vector>

#include "satnet/sim/config.hpp"

namespace satnet::sim {

struct Link {
    NodeId a;
    NodeId b;
    int channel = 0;
    double frequency_hz = 0.0;
};

struct NodeInfo {
    NodeId id;
    Vec2 position;
    std::string ip;
    double tx_power = 0.0;
};

class Topology {
public:
    const std::vector<NodeInfo>& nodes() const { return nodes_; }
    const std::vector<Link>& links() const { return links_; }

    const NodeInfo& info(const NodeId& id) const;
    bool has_link(const NodeId& a, const NodeId& b) const;
    const Link& link_between(const NodeId& a, const NodeId& b) const;

    NodeId covering_satellite(int terminal_index) const;
    NodeId next_hop(const NodeId& at, const NodeId& dst) const;

    // Full hop path from src to dst, src first.
    std::vector<NodeId> route(const NodeId& src, const NodeId& dst) const;

    friend Topology build_topology(const ScenarioConfig& cfg);

private:
    std::vector<NodeInfo> nodes_;
    std::vector<Link> links_;
    std::map<std::pair<NodeId, NodeId>, std::size_t> link_index_;
    std::map<NodeId, std::size_t> node_index_;
};

Topology build_topology(const ScenarioConfig& cfg);

std::string synthetic_ip(const NodeId& id);

}  // namespace satnet::sim
