#include "satnet/sim/topology.hpp"

namespace satnet::sim {

std::string synthetic_ip(const NodeId& id) {
    // 10.<zone>.0.<index>: zone 1/2 for terminals, 0 satellites, 3 craft, 4 agents
    switch (id.kind) {
        case NodeKind::EndUser:
            return "10." + std::to_string(terminal_zone(id.index)) + ".0." + std::to_string(id.index);
        case NodeKind::Satellite:
            return "10.0.0." + std::to_string(id.index);
        case NodeKind::JamCraft:
            return "10.3.0." + std::to_string(id.index);
        case NodeKind::JamUser:
        case NodeKind::GroundAgent:
            return "10.4.0." + std::to_string(id.index);
    }
    return "10.9.0.0";
}

const NodeInfo& Topology::info(const NodeId& id) const {
    auto it = node_index_.find(id);
    if (it == node_index_.end()) throw DataError("unknown node: " + to_string(id));
    return nodes_[it->second];
}

bool Topology::has_link(const NodeId& a, const NodeId& b) const {
    return link_index_.count({a, b}) > 0;
}

const Link& Topology::link_between(const NodeId& a, const NodeId& b) const {
    auto it = link_index_.find({a, b});
    if (it == link_index_.end())
        throw DataError("no link between " + to_string(a) + " and " + to_string(b));
    return links_[it->second];
}

NodeId Topology::covering_satellite(int terminal_index) const {
    return NodeId{terminal_zone(terminal_index) == 1 ? 0 : 1, NodeKind::Satellite};
}

NodeId Topology::next_hop(const NodeId& at, const NodeId& dst) const {
    if (at == dst) throw DataError("next_hop called at destination " + to_string(dst));
    if (at.kind == NodeKind::EndUser) {
        if (dst.kind == NodeKind::EndUser || dst.kind == NodeKind::Satellite)
            return covering_satellite(at.index);
        return dst;  // jam peers are direct neighbors
    }
    if (at.kind == NodeKind::Satellite) {
        if (dst.kind != NodeKind::EndUser) throw DataError("unroutable destination " + to_string(dst));
        const NodeId cover = covering_satellite(dst.index);
        if (at == cover) return dst;
        if (at.index == 2) return cover;   // relay hands to the covering satellite
        return NodeId{2, NodeKind::Satellite};  // cross-zone goes through the relay
    }
    // JamCraft/JamUser/GroundAgent talk to their direct peer only
    if (has_link(at, dst)) return dst;
    throw DataError("unroutable hop from " + to_string(at) + " to " + to_string(dst));
}

std::vector<NodeId> Topology::route(const NodeId& src, const NodeId& dst) const {
    std::vector<NodeId> path{src};
    NodeId at = src;
    while (at != dst) {
        at = next_hop(at, dst);
        path.push_back(at);
        if (path.size() > 8) throw DataError("routing loop detected");
    }
    return path;
}

Topology build_topology(const ScenarioConfig& cfg) {
    validate(cfg);
    Topology topo;

    auto add_node = [&](const NodeId& id, double tx_power) {
        const auto& pos = cfg.positions.at(to_string(id));
        topo.node_index_[id] = topo.nodes_.size();
        topo.nodes_.push_back(NodeInfo{id, pos, synthetic_ip(id), tx_power});
    };
    auto add_link = [&](const NodeId& a, const NodeId& b, int channel, double freq) {
        topo.link_index_[{a, b}] = topo.links_.size();
        topo.link_index_[{b, a}] = topo.links_.size();
        topo.links_.push_back(Link{a, b, channel, freq});
    };

    for (int s = 0; s < cfg.num_satellites; ++s) add_node({s, NodeKind::Satellite}, cfg.tx_power_satellite);
    for (int i = 0; i < cfg.num_terminals; ++i) add_node({i, NodeKind::EndUser}, cfg.tx_power_enduser);
    for (int j = 0; j < cfg.num_jam_crafts; ++j) add_node({j, NodeKind::JamCraft}, cfg.tx_power_jamcraft);
    for (int j = 0; j < cfg.num_jam_users; ++j) add_node({j, NodeKind::JamUser}, cfg.tx_power_jamuser);

    for (int i = 0; i < cfg.num_terminals; ++i) {
        const NodeId eu{i, NodeKind::EndUser};
        const NodeId sat = topo.covering_satellite(i);
        const int channel = terminal_zone(i) == 1 ? cfg.channels_zone1.at(i) : cfg.channels_zone2.at(i - 10);
        add_link(eu, sat, channel, cfg.terminal_frequency_hz);
    }
    add_link({0, NodeKind::Satellite}, {2, NodeKind::Satellite}, cfg.isl_channel_a, cfg.isl_frequency_hz);
    add_link({2, NodeKind::Satellite}, {1, NodeKind::Satellite}, cfg.isl_channel_b, cfg.isl_frequency_hz);

    for (int j = 0; j < cfg.num_jam_users; ++j) {
        // jam link j shares the zone-1 terminal channel j
        add_link({j, NodeKind::JamUser}, {0, NodeKind::JamCraft}, cfg.channels_jam.at(j),
                 cfg.terminal_frequency_hz);
    }
    return topo;
}

}  // namespace satnet::sim
