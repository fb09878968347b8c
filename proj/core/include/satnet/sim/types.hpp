#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "satnet/sim/config.hpp"

namespace satnet::sim {

enum class PacketType { Udp, Icmp };

enum class Outcome { Delivered, DroppedSnir, DroppedWrongPort, DroppedQueue };

std::string to_string(PacketType t);
std::string to_string(Outcome o);
PacketType parse_packet_type(const std::string& s);
Outcome parse_outcome(const std::string& s);

// One hop transmission event. Multi-hop packets share packet_id with
// strictly increasing time. DroppedQueue rows mark enqueue rejections and
// carry duration 0 / snir 0.
struct TraceRecord {
    double time = 0.0;  // transmission start, seconds
    std::int64_t packet_id = 0;
    NodeId sender;
    NodeId receiver;
    std::string ip_src;
    std::string ip_dst;
    int port_src = 0;
    int port_dst = 0;
    int channel = 0;
    double frequency = 0.0;  // Hz
    int size = 0;            // bytes
    PacketType packet_type = PacketType::Udp;
    int hop_index = 0;
    Outcome outcome = Outcome::Delivered;
    double snir = 0.0;
    double duration = 0.0;  // airtime, seconds
};

// Per-node statistic kinds sampled on a fixed cadence. Counter stats are
// per-interval deltas; DataQueueLen is instantaneous; snir is the mean over
// receptions in the interval; throughput is delivered bit/s at the node.
enum class StatKind {
    RcvdPK,
    SentPK,
    DroppedPKWrongPort,
    DataQueueLen,
    PassedUpPk,
    RcvdPKFromHL,
    RcvdPKFromLL,
    SentDownPK,
    DropPKByQueue,
    Snir,
    Throughput,
};

inline constexpr int kNumStats = 11;
inline constexpr std::array<StatKind, kNumStats> kAllStats = {
    StatKind::RcvdPK,       StatKind::SentPK,     StatKind::DroppedPKWrongPort,
    StatKind::DataQueueLen, StatKind::PassedUpPk, StatKind::RcvdPKFromHL,
    StatKind::RcvdPKFromLL, StatKind::SentDownPK, StatKind::DropPKByQueue,
    StatKind::Snir,         StatKind::Throughput,
};

std::string to_string(StatKind s);
StatKind parse_stat(const std::string& s);

struct VectorSample {
    NodeId node;
    StatKind stat = StatKind::RcvdPK;
    double time = 0.0;
    double value = 0.0;
};

struct RunOutput {
    std::vector<TraceRecord> trace;
    std::vector<VectorSample> vectors;
    double duration = 0.0;
};

}  // namespace satnet::sim
