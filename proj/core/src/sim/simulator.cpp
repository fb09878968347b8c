#include "satnet/sim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>
#include <set>

namespace satnet::sim {

double compute_snir(const Transmission& signal, std::span<const Transmission> interferers,
                    double noise_floor_w, double distance_epsilon) {
    auto received = [&](const Transmission& t) {
        const double d = std::max(t.distance_m, distance_epsilon);
        return t.power_w / std::pow(d, t.path_loss_exponent);
    };
    double denom = noise_floor_w;
    for (const auto& i : interferers) denom += received(i);
    if (!(denom > 0.0))
        throw NumericError("compute_snir: zero noise and no interference");
    return received(signal) / denom;
}

namespace {

std::string to_string_packet(PacketType t) { return t == PacketType::Udp ? "UDP" : "ICMP"; }

struct Packet {
    std::int64_t id = 0;
    NodeId origin;
    NodeId dst;
    int port_src = 0;
    int port_dst = 0;
    PacketType type = PacketType::Udp;
    int size = 0;
    int hops_done = 0;
};

enum class EventKind { FlowEmit, StartTx, EndTx, Sample };

struct Event {
    double time = 0.0;
    std::uint64_t seq = 0;
    EventKind kind = EventKind::FlowEmit;
    std::uint32_t a = 0;  // flow index / node index / transmission index / sample tick

    bool operator>(const Event& o) const {
        if (time != o.time) return time > o.time;
        return seq > o.seq;
    }
};

struct FlowSpec {
    NodeId src;
    NodeId dst;
    int port_src = 0;
    int port_dst = 0;
    PacketType type = PacketType::Udp;
    IntRange size_range;
    Range interval;
    bool jam_cycle = false;  // craft round-robins over jam peers
    Rng rng{0};
    std::uint64_t emitted = 0;
};

struct ActiveTx {
    NodeId tx;
    Vec2 tx_pos;
    double power = 0.0;
    double end = 0.0;
};

struct InFlight {
    std::uint32_t packet = 0;
    NodeId sender;
    NodeId receiver;
    Outcome outcome = Outcome::Delivered;
    double snir = 0.0;
};

// counter stats tracked per node, in StatKind order (snir/throughput handled apart)
constexpr int kCounterStats = 9;

struct NodeState {
    std::deque<std::uint32_t> queue;
    bool busy = false;
    std::array<std::int64_t, kCounterStats> counters{};
    std::array<std::int64_t, kCounterStats> sampled{};
    double snir_sum = 0.0;
    std::int64_t snir_count = 0;
    double delivered_bits = 0.0;
};

class Engine {
public:
    explicit Engine(const ScenarioConfig& cfg) : cfg_(cfg), topo_(build_topology(cfg)) {}

    RunOutput run() {
        setup_flows();
        if (cfg_.stat_sample_interval < cfg_.duration) schedule(cfg_.stat_sample_interval, EventKind::Sample, 1);
        loop();
        flush_samples(cfg_.duration);
        out_.duration = cfg_.duration;
        return std::move(out_);
    }

private:
    const ScenarioConfig& cfg_;
    Topology topo_;
    RunOutput out_;
    std::priority_queue<Event, std::vector<Event>, std::greater<>> events_;
    std::uint64_t seq_ = 0;
    std::uint64_t processed_ = 0;
    double now_ = 0.0;
    double last_sample_time_ = 0.0;

    std::vector<FlowSpec> flows_;
    std::vector<Packet> packets_;
    std::vector<std::uint32_t> packet_free_;
    std::vector<InFlight> inflight_;
    std::vector<std::uint32_t> inflight_free_;
    std::map<NodeId, NodeState> node_state_;
    std::map<int, std::vector<ActiveTx>> active_;  // by channel
    std::int64_t next_packet_id_ = 0;

    NodeState& state(const NodeId& id) { return node_state_[id]; }

    void schedule(double t, EventKind kind, std::uint32_t a) {
        events_.push(Event{t, seq_++, kind, a});
    }

    std::uint32_t alloc_packet(const Packet& p) {
        if (!packet_free_.empty()) {
            std::uint32_t idx = packet_free_.back();
            packet_free_.pop_back();
            packets_[idx] = p;
            return idx;
        }
        packets_.push_back(p);
        return static_cast<std::uint32_t>(packets_.size() - 1);
    }
    void free_packet(std::uint32_t idx) { packet_free_.push_back(idx); }

    void setup_flows() {
        Rng setup = Rng::for_stream(cfg_.seed, 1);
        // one benign stream per terminal toward a random peer
        for (int i = 0; i < cfg_.num_terminals; ++i) {
            FlowSpec f;
            f.src = {i, NodeKind::EndUser};
            int peer = static_cast<int>(setup.bounded(cfg_.num_terminals - 1));
            if (peer >= i) ++peer;
            f.dst = {peer, NodeKind::EndUser};
            f.port_src = cfg_.benign_src_ports[setup.bounded(cfg_.benign_src_ports.size())];
            f.port_dst = cfg_.benign_dst_ports[setup.bounded(cfg_.benign_dst_ports.size())];
            f.size_range = cfg_.normal_size_range;
            f.interval = cfg_.normal_send_interval;
            f.rng = Rng::for_stream(cfg_.seed, 1000 + i);
            flows_.push_back(f);
        }
        if (cfg_.scenario_id == 2) {
            // infected terminals flood a cross-zone peer so traffic crosses the relay
            for (int t : cfg_.affected_terminals) {
                FlowSpec f;
                f.src = {t, NodeKind::EndUser};
                const int peer = terminal_zone(t) == 1 ? 10 + (t % 10) : t % 10;
                f.dst = {peer, NodeKind::EndUser};
                f.port_src = *cfg_.malicious_src_port;
                f.port_dst = *cfg_.malicious_dst_port;
                f.size_range = cfg_.attack_size_range;
                f.interval = cfg_.attack_send_interval;
                f.rng = Rng::for_stream(cfg_.seed, 2000 + t);
                flows_.push_back(f);
            }
        }
        if (cfg_.scenario_id == 4) {
            for (int j = 0; j < cfg_.num_jam_users; ++j) {
                FlowSpec f;
                f.src = {j, NodeKind::JamUser};
                f.dst = {0, NodeKind::JamCraft};
                f.port_src = 1;
                f.port_dst = 1;
                f.size_range = cfg_.attack_size_range;
                f.interval = cfg_.attack_send_interval;
                f.rng = Rng::for_stream(cfg_.seed, 3000 + j);
                flows_.push_back(f);
            }
            FlowSpec craft;
            craft.src = {0, NodeKind::JamCraft};
            craft.dst = {0, NodeKind::JamUser};
            craft.jam_cycle = true;
            craft.port_src = 1;
            craft.port_dst = 1;
            craft.size_range = cfg_.attack_size_range;
            craft.interval = cfg_.attack_send_interval;
            craft.rng = Rng::for_stream(cfg_.seed, 3999);
            flows_.push_back(craft);
        }
        for (std::uint32_t i = 0; i < flows_.size(); ++i) {
            const bool jammer = flows_[i].src.kind == NodeKind::JamUser ||
                                flows_[i].src.kind == NodeKind::JamCraft;
            const double first = jammer ? 0.0
                                        : flows_[i].rng.uniform(flows_[i].interval.lo,
                                                                flows_[i].interval.hi);
            if (first < cfg_.duration) schedule(first, EventKind::FlowEmit, i);
        }
    }

    void loop() {
        while (!events_.empty()) {
            const Event ev = events_.top();
            events_.pop();
            now_ = ev.time;
            if (++processed_ > cfg_.max_events)
                throw SimError("event budget exhausted at t=" + format_fixed(now_, 6));
            switch (ev.kind) {
                case EventKind::FlowEmit: on_emit(ev.a); break;
                case EventKind::StartTx: on_start_tx(ev.a); break;
                case EventKind::EndTx: on_end_tx(ev.a); break;
                case EventKind::Sample: on_sample(ev.a); break;
            }
        }
    }

    void on_emit(std::uint32_t flow_idx) {
        FlowSpec& f = flows_[flow_idx];
        Packet p;
        p.id = next_packet_id_++;
        p.origin = f.src;
        p.dst = f.dst;
        if (f.jam_cycle) p.dst = {static_cast<int>(f.emitted % cfg_.num_jam_users), NodeKind::JamUser};
        p.port_src = f.port_src;
        p.port_dst = f.port_dst;
        p.type = f.type;
        p.size = static_cast<int>(f.rng.uniform_int(f.size_range.lo, f.size_range.hi));
        f.emitted++;
        enqueue(f.src, alloc_packet(p), true);
        const double next = now_ + f.rng.uniform(f.interval.lo, f.interval.hi);
        if (next < cfg_.duration) schedule(next, EventKind::FlowEmit, flow_idx);
    }

    void enqueue(const NodeId& node, std::uint32_t pkt_idx, bool from_app = false) {
        NodeState& st = state(node);
        const Packet& p = packets_[pkt_idx];
        if (from_app) st.counters[static_cast<int>(StatKind::RcvdPKFromHL)]++;
        st.counters[static_cast<int>(StatKind::SentDownPK)]++;
        if (static_cast<int>(st.queue.size()) >= cfg_.queue_capacity) {
            st.counters[static_cast<int>(StatKind::DropPKByQueue)]++;
            emit_record(node, topo_.next_hop(node, p.dst), p, Outcome::DroppedQueue, 0.0, 0.0);
            free_packet(pkt_idx);
            return;
        }
        st.queue.push_back(pkt_idx);
        if (!st.busy) schedule(now_, EventKind::StartTx, node_event_id(node));
    }

    // node identity packed into the event payload
    std::vector<NodeId> node_by_event_;
    std::map<NodeId, std::uint32_t> event_by_node_;
    std::uint32_t node_event_id(const NodeId& n) {
        auto it = event_by_node_.find(n);
        if (it != event_by_node_.end()) return it->second;
        const auto id = static_cast<std::uint32_t>(node_by_event_.size());
        node_by_event_.push_back(n);
        event_by_node_[n] = id;
        return id;
    }

    double path_loss_exponent(const NodeId& a, const NodeId& b) const {
        if (cfg_.scenario_id != 3) return cfg_.path_loss_exponent_default;
        auto affected = [&](const NodeId& n) {
            return n.kind == NodeKind::EndUser &&
                   std::find(cfg_.affected_terminals.begin(), cfg_.affected_terminals.end(),
                             n.index) != cfg_.affected_terminals.end();
        };
        return (affected(a) || affected(b)) ? cfg_.path_loss_exponent_affected
                                            : cfg_.path_loss_exponent_default;
    }

    static double distance(const Vec2& a, const Vec2& b) {
        return std::hypot(a.x - b.x, a.y - b.y);
    }

    bool accepts(const NodeId& node, const Packet& p) const {
        if (p.type == PacketType::Icmp) return true;
        if (node.kind == NodeKind::EndUser)
            return std::find(cfg_.benign_dst_ports.begin(), cfg_.benign_dst_ports.end(),
                             p.port_dst) != cfg_.benign_dst_ports.end();
        return true;
    }

    void on_start_tx(std::uint32_t node_ev) {
        const NodeId node = node_by_event_[node_ev];
        NodeState& st = state(node);
        if (st.busy || st.queue.empty()) return;
        const std::uint32_t pkt_idx = st.queue.front();
        st.queue.pop_front();
        Packet& p = packets_[pkt_idx];

        const double dur = static_cast<double>(p.size) * 8.0 / cfg_.link_bitrate;
        if (now_ + dur > cfg_.duration) {
            // would outlive the horizon; never starts
            free_packet(pkt_idx);
            if (!st.queue.empty()) schedule(now_, EventKind::StartTx, node_ev);
            return;
        }

        const NodeId nh = topo_.next_hop(node, p.dst);
        const Link& link = topo_.link_between(node, nh);
        const NodeInfo& tx_info = topo_.info(node);
        const NodeInfo& rx_info = topo_.info(nh);

        const double alpha = path_loss_exponent(node, nh);
        std::vector<Transmission> interferers;
        auto& act = active_[link.channel];
        std::erase_if(act, [&](const ActiveTx& t) { return t.end <= now_; });
        for (const ActiveTx& t : act) {
            if (t.tx == nh) continue;  // full duplex: own transmission does not self-interfere
            interferers.push_back(Transmission{t.power, distance(t.tx_pos, rx_info.position),
                                               path_loss_exponent(t.tx, nh)});
        }
        const double snir =
            compute_snir(Transmission{tx_info.tx_power, distance(tx_info.position, rx_info.position), alpha},
                         interferers, cfg_.noise_floor, cfg_.distance_epsilon);

        Outcome outcome;
        if (snir < cfg_.snir_success_threshold) outcome = Outcome::DroppedSnir;
        else if (nh == p.dst && !accepts(nh, p)) outcome = Outcome::DroppedWrongPort;
        else outcome = Outcome::Delivered;

        emit_record(node, nh, p, outcome, snir, dur);
        st.counters[static_cast<int>(StatKind::SentPK)]++;
        p.hops_done++;
        st.busy = true;
        act.push_back(ActiveTx{node, tx_info.position, tx_info.tx_power, now_ + dur});

        std::uint32_t tx_idx;
        if (!inflight_free_.empty()) {
            tx_idx = inflight_free_.back();
            inflight_free_.pop_back();
            inflight_[tx_idx] = InFlight{pkt_idx, node, nh, outcome, snir};
        } else {
            inflight_.push_back(InFlight{pkt_idx, node, nh, outcome, snir});
            tx_idx = static_cast<std::uint32_t>(inflight_.size() - 1);
        }
        schedule(now_ + dur, EventKind::EndTx, tx_idx);
    }

    void on_end_tx(std::uint32_t tx_idx) {
        const InFlight fl = inflight_[tx_idx];
        inflight_free_.push_back(tx_idx);
        Packet& p = packets_[fl.packet];
        NodeState& rx = state(fl.receiver);

        rx.snir_sum += fl.snir;
        rx.snir_count++;
        if (fl.outcome != Outcome::DroppedSnir) {
            rx.counters[static_cast<int>(StatKind::RcvdPKFromLL)]++;
            if (fl.outcome == Outcome::Delivered) {
                rx.counters[static_cast<int>(StatKind::RcvdPK)]++;
                rx.delivered_bits += static_cast<double>(p.size) * 8.0;
                if (fl.receiver == p.dst) {
                    rx.counters[static_cast<int>(StatKind::PassedUpPk)]++;
                    free_packet(fl.packet);
                } else {
                    enqueue(fl.receiver, fl.packet);
                }
            } else {  // DroppedWrongPort at the destination
                rx.counters[static_cast<int>(StatKind::DroppedPKWrongPort)]++;
                send_unreachable(fl.receiver, p);
                free_packet(fl.packet);
            }
        } else {
            free_packet(fl.packet);
        }

        NodeState& tx = state(fl.sender);
        tx.busy = false;
        if (!tx.queue.empty()) schedule(now_, EventKind::StartTx, node_event_id(fl.sender));
    }

    void send_unreachable(const NodeId& from, const Packet& offending) {
        Packet icmp;
        icmp.id = next_packet_id_++;
        icmp.origin = from;
        icmp.dst = offending.origin;
        icmp.port_src = 0;
        icmp.port_dst = 0;
        icmp.type = PacketType::Icmp;
        icmp.size = 56;
        enqueue(from, alloc_packet(icmp), true);
    }

    void emit_record(const NodeId& sender, const NodeId& receiver, const Packet& p,
                     Outcome outcome, double snir, double dur) {
        TraceRecord r;
        r.time = now_;
        r.packet_id = p.id;
        r.sender = sender;
        r.receiver = receiver;
        r.ip_src = synthetic_ip(p.origin);
        r.ip_dst = synthetic_ip(p.dst);
        r.port_src = p.port_src;
        r.port_dst = p.port_dst;
        const Link& link = topo_.link_between(sender, receiver);
        r.channel = link.channel;
        r.frequency = link.frequency_hz;
        r.size = p.size;
        r.packet_type = p.type;
        r.hop_index = p.hops_done;
        r.outcome = outcome;
        r.snir = snir;
        r.duration = dur;
        out_.trace.push_back(std::move(r));
    }

    void on_sample(std::uint32_t tick) {
        const double t = static_cast<double>(tick) * cfg_.stat_sample_interval;
        flush_samples(t);
        const double next = static_cast<double>(tick + 1) * cfg_.stat_sample_interval;
        if (next < cfg_.duration - 1e-12) schedule(next, EventKind::Sample, tick + 1);
    }

    void flush_samples(double t) {
        const double span = t - last_sample_time_;
        if (span <= 0) return;
        for (const NodeInfo& n : topo_.nodes()) {
            NodeState& st = state(n.id);
            for (StatKind stat : kAllStats) {
                double value = 0.0;
                const int idx = static_cast<int>(stat);
                if (stat == StatKind::Snir) {
                    value = st.snir_count > 0 ? st.snir_sum / static_cast<double>(st.snir_count) : 0.0;
                } else if (stat == StatKind::Throughput) {
                    value = st.delivered_bits / span;
                } else if (stat == StatKind::DataQueueLen) {
                    value = static_cast<double>(st.queue.size());
                } else {
                    value = static_cast<double>(st.counters[idx] - st.sampled[idx]);
                    st.sampled[idx] = st.counters[idx];
                }
                out_.vectors.push_back(VectorSample{n.id, stat, t, value});
            }
            st.snir_sum = 0.0;
            st.snir_count = 0;
            st.delivered_bits = 0.0;
        }
        last_sample_time_ = t;
    }
};

}  // namespace

RunOutput run_scenario(const ScenarioConfig& cfg) {
    validate(cfg);
    Engine engine(cfg);
    return engine.run();
}

RunOutput merge_runs(std::span<const RunOutput> runs, std::span<const double> offsets) {
    if (runs.size() != offsets.size()) throw DataError("merge_runs: runs/offsets size mismatch");
    RunOutput out;
    std::int64_t id_base = 0;
    for (std::size_t k = 0; k < runs.size(); ++k) {
        std::int64_t max_id = -1;
        for (TraceRecord r : runs[k].trace) {
            r.time += offsets[k];
            max_id = std::max(max_id, r.packet_id);
            r.packet_id += id_base;
            out.trace.push_back(std::move(r));
        }
        for (VectorSample s : runs[k].vectors) {
            s.time += offsets[k];
            out.vectors.push_back(s);
        }
        id_base += max_id + 1;
        out.duration = std::max(out.duration, offsets[k] + runs[k].duration);
    }
    std::stable_sort(out.trace.begin(), out.trace.end(),
                     [](const TraceRecord& a, const TraceRecord& b) { return a.time < b.time; });
    std::stable_sort(out.vectors.begin(), out.vectors.end(),
                     [](const VectorSample& a, const VectorSample& b) { return a.time < b.time; });
    return out;
}

}  // namespace satnet::sim
