#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "satnet/common.hpp"

namespace satnet::sim {

enum class NodeKind { EndUser, Satellite, JamCraft, JamUser, GroundAgent };

struct NodeId {
    int index = 0;
    NodeKind kind = NodeKind::EndUser;

    friend bool operator==(const NodeId&, const NodeId&) = default;
    friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

std::string to_string(NodeKind kind);
std::string to_string(const NodeId& node);
NodeId parse_node(const std::string& name);

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Range {
    double lo = 0.0;
    double hi = 0.0;
};

struct IntRange {
    int lo = 0;
    int hi = 0;
};

// Full parameterization of one traffic scenario.
//  1: benign UDP streams between terminals
//  2: UDP flood from infected terminals across the relay satellite
//  3: rain disruption (raised path loss) on the affected terminals
//  4: channel jamming of the zone-1 satellite by a craft and ground agents
struct ScenarioConfig {
    int scenario_id = 1;
    double duration = 90.0;  // seconds
    std::uint64_t seed = 1;

    // flood sources (scenario 2) or rain victims (scenario 3)
    std::vector<int> affected_terminals;

    std::vector<int> benign_src_ports{5555, 3099, 2099};
    std::vector<int> benign_dst_ports{2000, 9901, 9902};
    std::optional<int> malicious_src_port;
    std::optional<int> malicious_dst_port;

    IntRange normal_size_range{40, 635};       // bytes
    IntRange attack_size_range{4000, 5000};    // bytes
    Range normal_send_interval{0.1, 0.4};      // seconds
    Range attack_send_interval{0.02, 0.05};    // seconds

    double path_loss_exponent_default = 2.0;
    double path_loss_exponent_affected = 4.0;

    double tx_power_satellite = 7.0;   // watts
    double tx_power_enduser = 7.0;
    double tx_power_jamcraft = 12.0;
    double tx_power_jamuser = 20.0;

    int num_terminals = 20;  // indices 0..19; zone 1 is 0..9, zone 2 is 10..19
    int num_satellites = 3;  // 0 covers zone 1, 1 covers zone 2, 2 relays
    int num_jam_crafts = 0;
    int num_jam_users = 0;   // ground agents

    // terminal i uses channels_zoneN[offset]; spare entries beyond the
    // terminal count stay unused
    std::vector<int> channels_zone1;  // default 0..10
    std::vector<int> channels_zone2;  // default 10..19
    std::vector<int> channels_jam;    // default 0..10
    int isl_channel_a = 30;           // zone-1 satellite <-> relay
    int isl_channel_b = 31;           // relay <-> zone-2 satellite

    double terminal_frequency_hz = 1616e6;
    double isl_frequency_hz = 23180e6;

    // 2-D coordinates in meters, keyed by node name; filled by
    // default_config and overridable from file/tests
    std::map<std::string, Vec2> positions;

    double noise_floor = 1e-10;          // watts
    double snir_success_threshold = 10.0;
    double stat_sample_interval = 0.1;   // seconds

    double link_bitrate = 1e6;   // bit/s; transmission airtime = size*8/bitrate
    int queue_capacity = 100;    // packets per node transmit queue
    double distance_epsilon = 1.0;
    std::uint64_t max_events = 50'000'000;
};

// Table-driven defaults for each scenario, including node positions.
ScenarioConfig default_config(int scenario_id);

// Throws ConfigError naming the offending field.
void validate(const ScenarioConfig& cfg);

// Flat key = value file; '#' starts a comment; unknown keys are errors.
// Parsing starts from default_config(scenario_id found in the file).
ScenarioConfig load_config_file(const std::string& path);
void apply_config_line(ScenarioConfig& cfg, const std::string& key, const std::string& value);

int terminal_zone(int terminal_index);  // 1 or 2

}  // namespace satnet::sim
