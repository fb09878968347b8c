#include "satnet/sim/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace satnet::sim {

std::string to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::EndUser: return "EndUser";
        case NodeKind::Satellite: return "Satellite";
        case NodeKind::JamCraft: return "JamCraft";
        case NodeKind::JamUser: return "JamUser";
        case NodeKind::GroundAgent: return "GroundAgent";
    }
    return "?";
}

std::string to_string(const NodeId& node) {
    return to_string(node.kind) + std::to_string(node.index);
}

NodeId parse_node(const std::string& name) {
    static const std::pair<const char*, NodeKind> kinds[] = {
        {"EndUser", NodeKind::EndUser},       {"Satellite", NodeKind::Satellite},
        {"JamCraft", NodeKind::JamCraft},     {"JamUser", NodeKind::JamUser},
        {"GroundAgent", NodeKind::GroundAgent}};
    for (const auto& [prefix, kind] : kinds) {
        const std::size_t n = std::string(prefix).size();
        if (name.rfind(prefix, 0) == 0 && name.size() > n &&
            std::all_of(name.begin() + n, name.end(), [](char c) { return std::isdigit(c); })) {
            return NodeId{std::stoi(name.substr(n)), kind};
        }
    }
    throw DataError("unrecognized node name: " + name);
}

int terminal_zone(int terminal_index) { return terminal_index < 10 ? 1 : 2; }

namespace {

void place_nodes(ScenarioConfig& cfg) {
    cfg.positions.clear();
    cfg.positions["Satellite0"] = {0.0, 1000.0};
    cfg.positions["Satellite1"] = {20000.0, 1000.0};
    cfg.positions["Satellite2"] = {10000.0, 2000.0};
    for (int i = 0; i < cfg.num_terminals; ++i) {
        const double base = terminal_zone(i) == 1 ? 0.0 : 20000.0;
        const int offset = terminal_zone(i) == 1 ? i : i - 10;
        cfg.positions[to_string(NodeId{i, NodeKind::EndUser})] = {base + 100.0 * offset - 450.0, 0.0};
    }
    for (int j = 0; j < cfg.num_jam_crafts; ++j)
        cfg.positions[to_string(NodeId{j, NodeKind::JamCraft})] = {0.0, 900.0};
    for (int j = 0; j < cfg.num_jam_users; ++j)
        cfg.positions[to_string(NodeId{j, NodeKind::JamUser})] = {100.0 * j - 450.0, 60.0};
}

std::vector<int> iota_channels(int first, int last) {
    std::vector<int> v;
    for (int c = first; c <= last; ++c) v.push_back(c);
    return v;
}

}  // namespace

ScenarioConfig default_config(int scenario_id) {
    ScenarioConfig cfg;
    cfg.scenario_id = scenario_id;
    cfg.channels_zone1 = iota_channels(0, 10);
    cfg.channels_zone2 = iota_channels(10, 19);
    cfg.channels_jam = iota_channels(0, 10);
    switch (scenario_id) {
        case 1:
            cfg.duration = 90.0;
            break;
        case 2:
            cfg.duration = 33.0;
            cfg.affected_terminals = {0, 1, 2, 3, 4, 5};
            cfg.malicious_src_port = 2001;
            cfg.malicious_dst_port = 2002;
            break;
        case 3:
            cfg.duration = 126.0;
            cfg.affected_terminals = iota_channels(10, 19);
            break;
        case 4:
            cfg.duration = 80.0;
            cfg.num_jam_crafts = 1;
            cfg.num_jam_users = 10;
            // continuous noise: airtime of a 12500 B burst at 1 Mbit/s is
            // exactly the emission period
            cfg.attack_size_range = {12500, 12500};
            cfg.attack_send_interval = {0.1, 0.1};
            break;
        default:
            throw ConfigError("scenario_id: must be 1..4, got " + std::to_string(scenario_id));
    }
    place_nodes(cfg);
    return cfg;
}

void validate(const ScenarioConfig& cfg) {
    auto fail = [](const std::string& field, const std::string& why) {
        throw ConfigError(field + ": " + why);
    };
    if (cfg.scenario_id < 1 || cfg.scenario_id > 4) fail("scenario_id", "must be 1..4");
    if (!(cfg.duration > 0)) fail("duration", "must be > 0");
    if (cfg.num_terminals != 20) fail("number_of_terminals", "must be 20");
    if (cfg.num_satellites != 3) fail("number_of_satellites", "must be 3");

    auto check_int_range = [&](const IntRange& r, const std::string& field) {
        if (r.lo <= 0) fail(field, "lower bound must be > 0");
        if (r.lo > r.hi) fail(field, "lower bound exceeds upper bound");
    };
    auto check_range = [&](const Range& r, const std::string& field) {
        if (r.lo <= 0) fail(field, "lower bound must be > 0");
        if (r.lo > r.hi) fail(field, "lower bound exceeds upper bound");
    };
    check_int_range(cfg.normal_size_range, "normal_size_range");
    check_range(cfg.normal_send_interval, "normal_send_interval");
    if (cfg.scenario_id == 2 || cfg.scenario_id == 4) {
        check_int_range(cfg.attack_size_range, "attack_size_range");
        check_range(cfg.attack_send_interval, "attack_send_interval");
    }

    if (cfg.scenario_id == 2) {
        if (!cfg.malicious_src_port) fail("malicious_src_port", "required for scenario 2");
        if (!cfg.malicious_dst_port) fail("malicious_dst_port", "required for scenario 2");
        if (cfg.affected_terminals.empty()) fail("affected_terminals", "scenario 2 needs flood sources");
    } else {
        if (cfg.malicious_src_port) fail("malicious_src_port", "only valid for scenario 2");
        if (cfg.malicious_dst_port) fail("malicious_dst_port", "only valid for scenario 2");
    }
    if (cfg.scenario_id == 4) {
        if (cfg.num_jam_crafts < 1) fail("jam_crafts", "scenario 4 needs at least one JamCraft");
        if (cfg.num_jam_users < 1) fail("ground_agents", "scenario 4 needs at least one JamUser");
        if (static_cast<int>(cfg.channels_jam.size()) < cfg.num_jam_users)
            fail("channels_jam", "fewer channels than jam users");
    } else {
        if (cfg.num_jam_crafts != 0) fail("jam_crafts", "only valid for scenario 4");
        if (cfg.num_jam_users != 0) fail("ground_agents", "only valid for scenario 4");
    }

    for (int t : cfg.affected_terminals)
        if (t < 0 || t >= cfg.num_terminals) fail("affected_terminals", "terminal index out of range");
    if (static_cast<int>(cfg.channels_zone1.size()) < 10) fail("channels_zone1", "need 10 channels");
    if (static_cast<int>(cfg.channels_zone2.size()) < 10) fail("channels_zone2", "need 10 channels");

    if (!(cfg.noise_floor > 0)) fail("noise_floor", "must be > 0");
    if (!(cfg.snir_success_threshold > 0)) fail("snir_threshold", "must be > 0");
    if (!(cfg.stat_sample_interval > 0)) fail("stat_sample_interval", "must be > 0");
    if (!(cfg.link_bitrate > 0)) fail("link_bitrate", "must be > 0");
    if (cfg.queue_capacity < 1) fail("queue_capacity", "must be >= 1");
    if (!(cfg.distance_epsilon > 0)) fail("distance_epsilon", "must be > 0");
    if (cfg.benign_src_ports.empty()) fail("benign_src_ports", "must not be empty");
    if (cfg.benign_dst_ports.empty()) fail("benign_dst_ports", "must not be empty");

    // every node must have a position
    auto need_pos = [&](const std::string& name) {
        if (!cfg.positions.count(name)) fail("position." + name, "missing");
    };
    for (int i = 0; i < cfg.num_terminals; ++i) need_pos(to_string(NodeId{i, NodeKind::EndUser}));
    for (int s = 0; s < cfg.num_satellites; ++s) need_pos(to_string(NodeId{s, NodeKind::Satellite}));
    for (int j = 0; j < cfg.num_jam_crafts; ++j) need_pos(to_string(NodeId{j, NodeKind::JamCraft}));
    for (int j = 0; j < cfg.num_jam_users; ++j) need_pos(to_string(NodeId{j, NodeKind::JamUser}));
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::vector<int> parse_int_list(const std::string& v, const std::string& field) {
    std::vector<int> out;
    std::istringstream ss(v);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(trim(tok)));
        } catch (const std::exception&) {
            throw ConfigError(field + ": bad integer '" + tok + "'");
        }
    }
    return out;
}

double parse_double(const std::string& v, const std::string& field) {
    try {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError(field + ": bad number '" + v + "'");
    }
}

Range parse_pair(const std::string& v, const std::string& field) {
    auto parts = parse_int_list(v, field);  // validated as numbers below instead
    std::istringstream ss(v);
    std::string a, b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b)) throw ConfigError(field + ": expected 'lo,hi'");
    (void)parts;
    return Range{parse_double(trim(a), field), parse_double(trim(b), field)};
}

}  // namespace

void apply_config_line(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
    auto as_int = [&](const std::string& f) { return static_cast<int>(parse_double(value, f)); };
    if (key == "scenario_id") cfg.scenario_id = as_int(key);
    else if (key == "duration") cfg.duration = parse_double(value, key);
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(std::stoull(value));
    else if (key == "number_of_terminals") cfg.num_terminals = as_int(key);
    else if (key == "number_of_satellites") cfg.num_satellites = as_int(key);
    else if (key == "affected_terminals") cfg.affected_terminals = parse_int_list(value, key);
    else if (key == "benign_src_ports") cfg.benign_src_ports = parse_int_list(value, key);
    else if (key == "benign_dst_ports") cfg.benign_dst_ports = parse_int_list(value, key);
    else if (key == "malicious_src_port") cfg.malicious_src_port = as_int(key);
    else if (key == "malicious_dst_port") cfg.malicious_dst_port = as_int(key);
    else if (key == "normal_size_range") {
        Range r = parse_pair(value, key);
        cfg.normal_size_range = {static_cast<int>(r.lo), static_cast<int>(r.hi)};
    } else if (key == "attack_size_range") {
        Range r = parse_pair(value, key);
        cfg.attack_size_range = {static_cast<int>(r.lo), static_cast<int>(r.hi)};
    } else if (key == "normal_send_interval") cfg.normal_send_interval = parse_pair(value, key);
    else if (key == "attack_send_interval") cfg.attack_send_interval = parse_pair(value, key);
    else if (key == "path_loss_default") cfg.path_loss_exponent_default = parse_double(value, key);
    else if (key == "path_loss_affected") cfg.path_loss_exponent_affected = parse_double(value, key);
    else if (key == "satellite_tx_power") cfg.tx_power_satellite = parse_double(value, key);
    else if (key == "enduser_tx_power") cfg.tx_power_enduser = parse_double(value, key);
    else if (key == "jamcraft_tx_power") cfg.tx_power_jamcraft = parse_double(value, key);
    else if (key == "jamuser_tx_power") cfg.tx_power_jamuser = parse_double(value, key);
    else if (key == "jam_crafts") cfg.num_jam_crafts = as_int(key);
    else if (key == "ground_agents") cfg.num_jam_users = as_int(key);
    else if (key == "channels_zone1") cfg.channels_zone1 = parse_int_list(value, key);
    else if (key == "channels_zone2") cfg.channels_zone2 = parse_int_list(value, key);
    else if (key == "channels_jam") cfg.channels_jam = parse_int_list(value, key);
    else if (key == "isl_channels") {
        auto v = parse_int_list(value, key);
        if (v.size() != 2) throw ConfigError("isl_channels: expected two channels");
        cfg.isl_channel_a = v[0];
        cfg.isl_channel_b = v[1];
    } else if (key == "terminal_frequency") cfg.terminal_frequency_hz = parse_double(value, key);
    else if (key == "isl_frequency") cfg.isl_frequency_hz = parse_double(value, key);
    else if (key == "noise_floor") cfg.noise_floor = parse_double(value, key);
    else if (key == "snir_threshold") cfg.snir_success_threshold = parse_double(value, key);
    else if (key == "stat_sample_interval") cfg.stat_sample_interval = parse_double(value, key);
    else if (key == "link_bitrate") cfg.link_bitrate = parse_double(value, key);
    else if (key == "queue_capacity") cfg.queue_capacity = as_int(key);
    else if (key == "distance_epsilon") cfg.distance_epsilon = parse_double(value, key);
    else if (key == "max_events") cfg.max_events = static_cast<std::uint64_t>(std::stoull(value));
    else if (key.rfind("position.", 0) == 0) {
        Range r = parse_pair(value, key);
        cfg.positions[key.substr(9)] = Vec2{r.lo, r.hi};
    } else {
        throw ConfigError("unknown configuration key: " + key);
    }
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);

    // first pass finds the scenario so defaults match it
    int scenario = 1;
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "scenario_id") scenario = static_cast<int>(parse_double(value, key));
        entries.emplace_back(std::move(key), std::move(value));
    }

    ScenarioConfig cfg = default_config(scenario);
    for (const auto& [key, value] : entries) apply_config_line(cfg, key, value);
    // custom jam node counts need positions for the extra nodes
    for (int j = 0; j < cfg.num_jam_crafts; ++j) {
        std::string name = to_string(NodeId{j, NodeKind::JamCraft});
        if (!cfg.positions.count(name)) cfg.positions[name] = {0.0, 900.0};
    }
    for (int j = 0; j < cfg.num_jam_users; ++j) {
        std::string name = to_string(NodeId{j, NodeKind::JamUser});
        if (!cfg.positions.count(name)) cfg.positions[name] = {100.0 * j - 450.0, 60.0};
    }
    validate(cfg);
    return cfg;
}

}  // namespace satnet::sim
