#pragma once

#include <span>

#include "satnet/sim/topology.hpp"
#include "satnet/sim/types.hpp"

namespace satnet::sim {

struct Transmission {
    double power_w = 0.0;
    double distance_m = 0.0;
    double path_loss_exponent = 2.0;
};

// SNIR = (P/d^a) / (N0 + sum_i Pi/di^ai). Distances below the epsilon are
// clamped to it. A zero denominator (no noise, no interference) is an error.
double compute_snir(const Transmission& signal, std::span<const Transmission> interferers,
                    double noise_floor_w, double distance_epsilon = 1.0);

// Deterministic single-threaded event-driven run: identical (config, seed)
// gives byte-identical outputs.
RunOutput run_scenario(const ScenarioConfig& cfg);

// Concatenates runs on one timeline: run k is shifted by offsets[k] and its
// packet ids are rebased so ids stay unique.
RunOutput merge_runs(std::span<const RunOutput> runs, std::span<const double> offsets);

}  // namespace satnet::sim
