#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace satnet {

// Invalid configuration or usage. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data. CLI exit code 3.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite values or other numeric failures. CLI exit code 4.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Fatal condition inside the event loop (e.g. event budget exhausted).
class SimError : public std::runtime_error {
public:
    explicit SimError(const std::string& msg) : std::runtime_error(msg) {}
};

std::uint64_t splitmix64(std::uint64_t x);

// Deterministic RNG. The engine sequence is pinned by the standard and the
// uniform mappings below avoid the implementation-defined std distributions,
// so outputs are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    static Rng for_stream(std::uint64_t seed, std::uint64_t stream) {
        return Rng(splitmix64(seed + 0x9E3779B97F4A7C15ull * (stream + 1)));
    }

    std::uint64_t next_u64() { return eng_(); }

    // [0, 1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    // [0, n)
    std::uint64_t bounded(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

    // [lo, hi] inclusive
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

// Fixed-point formatting, e.g. format_fixed(1.5, 6) == "1.500000".
std::string format_fixed(double v, int precision);

// Shortest form that round-trips a double through text.
std::string format_g17(double v);

std::string format_general(double v, int significant);

}  // namespace satnet
