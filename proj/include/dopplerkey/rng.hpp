#pragma once

// Counter-based stream derivation on top of std::mt19937_64.
//
// Every independent unit of randomness (one Monte Carlo trial, one duration)
// gets its own engine seeded from (master_seed, stream_index) through a
// splitmix64-style avalanche.  Results are therefore independent of thread
// count and of the order in which trials are executed.
//
// Variate generation (uniform, normal, exponential) is implemented here
// rather than via std::*_distribution so that output is bit-identical across
// standard library implementations.

#include <cstdint>
#include <cmath>
#include <random>
#include <stdexcept>

namespace dopplerkey {

constexpr std::uint64_t kGolden64 = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix64_finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Map (master seed, stream index) to a well-mixed 64-bit engine seed.
constexpr std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = splitmix64_finalize(master + kGolden64 * (stream + 1));
    return splitmix64_finalize(z + master);
}

class RandomStream {
public:
    RandomStream(std::uint64_t master, std::uint64_t stream)
        : engine_(derive_stream_seed(master, stream)) {}

    explicit RandomStream(std::uint64_t raw_seed) : engine_(raw_seed) {}

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; one spare value is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    // Exponential with the given mean, by inversion.
    double exponential(double mean) {
        if (!(mean > 0.0)) throw std::domain_error("exponential mean must be positive");
        return -mean * std::log(1.0 - uniform());
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace dopplerkey
