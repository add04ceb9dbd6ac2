#pragma once

#include <cstdint>

namespace actcheck {

// splitmix64; used everywhere so that results are identical across
// platforms and standard-library implementations.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64(state_); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    // Unbiased uniform integer in [0, n).
    std::uint32_t below(std::uint32_t n) {
        const std::uint64_t threshold = -std::uint64_t(n) % n;
        for (;;) {
            std::uint64_t v = next();
            if (v >= threshold) return static_cast<std::uint32_t>(v % n);
        }
    }

private:
    std::uint64_t state_;
};

// Counter-based per-run seed: run i's stream does not depend on execution
// order or worker assignment.
inline std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t run_index) {
    std::uint64_t s = master_seed ^ (run_index * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull);
    splitmix64(s);
    return s;
}

}  // namespace actcheck
