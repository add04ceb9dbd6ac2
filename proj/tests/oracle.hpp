#pragma once

// Test-only reference computations, kept independent of the library's
// evaluation path: direct powers and factorials in extended precision.

#include <cmath>
#include <cstdint>
#include <bit>

namespace oracle {

// x^k / k! evaluated directly in long double.
inline long double term_direct(double x, int k) {
    long double num = 1.0L;
    long double den = 1.0L;
    for (int i = 1; i <= k; ++i) {
        num *= static_cast<long double>(x);
        den *= static_cast<long double>(i);
    }
    return num / den;
}

inline long double exp_ref(double x) { return std::exp(static_cast<long double>(x)); }

inline long double sigmoid_ref(double x) {
    return 1.0L / (1.0L + std::exp(-static_cast<long double>(x)));
}

inline long double tanh_ref(double x) { return std::tanh(static_cast<long double>(x)); }

// Distance in representable doubles between two finite values of the same
// sign regime; companion for "within N ulp" assertions.
inline std::uint64_t ulp_distance(double a, double b) {
    auto key = [](double v) {
        const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
        return (bits >> 63) ? (0x8000000000000000ull - (bits & 0x7FFFFFFFFFFFFFFFull))
                            : (0x8000000000000000ull + bits);
    };
    const std::uint64_t ka = key(a);
    const std::uint64_t kb = key(b);
    return ka > kb ? ka - kb : kb - ka;
}

inline std::uint64_t ulp_distance_f(float a, float b) {
    auto key = [](float v) {
        const std::uint32_t bits = std::bit_cast<std::uint32_t>(v);
        return (bits >> 31) ? (0x80000000ull - (bits & 0x7FFFFFFFull))
                            : (0x80000000ull + bits);
    };
    const std::uint64_t ka = key(a);
    const std::uint64_t kb = key(b);
    return ka > kb ? ka - kb : kb - ka;
}

}  // namespace oracle
