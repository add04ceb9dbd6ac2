#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>

#include "actcheck/rng.hpp"

namespace actcheck {

// A 64-bit IEEE-754 double viewed as sign / 11-bit exponent / 52-bit
// significand. Bit 0 is the least-significant significand bit, bit 63 the
// sign bit.
struct FloatWord {
    std::uint64_t raw = 0;

    static FloatWord from_double(double v) { return {std::bit_cast<std::uint64_t>(v)}; }
    double to_double() const { return std::bit_cast<double>(raw); }

    unsigned sign() const { return static_cast<unsigned>(raw >> 63); }
    unsigned exponent() const { return static_cast<unsigned>((raw >> 52) & 0x7FFu); }
    std::uint64_t significand() const { return raw & 0xFFFFFFFFFFFFFull; }

    static FloatWord compose(unsigned sign, unsigned exponent, std::uint64_t significand) {
        return {(static_cast<std::uint64_t>(sign & 1u) << 63) |
                (static_cast<std::uint64_t>(exponent & 0x7FFu) << 52) |
                (significand & 0xFFFFFFFFFFFFFull)};
    }

    bool is_finite() const { return exponent() != 0x7FFu; }

    friend bool operator==(FloatWord a, FloatWord b) { return a.raw == b.raw; }
};

// A set of bit positions in [0, 63], stored as a mask.
class BitIndexSet {
public:
    BitIndexSet() = default;
    BitIndexSet(std::initializer_list<int> indices) {
        for (int i : indices) insert(i);
    }
    static BitIndexSet from_mask(std::uint64_t mask) {
        BitIndexSet s;
        s.mask_ = mask;
        return s;
    }

    void insert(int index) { mask_ |= std::uint64_t{1} << (index & 63); }
    bool contains(int index) const { return (mask_ >> (index & 63)) & 1u; }
    int size() const { return std::popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    std::uint64_t mask() const { return mask_; }

    friend bool operator==(const BitIndexSet&, const BitIndexSet&) = default;

private:
    std::uint64_t mask_ = 0;
};

inline FloatWord flip_bits(FloatWord w, const BitIndexSet& bits) {
    return {w.raw ^ bits.mask()};
}

inline FloatWord stuck_at(FloatWord w, const BitIndexSet& bits, int level) {
    return level ? FloatWord{w.raw | bits.mask()} : FloatWord{w.raw & ~bits.mask()};
}

// Uniform 64-bit pattern, resampled until it encodes a finite double.
// After 64 failed draws the exponent field is forced below all-ones.
inline FloatWord random_finite(RandomStream& rng) {
    std::uint64_t w = 0;
    for (int attempt = 0; attempt < 64; ++attempt) {
        w = rng.next();
        if (((w >> 52) & 0x7FFu) != 0x7FFu) return {w};
    }
    return {w & ~(std::uint64_t{1} << 62)};
}

}  // namespace actcheck
