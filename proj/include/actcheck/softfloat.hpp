#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace actcheck::softfloat {

// Bit-level model of an IEEE-754 single-precision datapath: combinational
// multiplier, Newton-Raphson divider and a dual-mode multi-operand adder.
// Denormals flush to zero on input and output; results round to nearest-even.
struct Float32Word {
    std::uint32_t raw = 0;

    static Float32Word from_float(float v) { return {std::bit_cast<std::uint32_t>(v)}; }
    float to_float() const { return std::bit_cast<float>(raw); }

    unsigned sign() const { return raw >> 31; }
    unsigned exponent() const { return (raw >> 23) & 0xFFu; }
    std::uint32_t significand() const { return raw & 0x7FFFFFu; }

    static Float32Word compose(unsigned sign, unsigned exponent, std::uint32_t significand) {
        return {((sign & 1u) << 31) | ((exponent & 0xFFu) << 23) | (significand & 0x7FFFFFu)};
    }

    bool is_nan() const { return exponent() == 0xFF && significand() != 0; }
    bool is_inf() const { return exponent() == 0xFF && significand() == 0; }
    bool is_zero_or_denormal() const { return exponent() == 0; }

    friend bool operator==(Float32Word a, Float32Word b) { return a.raw == b.raw; }
};

inline Float32Word f32_negate(Float32Word a) { return {a.raw ^ 0x80000000u}; }

Float32Word f32_mul(Float32Word a, Float32Word b);
Float32Word f32_addsub(Float32Word a, Float32Word b, bool subtract);
inline Float32Word f32_add(Float32Word a, Float32Word b) { return f32_addsub(a, b, false); }
inline Float32Word f32_sub(Float32Word a, Float32Word b) { return f32_addsub(a, b, true); }

// Reciprocal of a value in [1, 2) (exponent field forced to the bias),
// seeded with 48/17 - 32/17*d and refined by Newton-Raphson steps; the last
// step uses the residual form so its rounding stays below half an ulp.
Float32Word f32_reciprocal_normalized(Float32Word d_norm);

Float32Word f32_div_nr(Float32Word a, Float32Word d);

enum class AdderMode { SumAll, NegateOne };

// Sums five terms plus the constant 1, ascending index. NegateOne negates
// terms[negate_index] before accumulation.
Float32Word multi_term_accumulate(const std::array<Float32Word, 5>& terms, AdderMode mode,
                                  int negate_index = 0);

}  // namespace actcheck::softfloat
