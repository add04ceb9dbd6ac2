#include "actcheck/softfloat.hpp"

namespace actcheck::softfloat {

namespace {

constexpr std::uint32_t kQuietNan = 0x7FC00000u;
constexpr int kBias = 127;

Float32Word make_inf(unsigned sign) { return Float32Word::compose(sign, 0xFF, 0); }
Float32Word make_zero(unsigned sign) { return Float32Word::compose(sign, 0, 0); }

// Assembles sign/exponent/significand from an unbiased exponent and a
// 24-bit significand with the implicit bit set, applying RNE on the low
// `shift` bits of `sig`. Overflow goes to infinity, underflow flushes to
// zero.
Float32Word pack_round(unsigned sign, int exp, std::uint64_t sig, int shift,
                       std::uint64_t sticky_extra) {
    if (sig == 0 && sticky_extra == 0) return make_zero(sign);

    // Normalize so bit (23 + shift) is the leading bit.
    while (sig >> (24 + shift)) {
        sticky_extra |= sig & 1;
        sig >>= 1;
        ++exp;
    }
    while (shift > 0 && !(sig >> (23 + shift))) {
        sig <<= 1;
        --exp;
        // sticky bits stay where they are; they only matter for rounding
        if (exp < -200) break;  // fully cancelled
    }

    std::uint32_t mant;
    if (shift > 0) {
        const std::uint64_t mask = (std::uint64_t{1} << shift) - 1;
        const std::uint64_t low = sig & mask;
        const std::uint64_t half = std::uint64_t{1} << (shift - 1);
        mant = static_cast<std::uint32_t>(sig >> shift);
        const bool sticky = (low & (half - 1)) != 0 || sticky_extra != 0;
        if ((low & half) && (sticky || (mant & 1))) ++mant;
        if (mant >> 24) {
            mant >>= 1;
            ++exp;
        }
    } else {
        mant = static_cast<std::uint32_t>(sig);
    }

    if (mant == 0) return make_zero(sign);
    const int biased = exp + kBias;
    if (biased >= 0xFF) return make_inf(sign);
    if (biased <= 0) return make_zero(sign);  // flush-to-zero
    return Float32Word::compose(sign, static_cast<unsigned>(biased), mant & 0x7FFFFFu);
}

// fl(a - b*c) with the product kept at its full 48-bit width, the way a
// hardware divider taps its multiplier's unrounded result for correction
// steps. Rounding b*c first would cost up to half an ulp of 1.0 and push
// the reciprocal past its error budget.
Float32Word fused_sub_product(Float32Word a, Float32Word b, Float32Word c) {
    if (a.is_nan() || b.is_nan() || c.is_nan() || a.is_inf() || b.is_inf() || c.is_inf()) {
        return f32_sub(a, f32_mul(b, c));
    }
    if (b.is_zero_or_denormal() || c.is_zero_or_denormal()) {
        return a.is_zero_or_denormal() ? make_zero(0) : a;
    }
    if (a.is_zero_or_denormal()) return f32_negate(f32_mul(b, c));

    const unsigned psign = b.sign() ^ c.sign();
    const std::uint64_t pmant = static_cast<std::uint64_t>(b.significand() | 0x800000u) *
                                (c.significand() | 0x800000u);  // [2^46, 2^48)
    const int pgrid = static_cast<int>(b.exponent()) + static_cast<int>(c.exponent()) -
                      2 * kBias - 46;  // value = pmant * 2^pgrid
    const std::uint64_t amant = a.significand() | 0x800000u;
    const int agrid = static_cast<int>(a.exponent()) - kBias - 23;

    const int grid = agrid < pgrid ? agrid : pgrid;
    const int da = agrid - grid;
    const int dp = pgrid - grid;
    if (da > 60 || dp > 60) {
        return f32_sub(a, f32_mul(b, c));  // too disparate for the exact path
    }
    __int128 diff = (static_cast<__int128>(amant) << da) * (a.sign() ? -1 : 1) -
                    (static_cast<__int128>(pmant) << dp) * (psign ? -1 : 1);
    if (diff == 0) return make_zero(0);
    unsigned rsign = 0;
    if (diff < 0) {
        rsign = 1;
        diff = -diff;
    }
    std::uint64_t sticky = 0;
    int exp = grid;
    while (diff >> 62) {
        sticky |= static_cast<std::uint64_t>(diff & 1);
        diff >>= 1;
        ++exp;
    }
    // pack_round with shift 24 reads the leading bit at position 47
    return pack_round(rsign, exp + 47, static_cast<std::uint64_t>(diff), 24, sticky);
}

}  // namespace

Float32Word f32_mul(Float32Word a, Float32Word b) {
    const unsigned sign = a.sign() ^ b.sign();
    if (a.is_nan() || b.is_nan()) return {kQuietNan};
    const bool a_zero = a.is_zero_or_denormal();
    const bool b_zero = b.is_zero_or_denormal();
    if (a.is_inf() || b.is_inf()) {
        if (a_zero || b_zero) return {kQuietNan};  // 0 * inf
        return make_inf(sign);
    }
    if (a_zero || b_zero) return make_zero(sign);

    const std::uint64_t ma = a.significand() | 0x800000u;
    const std::uint64_t mb = b.significand() | 0x800000u;
    const std::uint64_t prod = ma * mb;  // 48 bits
    int exp = static_cast<int>(a.exponent()) + static_cast<int>(b.exponent()) - 2 * kBias;

    // prod is in [2^46, 2^48); bring the leading bit to position 47.
    std::uint64_t sig = prod;
    if (!(sig >> 47)) {
        sig <<= 1;
    } else {
        ++exp;
    }
    // 24 significant bits above a 24-bit rounding tail.
    return pack_round(sign, exp, sig, 24, 0);
}

Float32Word f32_addsub(Float32Word a, Float32Word b, bool subtract) {
    if (subtract) b = f32_negate(b);

    if (a.is_nan() || b.is_nan()) return {kQuietNan};
    if (a.is_inf() && b.is_inf()) {
        if (a.sign() != b.sign()) return {kQuietNan};
        return a;
    }
    if (a.is_inf()) return a;
    if (b.is_inf()) return b;

    const bool a_zero = a.is_zero_or_denormal();
    const bool b_zero = b.is_zero_or_denormal();
    if (a_zero && b_zero) {
        // +0 unless both negative, as in IEEE round-to-nearest.
        return make_zero(a.sign() & b.sign());
    }
    if (a_zero) return b.is_zero_or_denormal() ? make_zero(b.sign()) : b;
    if (b_zero) return a;

    // Work with 24-bit significands extended by 3 guard bits.
    std::uint64_t ma = (static_cast<std::uint64_t>(a.significand()) | 0x800000u) << 3;
    std::uint64_t mb = (static_cast<std::uint64_t>(b.significand()) | 0x800000u) << 3;
    int ea = static_cast<int>(a.exponent());
    int eb = static_cast<int>(b.exponent());
    unsigned sa = a.sign();
    unsigned sb = b.sign();

    if (eb > ea || (eb == ea && mb > ma)) {
        std::swap(ma, mb);
        std::swap(ea, eb);
        std::swap(sa, sb);
    }
    // Align with the shifted-out bits jammed into the low bit; for the
    // subtract path they act as a borrow, so a separate sticky flag would
    // round the wrong way.
    const int diff = ea - eb;
    if (diff > 0) {
        if (diff >= 27) {
            mb = mb != 0 ? 1 : 0;
        } else {
            const std::uint64_t lost = mb & ((std::uint64_t{1} << diff) - 1);
            mb = (mb >> diff) | (lost != 0 ? 1 : 0);
        }
    }

    std::uint64_t sig;
    if (sa == sb) {
        sig = ma + mb;
    } else {
        sig = ma - mb;
        if (sig == 0) return make_zero(0);
    }
    return pack_round(sa, ea - kBias, sig, 3, 0);
}

Float32Word f32_reciprocal_normalized(Float32Word d_norm) {
    // The classical 48/17 - 32/17 * d seed rescaled to the [1, 2)
    // normalization: 24/17 - 8/17 * d, same worst-case error of 1/17.
    // Two full Newton-Raphson updates square that error well below single
    // precision; the final update uses the residual form r + r*(1 - d*r)
    // so its own rounding stays below half an ulp of the result.
    const Float32Word c1 = Float32Word::from_float(24.0f / 17.0f);
    const Float32Word c2 = Float32Word::from_float(8.0f / 17.0f);
    const Float32Word one = Float32Word::from_float(1.0f);
    const Float32Word two = Float32Word::from_float(2.0f);

    Float32Word r = f32_sub(c1, f32_mul(c2, d_norm));
    r = f32_mul(r, f32_sub(two, f32_mul(d_norm, r)));
    r = f32_mul(r, f32_sub(two, f32_mul(d_norm, r)));
    const Float32Word resid = fused_sub_product(one, d_norm, r);
    return f32_add(r, f32_mul(r, resid));
}

Float32Word f32_div_nr(Float32Word a, Float32Word d) {
    const unsigned sign = a.sign() ^ d.sign();
    if (a.is_nan() || d.is_nan()) return {kQuietNan};
    const bool a_zero = a.is_zero_or_denormal();
    const bool d_zero = d.is_zero_or_denormal();
    if (a.is_inf()) {
        if (d.is_inf()) return {kQuietNan};
        return make_inf(sign);
    }
    if (d.is_inf()) return make_zero(sign);
    if (d_zero) {
        if (a_zero) return {kQuietNan};
        return make_inf(sign);
    }
    if (a_zero) return make_zero(sign);

    // Normalize both operands into [1, 2) and divide there; scaling back by
    // the exponent difference is exact apart from overflow/underflow.
    const Float32Word a_norm = Float32Word::compose(0, kBias, a.significand());
    const Float32Word d_norm = Float32Word::compose(0, kBias, d.significand());
    const Float32Word recip = f32_reciprocal_normalized(d_norm);

    Float32Word q = f32_mul(a_norm, recip);
    const Float32Word resid = fused_sub_product(a_norm, d_norm, q);
    q = f32_add(q, f32_mul(resid, recip));

    const int exp = static_cast<int>(q.exponent()) +
                    (static_cast<int>(a.exponent()) - static_cast<int>(d.exponent()));
    if (exp >= 0xFF) return make_inf(sign);
    if (exp <= 0) return make_zero(sign);
    return Float32Word::compose(sign, static_cast<unsigned>(exp), q.significand());
}

Float32Word multi_term_accumulate(const std::array<Float32Word, 5>& terms, AdderMode mode,
                                  int negate_index) {
    Float32Word acc = Float32Word::from_float(1.0f);
    for (int i = 0; i < 5; ++i) {
        Float32Word t = terms[static_cast<std::size_t>(i)];
        if (mode == AdderMode::NegateOne && i == negate_index) t = f32_negate(t);
        acc = f32_add(acc, t);
    }
    return acc;
}

}  // namespace actcheck::softfloat
